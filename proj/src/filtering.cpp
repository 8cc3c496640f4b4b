#include "polaris/filtering.hpp"

namespace polaris {

namespace {
void combinations(int n, int child, int size, int start, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int v = start; v < n; ++v) {
        if (v == child) continue;
        current.push_back(v);
        combinations(n, child, size, v + 1, current, out);
        current.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> enumerate_candidates(int n, int child, int k) {
    if (k < 0 || k >= n) throw ModelError("enumerate_candidates: need 0 <= k < n");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    for (int size = 0; size <= k; ++size) combinations(n, child, size, 0, current, out);
    return out;
}

FilterDecision alpha_filter(const AlphaTable& table, double threshold) {
    for (std::size_t r = 0; r < table.alpha.size(); ++r) {
        if (table.row_class[r] == RowClass::Positive) continue;
        if (table.support[r] == 0) continue;
        if (table.alpha[r] < threshold)
            return {false, static_cast<int>(r), table.alpha[r]};
    }
    return {};
}

FilterDecision alpha_filter(MpnType type, const Dataset& dataset, int child,
                            const std::vector<int>& parent_set, double pseudocount,
                            double threshold) {
    if (parent_set.empty()) return {};
    return alpha_filter(alpha_table(type, dataset, child, parent_set, pseudocount), threshold);
}

std::vector<CandidateSet> filter_all(MpnType type, const Dataset& dataset, int k,
                                     double pseudocount, double threshold) {
    std::vector<CandidateSet> out;
    out.reserve(dataset.n);
    for (int child = 0; child < dataset.n; ++child) {
        CandidateSet cs;
        cs.child = child;
        for (auto& ps : enumerate_candidates(dataset.n, child, k)) {
            if (ps.empty()) {
                cs.parent_sets.push_back(std::move(ps));
                continue;
            }
            const auto decision = alpha_filter(type, dataset, child, ps, pseudocount, threshold);
            if (decision.accept)
                cs.parent_sets.push_back(std::move(ps));
            else
                cs.rejected.push_back({std::move(ps), decision.row, decision.alpha});
        }
        out.push_back(std::move(cs));
    }
    return out;
}

}  // namespace polaris
