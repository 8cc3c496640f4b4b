#include "polaris/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polaris {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double ll_from_counts(const RowCounts& counts, const std::vector<double>& theta) {
    double ll = 0.0;
    for (std::size_t r = 0; r < theta.size(); ++r) {
        const long c1 = counts.child1[r];
        const long c0 = counts.total[r] - counts.child1[r];
        if (c1 > 0) {
            if (theta[r] == 0.0) return kNegInf;
            ll += c1 * std::log(theta[r]);
        }
        if (c0 > 0) {
            if (theta[r] == 1.0) return kNegInf;
            ll += c0 * std::log(1.0 - theta[r]);
        }
    }
    return ll;
}

double bic_penalty(long m, std::size_t n_parents) {
    return 0.5 * std::log(static_cast<double>(m)) * static_cast<double>(std::size_t{1} << n_parents);
}
}  // namespace

ScoreKind ScoreKind::diprog(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ModelError("diprog score requires epsilon in (0,1)");
    return {Kind::DIPROG, epsilon};
}

std::string ScoreKind::name() const {
    switch (kind) {
        case Kind::BIC: return "bic";
        case Kind::POLARIS: return "polaris";
        case Kind::DIPROG: return "diprog";
    }
    return "?";
}

double log_likelihood_local(const Dataset& dataset, int child, const std::vector<int>& parents,
                            double pseudocount) {
    const auto counts = count_rows(dataset, child, parents);
    const auto cpd = estimate_cpd(dataset, child, parents, pseudocount);
    return ll_from_counts(counts, cpd.rows);
}

LocalScore bic_local(const Dataset& dataset, int child, const std::vector<int>& parents,
                     double pseudocount) {
    LocalScore s;
    s.child = child;
    s.parents = parents;
    s.ll = log_likelihood_local(dataset, child, parents, pseudocount);
    s.alpha_term = 0.0;
    s.dim = static_cast<long>(std::size_t{1} << parents.size());
    s.total = s.ll - bic_penalty(dataset.m, parents.size());
    return s;
}

double alpha_term_local(MpnType type, const Dataset& dataset, int child,
                        const std::vector<int>& parents, double pseudocount) {
    if (parents.empty()) return 0.0;
    const auto table = alpha_table(type, dataset, child, parents, pseudocount);
    double term = 0.0;
    for (std::size_t r = 0; r < table.alpha.size(); ++r) {
        if (table.row_class[r] == RowClass::Positive) continue;  // ln 1 = 0
        if (table.support[r] == 0) continue;
        if (table.alpha[r] <= 0.0)
            throw NonPositiveAlpha("non-positive alpha on a supported negative row (child " +
                                   std::to_string(child) + ", row " + std::to_string(r) + ")");
        term += static_cast<double>(table.support[r]) * std::log(table.alpha[r]);
    }
    return term;
}

LocalScore polaris_local(MpnType type, const Dataset& dataset, int child,
                         const std::vector<int>& parents, double pseudocount) {
    LocalScore s = bic_local(dataset, child, parents, pseudocount);
    s.alpha_term = alpha_term_local(type, dataset, child, parents, pseudocount);
    s.total = s.ll + s.alpha_term / static_cast<double>(dataset.m) - bic_penalty(dataset.m, parents.size());
    return s;
}

LocalScore diprog_local(MpnType type, const Dataset& dataset, int child,
                        const std::vector<int>& parents, double epsilon, double pseudocount) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ModelError("diprog_local: epsilon must be in (0,1]");
    const auto counts = count_rows(dataset, child, parents);
    auto cpd = estimate_cpd(dataset, child, parents, pseudocount);
    const int np = static_cast<int>(parents.size());
    for (std::uint32_t r = 0; r < cpd.rows.size(); ++r)
        if (np > 0 && row_class(type, r, np) == RowClass::Negative)
            cpd.rows[r] = std::min(cpd.rows[r], epsilon);
    LocalScore s;
    s.child = child;
    s.parents = parents;
    s.ll = ll_from_counts(counts, cpd.rows);
    s.alpha_term = 0.0;
    s.dim = static_cast<long>(std::size_t{1} << parents.size());
    s.total = s.ll - bic_penalty(dataset.m, parents.size());
    return s;
}

LocalScore local_score(ScoreKind kind, MpnType type, const Dataset& dataset, int child,
                       const std::vector<int>& parents, double pseudocount) {
    switch (kind.kind) {
        case ScoreKind::Kind::BIC: return bic_local(dataset, child, parents, pseudocount);
        case ScoreKind::Kind::POLARIS: return polaris_local(type, dataset, child, parents, pseudocount);
        case ScoreKind::Kind::DIPROG:
            return diprog_local(type, dataset, child, parents, kind.epsilon, pseudocount);
    }
    throw ModelError("unknown score kind");
}

double network_score(const Dataset& dataset, const Dag& dag, MpnType type, ScoreKind kind,
                     double pseudocount) {
    validate_dag(dag);
    double total = 0.0;
    for (int v = 0; v < dag.n; ++v)
        total += local_score(kind, type, dataset, v, dag.parent_sets[v], pseudocount).total;
    return total;
}

FoldChange edge_fold_change(const Dataset& dataset, const Dag& dag, MpnType type, ScoreKind kind,
                            int from, int to, double pseudocount) {
    if (to < 0 || to >= dag.n || !dag.has_edge(from, to))
        throw EdgeNotPresent("edge " + std::to_string(from) + "->" + std::to_string(to) +
                             " not in graph");
    const double full = network_score(dataset, dag, type, kind, pseudocount);
    Dag without = dag;
    auto& ps = without.parent_sets[to];
    ps.erase(std::find(ps.begin(), ps.end(), from));
    const double reduced = network_score(dataset, without, type, kind, pseudocount);
    FoldChange fc;
    fc.delta = full - reduced;
    fc.ratio = full != 0.0 ? reduced / full : 1.0;
    return fc;
}

}  // namespace polaris
