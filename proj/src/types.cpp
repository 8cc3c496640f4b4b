#include "polaris/types.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace polaris {

std::string to_string(MpnType t) {
    switch (t) {
        case MpnType::CMPN: return "CMPN";
        case MpnType::DMPN: return "DMPN";
        case MpnType::XMPN: return "XMPN";
    }
    return "?";
}

MpnType mpn_type_from_string(const std::string& s) {
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "CMPN") return MpnType::CMPN;
    if (u == "DMPN") return MpnType::DMPN;
    if (u == "XMPN") return MpnType::XMPN;
    throw ModelError("unknown MPN type: " + s);
}

RowClass row_class(MpnType type, std::uint32_t row, int n_parents) {
    if (n_parents == 0) return RowClass::Positive;
    const int ones = std::popcount(row);
    switch (type) {
        case MpnType::CMPN: return ones == n_parents ? RowClass::Positive : RowClass::Negative;
        case MpnType::DMPN: return ones > 0 ? RowClass::Positive : RowClass::Negative;
        case MpnType::XMPN: return ones == 1 ? RowClass::Positive : RowClass::Negative;
    }
    return RowClass::Negative;
}

bool Dag::has_edge(int from, int to) const {
    const auto& ps = parent_sets[to];
    return std::binary_search(ps.begin(), ps.end(), from);
}

int Dag::edge_count() const {
    int c = 0;
    for (const auto& ps : parent_sets) c += static_cast<int>(ps.size());
    return c;
}

void validate_dag(const Dag& dag) {
    if (dag.n < 0) throw ModelError("negative node count");
    if (static_cast<int>(dag.parent_sets.size()) != dag.n)
        throw ModelError("parent_sets size != n");
    if (!dag.names.empty() && static_cast<int>(dag.names.size()) != dag.n)
        throw ModelError("names size != n");
    for (int v = 0; v < dag.n; ++v) {
        int prev = -1;
        for (int p : dag.parent_sets[v]) {
            if (p < 0 || p >= dag.n)
                throw ModelError("parent index out of range at node " + std::to_string(v));
            if (p == v) throw ModelError("self-loop at node " + std::to_string(v));
            if (p == prev) throw ModelError("duplicate parent at node " + std::to_string(v));
            if (p < prev) throw ModelError("parents not in ascending order at node " + std::to_string(v));
            prev = p;
        }
    }
    topological_order(dag);  // throws CycleDetected on a cycle
}

std::vector<int> topological_order(const Dag& dag) {
    std::vector<int> indeg(dag.n, 0);
    std::vector<std::vector<int>> children(dag.n);
    for (int v = 0; v < dag.n; ++v) {
        indeg[v] = static_cast<int>(dag.parent_sets[v].size());
        for (int p : dag.parent_sets[v]) children[p].push_back(v);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < dag.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(dag.n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int c : children[v])
            if (--indeg[c] == 0) ready.push(c);
    }
    if (static_cast<int>(order.size()) != dag.n) {
        // Name one offending cycle member for diagnostics.
        for (int v = 0; v < dag.n; ++v)
            if (indeg[v] > 0)
                throw CycleDetected("cycle detected involving node " + std::to_string(v));
        throw CycleDetected("cycle detected");
    }
    return order;
}

bool Network::conformant() const {
    for (const auto& cpd : cpds) {
        const int np = static_cast<int>(cpd.parents.size());
        if (np == 0) continue;  // roots are unconstrained
        for (std::uint32_t r = 0; r < cpd.rows.size(); ++r) {
            if (row_class(mpn_type, r, np) == RowClass::Positive) {
                if (!(cpd.rows[r] > epsilon)) return false;
            } else {
                if (!(cpd.rows[r] <= epsilon)) return false;
            }
        }
    }
    return true;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

}  // namespace polaris
