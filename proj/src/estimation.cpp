#include "polaris/estimation.hpp"

#include <algorithm>

namespace polaris {

RowCounts count_rows(const Dataset& dataset, int child, const std::vector<int>& parents) {
    if (child < 0 || child >= dataset.n) throw ModelError("count_rows: child out of range");
    for (int p : parents) {
        if (p < 0 || p >= dataset.n) throw ModelError("count_rows: parent out of range");
        if (p == child) throw ModelError("count_rows: child cannot be its own parent");
    }
    const std::size_t nrows = std::size_t{1} << parents.size();
    RowCounts counts;
    counts.total.assign(nrows, 0);
    counts.child1.assign(nrows, 0);
    for (long i = 0; i < dataset.m; ++i) {
        std::uint32_t r = 0;
        for (std::size_t b = 0; b < parents.size(); ++b)
            if (dataset.at(i, parents[b])) r |= (1u << b);
        ++counts.total[r];
        if (dataset.at(i, child)) ++counts.child1[r];
    }
    return counts;
}

namespace {
double smoothed(long c1, long ctot, double pc) {
    if (pc == 0.0 && ctot == 0) return 0.5;
    return (static_cast<double>(c1) + pc) / (static_cast<double>(ctot) + 2.0 * pc);
}
}  // namespace

Cpd estimate_cpd(const Dataset& dataset, int child, const std::vector<int>& parents,
                 double pseudocount) {
    const auto counts = count_rows(dataset, child, parents);
    Cpd cpd;
    cpd.child = child;
    cpd.parents = parents;
    const std::size_t nrows = counts.total.size();
    cpd.rows.resize(nrows);
    cpd.support.resize(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        cpd.rows[r] = smoothed(counts.child1[r], counts.total[r], pseudocount);
        cpd.support[r] = counts.total[r];
    }
    return cpd;
}

double theta_plus(MpnType type, const Dataset& dataset, int child, const std::vector<int>& parents,
                  double pseudocount) {
    if (parents.empty()) throw ModelError("theta_plus requires at least one parent");
    const auto counts = count_rows(dataset, child, parents);
    const int np = static_cast<int>(parents.size());
    long pooled_total = 0, pooled_child1 = 0;
    for (std::uint32_t r = 0; r < counts.total.size(); ++r) {
        if (row_class(type, r, np) == RowClass::Positive) {
            pooled_total += counts.total[r];
            pooled_child1 += counts.child1[r];
        }
    }
    return smoothed(pooled_child1, pooled_total, pseudocount);
}

double alpha_of(double tp, double tm) {
    const double denom = tp + tm;
    if (denom == 0.0) return 0.0;
    return (tp - tm) / denom;
}

AlphaTable alpha_table(MpnType type, const Dataset& dataset, int child,
                       const std::vector<int>& parents, double pseudocount) {
    const auto counts = count_rows(dataset, child, parents);
    const int np = static_cast<int>(parents.size());
    const std::size_t nrows = counts.total.size();
    AlphaTable t;
    t.child = child;
    t.parents = parents;
    t.row_class.resize(nrows);
    t.theta_hat.resize(nrows);
    t.alpha.resize(nrows);
    t.support.assign(counts.total.begin(), counts.total.end());
    t.theta_plus_pooled = np > 0 ? theta_plus(type, dataset, child, parents, pseudocount)
                                 : smoothed(counts.child1[0], counts.total[0], pseudocount);
    for (std::uint32_t r = 0; r < nrows; ++r) {
        t.row_class[r] = row_class(type, r, np);
        t.theta_hat[r] = smoothed(counts.child1[r], counts.total[r], pseudocount);
        t.alpha[r] = t.row_class[r] == RowClass::Positive
                         ? 1.0
                         : alpha_of(t.theta_plus_pooled, t.theta_hat[r]);
    }
    return t;
}

AlphaTable alpha_table_exact(const Network& network, int child, const std::vector<int>& parents) {
    const auto exact = exact_row_probabilities(network, child, parents);
    const int np = static_cast<int>(parents.size());
    const std::size_t nrows = exact.p_row.size();
    AlphaTable t;
    t.child = child;
    t.parents = parents;
    t.row_class.resize(nrows);
    t.theta_hat = exact.p_child_given;
    t.alpha.resize(nrows);
    // support doubles as a realizability flag here: rows with zero exact
    // probability are exempt from filtering just like unobserved rows.
    t.support.resize(nrows);
    for (std::uint32_t r = 0; r < nrows; ++r) t.support[r] = exact.p_row[r] > 0.0 ? 1 : 0;
    double pos_mass = 0.0, pos_joint = 0.0;
    for (std::uint32_t r = 0; r < nrows; ++r) {
        t.row_class[r] = row_class(network.mpn_type, r, np);
        if (np > 0 && t.row_class[r] == RowClass::Positive) {
            pos_mass += exact.p_row[r];
            pos_joint += exact.p_row[r] * exact.p_child_given[r];
        }
    }
    t.theta_plus_pooled = np > 0 ? (pos_mass > 0.0 ? pos_joint / pos_mass : 0.5) : t.theta_hat[0];
    for (std::uint32_t r = 0; r < nrows; ++r)
        t.alpha[r] = t.row_class[r] == RowClass::Positive
                         ? 1.0
                         : alpha_of(t.theta_plus_pooled, t.theta_hat[r]);
    return t;
}

}  // namespace polaris
