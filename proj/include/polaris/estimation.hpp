#pragma once

#include "polaris/synthesis.hpp"
#include "polaris/types.hpp"

namespace polaris {

struct AlphaTable {
    int child = 0;
    std::vector<int> parents;
    std::vector<RowClass> row_class;
    std::vector<double> theta_hat;
    double theta_plus_pooled = 0.0;
    std::vector<double> alpha;  // 1 on positive rows
    std::vector<long> support;
};

struct RowCounts {
    std::vector<long> total;   // samples matching each parent assignment
    std::vector<long> child1;  // of those, samples with child = 1
};

RowCounts count_rows(const Dataset& dataset, int child, const std::vector<int>& parents);

// Laplace-style smoothing: theta = (c1 + pc) / (ctot + 2*pc).
// With pc == 0 a zero-support row yields 0.5 by convention.
Cpd estimate_cpd(const Dataset& dataset, int child, const std::vector<int>& parents,
                 double pseudocount);

// Pooled conditional P(child=1 | positive rows), counts pooled before smoothing.
double theta_plus(MpnType type, const Dataset& dataset, int child, const std::vector<int>& parents,
                  double pseudocount);

AlphaTable alpha_table(MpnType type, const Dataset& dataset, int child,
                       const std::vector<int>& parents, double pseudocount);

// Same table with exact probabilities from a known network substituted for
// the empirical estimates; support is left at 0.
AlphaTable alpha_table_exact(const Network& network, int child, const std::vector<int>& parents);

// (theta_plus - theta_minus) / (theta_plus + theta_minus), 0 when both are 0.
double alpha_of(double theta_plus, double theta_minus);

}  // namespace polaris
