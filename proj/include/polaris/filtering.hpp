#pragma once

#include "polaris/estimation.hpp"
#include "polaris/types.hpp"

namespace polaris {

// All subsets of {0..n-1} \ {child} of size 0..k, in size-then-lex order.
std::vector<std::vector<int>> enumerate_candidates(int n, int child, int k);

struct FilterDecision {
    bool accept = true;
    int row = -1;        // offending row when rejected
    double alpha = 1.0;  // its alpha value
};

// Reject iff some supported negative row has alpha < threshold.
FilterDecision alpha_filter(MpnType type, const Dataset& dataset, int child,
                            const std::vector<int>& parent_set, double pseudocount,
                            double threshold = 0.0);

// Same decision computed from a precomputed table (used for the exact-
// probability variant of the filter).
FilterDecision alpha_filter(const AlphaTable& table, double threshold = 0.0);

struct Rejection {
    std::vector<int> parent_set;
    int row = -1;
    double alpha = 0.0;
};

struct CandidateSet {
    int child = 0;
    std::vector<std::vector<int>> parent_sets;  // accepted, size-then-lex
    std::vector<Rejection> rejected;
};

std::vector<CandidateSet> filter_all(MpnType type, const Dataset& dataset, int k,
                                     double pseudocount, double threshold = 0.0);

}  // namespace polaris
