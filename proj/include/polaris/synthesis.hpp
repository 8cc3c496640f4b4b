#pragma once

#include "polaris/rng.hpp"
#include "polaris/types.hpp"

namespace polaris {

struct InfeasibleConfig : ModelError {
    using ModelError::ModelError;
};

struct SynthesisConfig {
    int n = 10;
    int max_parents = 3;
    MpnType mpn_type = MpnType::CMPN;
    double epsilon = 0.0;
    double theta_pos_lo = 0.0;  // exclusive; must be > epsilon
    double theta_pos_hi = 1.0;
    double theta_neg_lo = 0.0;
    double theta_neg_hi = 0.0;  // must be <= epsilon
    double root_marginal_lo = 0.3;
    double root_marginal_hi = 0.7;
    bool forbid_transitive_edges = false;
    bool require_faithful = false;  // rejection-sample until ancestor marginals dominate
    std::uint64_t seed = 0;

    void validate() const;
    // Defaults theta ranges from epsilon when left at their zero values.
    static SynthesisConfig for_epsilon(MpnType type, double epsilon, std::uint64_t seed, int n = 10,
                                       int max_parents = 3);
};

// Edge (u,w) with a longer directed path u -> ... -> w also present.
bool has_transitive_edge(const Dag& dag);

Dag random_dag(const SynthesisConfig& config, Rng& rng);

Network random_mpn(const Dag& dag, const SynthesisConfig& config, Rng& rng);

// random_dag + random_mpn, honoring forbid_transitive_edges / require_faithful
// by rejection over whole networks.
Network random_network(const SynthesisConfig& config, Rng& rng);

Dataset sample(const Network& network, long m, Rng& rng);

// Exact marginals P(X_i = 1) by full joint enumeration; guarded at n <= 22.
std::vector<double> exact_marginals(const Network& network);

// P(parent assignment = row r) and P(child=1 | row r) for an arbitrary
// candidate parent set, from the exact joint.
struct ExactRowProbabilities {
    std::vector<double> p_row;          // 2^|parents|
    std::vector<double> p_child_given;  // conditional; 0.5 where p_row == 0
};
ExactRowProbabilities exact_row_probabilities(const Network& network, int child,
                                              const std::vector<int>& parents);

// True iff every edge satisfies P(parent) > P(child) under the exact marginals.
bool faithful_temporal_priority(const Network& network);

}  // namespace polaris
