#pragma once

#include <functional>
#include <optional>

#include "polaris/search.hpp"
#include "polaris/synthesis.hpp"

namespace polaris {

struct NodeMismatch : ModelError {
    using ModelError::ModelError;
};

struct EvalResult {
    double recall = 0.0;
    double precision = 0.0;
    double aupr = 0.0;
    int true_edges = 0;
    int learned_edges = 0;
    long runtime_ms = 0;
};

// Directed-edge comparison; precision is 1 when the learned graph is empty.
std::pair<double, double> precision_recall(const Dag& truth, const Dag& learned);

// Sweep a rank cutoff over learned edges sorted by descending confidence;
// step-wise AUPR = sum (R_i - R_{i-1}) * P_i.
double aupr(const Dag& truth,
            const std::vector<std::pair<std::pair<int, int>, double>>& edge_confidences);

// PR-curve points (recall, precision) at each cutoff, for plot export.
std::vector<std::pair<double, double>>
pr_curve(const Dag& truth,
         const std::vector<std::pair<std::pair<int, int>, double>>& edge_confidences);

// One scoring strategy in the grid. "diprog-true" uses the generating
// network's epsilon; "diprog-random" averages over random epsilon draws.
struct ExperimentScore {
    std::string label;  // bic | polaris | diprog-true | diprog-random
};

struct ExperimentConfig {
    std::vector<MpnType> mpn_types{MpnType::CMPN};
    std::vector<double> epsilons{0.15};
    std::vector<long> sample_sizes{200};
    int topologies = 10;
    int resamples_per_topology = 3;
    int n = 10;
    int k = 3;
    std::vector<ExperimentScore> scores{{"bic"}, {"polaris"}, {"diprog-true"}};
    int random_epsilon_draws = 50;
    double random_epsilon_lo = 0.01;
    double random_epsilon_hi = 0.40;
    double pseudocount = 1.0;
    double alpha_threshold = 0.0;
    bool forbid_transitive_edges = true;
    bool require_faithful = false;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ExperimentCell {
    MpnType mpn_type = MpnType::CMPN;
    double epsilon = 0.0;
    long m = 0;
    std::string score_label;
    int replicates = 0;
    double recall_mean = 0.0, recall_stdev = 0.0;
    double precision_mean = 0.0, precision_stdev = 0.0;
    double aupr_mean = 0.0, aupr_stdev = 0.0;
    double aupr_worst = 0.0;  // diprog-random only: worst draw's mean AUPR
    std::vector<EvalResult> replicate_results;
};

// Evaluate one synthesized replicate with one score; shared by the grid and
// the acceptance suite.
EvalResult evaluate_replicate(const Network& truth, const Dataset& data, ScoreKind kind, int k,
                              double pseudocount, double alpha_threshold);

std::vector<ExperimentCell> run_experiment(
    const ExperimentConfig& config, int jobs = 1,
    const std::function<void(const ExperimentCell&)>& on_cell_done = {});

std::string results_to_csv(const std::vector<ExperimentCell>& cells);

}  // namespace polaris
