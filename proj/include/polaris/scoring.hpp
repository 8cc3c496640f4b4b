#pragma once

#include "polaris/estimation.hpp"
#include "polaris/types.hpp"

namespace polaris {

struct NonPositiveAlpha : ModelError {
    using ModelError::ModelError;
};
struct EdgeNotPresent : ModelError {
    using ModelError::ModelError;
};

struct ScoreKind {
    enum class Kind { BIC, POLARIS, DIPROG };
    Kind kind = Kind::BIC;
    double epsilon = 0.0;  // DIPROG only

    static ScoreKind bic() { return {Kind::BIC, 0.0}; }
    static ScoreKind polaris() { return {Kind::POLARIS, 0.0}; }
    static ScoreKind diprog(double epsilon);
    std::string name() const;
};

struct LocalScore {
    int child = 0;
    std::vector<int> parents;
    double ll = 0.0;
    double alpha_term = 0.0;  // sum of log alpha over samples matching negative rows
    long dim = 1;             // 2^|parents|
    double total = 0.0;
};

// Natural-log likelihood of the child column under the smoothed CPD.
double log_likelihood_local(const Dataset& dataset, int child, const std::vector<int>& parents,
                            double pseudocount);

LocalScore bic_local(const Dataset& dataset, int child, const std::vector<int>& parents,
                     double pseudocount);

// Sum over samples of 1(parents match a negative row) * ln(alpha of that row).
// Throws NonPositiveAlpha if a supported negative row has alpha <= 0.
double alpha_term_local(MpnType type, const Dataset& dataset, int child,
                        const std::vector<int>& parents, double pseudocount);

LocalScore polaris_local(MpnType type, const Dataset& dataset, int child,
                         const std::vector<int>& parents, double pseudocount);

// Clairvoyant score: negative-row estimates clamped to min(theta, epsilon)
// before the likelihood.
LocalScore diprog_local(MpnType type, const Dataset& dataset, int child,
                        const std::vector<int>& parents, double epsilon, double pseudocount);

LocalScore local_score(ScoreKind kind, MpnType type, const Dataset& dataset, int child,
                       const std::vector<int>& parents, double pseudocount);

double network_score(const Dataset& dataset, const Dag& dag, MpnType type, ScoreKind kind,
                     double pseudocount);

struct FoldChange {
    double ratio = 0.0;  // score(G \ e) / score(G); > 1 when removal hurts
    double delta = 0.0;  // score(G) - score(G \ e); > 0 when removal hurts
};

FoldChange edge_fold_change(const Dataset& dataset, const Dag& dag, MpnType type, ScoreKind kind,
                            int from, int to, double pseudocount);

}  // namespace polaris
