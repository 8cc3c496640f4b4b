#pragma once

#include "polaris/filtering.hpp"
#include "polaris/scoring.hpp"
#include "polaris/types.hpp"

namespace polaris {

struct InfeasibleCache : ModelError {
    using ModelError::ModelError;
};

struct CacheEntry {
    std::uint32_t mask = 0;  // parent set as a bitmask over n nodes
    double score = 0.0;
};

struct LocalScoreCache {
    int n = 0;
    int k = 0;
    ScoreKind kind;
    std::vector<std::vector<CacheEntry>> entries;  // per node, size-then-lex by set

    std::size_t total_entries() const;
};

constexpr int kMaxParentsLimit = 5;
constexpr int kSearchNodeLimit = 25;

std::uint32_t parent_set_mask(const std::vector<int>& parents);
std::vector<int> mask_to_parents(std::uint32_t mask);

// Scores all alpha-filter-accepted candidate parent sets. Sets whose score
// is -inf (impossible samples, or a non-positive alpha that slipped past a
// non-default threshold) are dropped from the cache.
LocalScoreCache build_cache(MpnType type, const Dataset& dataset, int k, ScoreKind kind,
                            double pseudocount, double threshold = 0.0);

// As above but without the alpha filter (all enumerated sets scored).
LocalScoreCache build_cache_unfiltered(MpnType type, const Dataset& dataset, int k, ScoreKind kind,
                                       double pseudocount);

// Exact maximization over DAGs assembled from cache entries, by dynamic
// programming over node subsets. Ties broken toward lexicographically
// smaller parent-set masks, then lower sink index.
std::pair<Dag, double> exact_search(const LocalScoreCache& cache,
                                    const std::vector<std::string>& names = {});

struct LearnDiagnostics {
    long rejected_hypotheses = 0;
    long cache_entries = 0;
    double runtime_ms = 0.0;
    double best_score = 0.0;
    std::vector<std::pair<std::pair<int, int>, FoldChange>> edge_fold_changes;
};

struct LearnResult {
    Dag dag;
    Network network;  // learned structure with estimated CPDs
    LearnDiagnostics diagnostics;
    std::vector<CandidateSet> filter;  // per-node accept/reject detail
};

LearnResult learn(const Dataset& dataset, MpnType type, ScoreKind kind, int k, double pseudocount,
                  double threshold = 0.0);

}  // namespace polaris
