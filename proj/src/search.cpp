#include "polaris/search.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace polaris {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::size_t LocalScoreCache::total_entries() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.size();
    return total;
}

std::uint32_t parent_set_mask(const std::vector<int>& parents) {
    std::uint32_t mask = 0;
    for (int p : parents) mask |= (1u << p);
    return mask;
}

std::vector<int> mask_to_parents(std::uint32_t mask) {
    std::vector<int> parents;
    for (int v = 0; v < 32; ++v)
        if (mask & (1u << v)) parents.push_back(v);
    return parents;
}

namespace {

LocalScoreCache cache_from_candidates(MpnType type, const Dataset& dataset, int k, ScoreKind kind,
                                      double pseudocount,
                                      const std::vector<CandidateSet>& candidates) {
    LocalScoreCache cache;
    cache.n = dataset.n;
    cache.k = k;
    cache.kind = kind;
    cache.entries.resize(dataset.n);
    for (const auto& cs : candidates) {
        for (const auto& ps : cs.parent_sets) {
            double score;
            try {
                score = local_score(kind, type, dataset, cs.child, ps, pseudocount).total;
            } catch (const NonPositiveAlpha&) {
                continue;
            }
            if (std::isinf(score) && score < 0) continue;
            cache.entries[cs.child].push_back({parent_set_mask(ps), score});
        }
    }
    return cache;
}

}  // namespace

LocalScoreCache build_cache(MpnType type, const Dataset& dataset, int k, ScoreKind kind,
                            double pseudocount, double threshold) {
    if (k > kMaxParentsLimit)
        throw ModelError("build_cache: max parents limited to " + std::to_string(kMaxParentsLimit));
    const auto candidates = filter_all(type, dataset, k, pseudocount, threshold);
    return cache_from_candidates(type, dataset, k, kind, pseudocount, candidates);
}

LocalScoreCache build_cache_unfiltered(MpnType type, const Dataset& dataset, int k, ScoreKind kind,
                                       double pseudocount) {
    if (k > kMaxParentsLimit)
        throw ModelError("build_cache: max parents limited to " + std::to_string(kMaxParentsLimit));
    std::vector<CandidateSet> candidates;
    for (int child = 0; child < dataset.n; ++child) {
        CandidateSet cs;
        cs.child = child;
        cs.parent_sets = enumerate_candidates(dataset.n, child, k);
        candidates.push_back(std::move(cs));
    }
    return cache_from_candidates(type, dataset, k, kind, pseudocount, candidates);
}

std::pair<Dag, double> exact_search(const LocalScoreCache& cache, const std::vector<std::string>& names) {
    const int n = cache.n;
    if (n < 1) throw InfeasibleCache("empty cache");
    if (n > kSearchNodeLimit)
        throw TooLarge("exact_search limited to n <= " + std::to_string(kSearchNodeLimit));
    for (int v = 0; v < n; ++v)
        if (cache.entries[v].empty())
            throw InfeasibleCache("node " + std::to_string(v) + " has no cache entries");

    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    const std::size_t size = std::size_t{1} << n;

    // Best achievable local score for each node over parent sets contained in
    // a predecessor subset, with the realizing (lexicographically smallest)
    // mask; standard subset superset-max transform.
    std::vector<std::vector<double>> best(n, std::vector<double>(size, kNegInf));
    std::vector<std::vector<std::uint32_t>> best_mask(n, std::vector<std::uint32_t>(size, 0));
    for (int v = 0; v < n; ++v) {
        for (const auto& e : cache.entries[v]) {
            auto& b = best[v][e.mask];
            if (e.score > b || (e.score == b && e.mask < best_mask[v][e.mask])) {
                b = e.score;
                best_mask[v][e.mask] = e.mask;
            }
        }
        for (std::uint32_t s = 1; s <= full; ++s) {
            for (std::uint32_t bits = s; bits;) {
                const std::uint32_t bit = bits & (~bits + 1);
                bits ^= bit;
                const std::uint32_t sub = s ^ bit;
                if (best[v][sub] > best[v][s] ||
                    (best[v][sub] == best[v][s] && best_mask[v][sub] < best_mask[v][s]))
                {
                    best[v][s] = best[v][sub];
                    best_mask[v][s] = best_mask[v][sub];
                }
            }
            if (s == full) break;
        }
    }

    // Sink DP over subsets: dp[S] = best score over DAGs on the nodes in S.
    std::vector<double> dp(size, kNegInf);
    std::vector<std::int8_t> choice(size, -1);
    dp[0] = 0.0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = 1u << v;
            if (!(s & bit)) continue;
            const std::uint32_t rest = s ^ bit;
            if (dp[rest] == kNegInf || best[v][rest] == kNegInf) continue;
            const double cand = dp[rest] + best[v][rest];
            if (cand > dp[s]) {
                dp[s] = cand;
                choice[s] = static_cast<std::int8_t>(v);
            }
        }
        if (s == full) break;
    }
    if (dp[full] == kNegInf) throw InfeasibleCache("no feasible DAG from cache entries");

    Dag dag;
    dag.n = n;
    dag.parent_sets.resize(n);
    dag.names = names.empty() ? default_names(n) : names;
    std::uint32_t s = full;
    while (s) {
        const int v = choice[s];
        const std::uint32_t rest = s ^ (1u << v);
        dag.parent_sets[v] = mask_to_parents(best_mask[v][rest]);
        s = rest;
    }
    return {std::move(dag), dp[full]};
}

LearnResult learn(const Dataset& dataset, MpnType type, ScoreKind kind, int k, double pseudocount,
                  double threshold) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k > kMaxParentsLimit)
        throw ModelError("learn: max parents limited to " + std::to_string(kMaxParentsLimit));
    LearnResult result;
    result.filter = filter_all(type, dataset, k, pseudocount, threshold);
    for (const auto& cs : result.filter)
        result.diagnostics.rejected_hypotheses += static_cast<long>(cs.rejected.size());
    const auto cache =
        cache_from_candidates(type, dataset, k, kind, pseudocount, result.filter);
    result.diagnostics.cache_entries = static_cast<long>(cache.total_entries());
    auto [dag, score] = exact_search(cache, dataset.names);
    result.diagnostics.best_score = score;
    result.dag = std::move(dag);

    result.network.dag = result.dag;
    result.network.mpn_type = type;
    result.network.epsilon = kind.kind == ScoreKind::Kind::DIPROG ? kind.epsilon : 0.0;
    for (int v = 0; v < result.dag.n; ++v)
        result.network.cpds.push_back(
            estimate_cpd(dataset, v, result.dag.parent_sets[v], pseudocount));

    for (int v = 0; v < result.dag.n; ++v) {
        for (int p : result.dag.parent_sets[v]) {
            FoldChange fc;
            try {
                fc = edge_fold_change(dataset, result.dag, type, kind, p, v, pseudocount);
            } catch (const NonPositiveAlpha&) {
                // removing the edge exposes a non-monotone subset; removal is
                // inadmissible, so the edge is maximally confident
                fc.delta = std::numeric_limits<double>::infinity();
                fc.ratio = std::numeric_limits<double>::infinity();
            }
            result.diagnostics.edge_fold_changes.push_back({{p, v}, fc});
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.diagnostics.runtime_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

}  // namespace polaris
