#include "polaris/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace polaris {

namespace {
constexpr int kDagRetries = 2000;
constexpr int kNetworkRetries = 20000;
constexpr int kMarginalGuard = 22;
}  // namespace

void SynthesisConfig::validate() const {
    if (n < 1) throw InfeasibleConfig("n must be >= 1");
    if (max_parents < 1) throw InfeasibleConfig("max_parents must be >= 1");
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw InfeasibleConfig("epsilon must be in [0,1)");
    if (!(theta_pos_lo > epsilon)) throw InfeasibleConfig("theta_pos_range.lo must be > epsilon");
    if (theta_pos_hi < theta_pos_lo) throw InfeasibleConfig("theta_pos_range inverted");
    if (theta_pos_hi > 1.0) throw InfeasibleConfig("theta_pos_range.hi must be <= 1");
    if (theta_neg_lo < 0.0 || theta_neg_hi < theta_neg_lo)
        throw InfeasibleConfig("theta_neg_range invalid");
    if (theta_neg_hi > epsilon) throw InfeasibleConfig("theta_neg_range.hi must be <= epsilon");
    if (!(root_marginal_lo > 0.0 && root_marginal_hi < 1.0 && root_marginal_lo <= root_marginal_hi))
        throw InfeasibleConfig("root_marginal_range must be within (0,1)");
}

SynthesisConfig SynthesisConfig::for_epsilon(MpnType type, double epsilon, std::uint64_t seed, int n,
                                             int max_parents) {
    SynthesisConfig c;
    c.n = n;
    c.max_parents = max_parents;
    c.mpn_type = type;
    c.epsilon = epsilon;
    c.theta_pos_lo = std::min(epsilon + 0.3, 0.9);
    c.theta_pos_hi = 0.95;
    c.theta_neg_lo = 0.0;
    c.theta_neg_hi = epsilon;
    c.root_marginal_lo = 0.3;
    c.root_marginal_hi = 0.7;
    c.seed = seed;
    return c;
}

bool has_transitive_edge(const Dag& dag) {
    // Reachability by >= 2 step paths: reach2[u] = nodes reachable from u
    // without using the direct edge. Small n; plain DFS per edge is fine.
    std::vector<std::vector<int>> children(dag.n);
    for (int v = 0; v < dag.n; ++v)
        for (int p : dag.parent_sets[v]) children[p].push_back(v);
    for (int w = 0; w < dag.n; ++w) {
        for (int u : dag.parent_sets[w]) {
            // path u -> x -> ... -> w avoiding the direct edge
            std::vector<char> seen(dag.n, 0);
            std::vector<int> stack;
            for (int x : children[u])
                if (x != w) stack.push_back(x);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (seen[x]) continue;
                seen[x] = 1;
                if (x == w) return true;
                for (int y : children[x]) stack.push_back(y);
            }
        }
    }
    return false;
}

Dag random_dag(const SynthesisConfig& config, Rng& rng) {
    config.validate();
    for (int attempt = 0; attempt < kDagRetries; ++attempt) {
        // Random permutation as topological order.
        std::vector<int> order(config.n);
        for (int i = 0; i < config.n; ++i) order[i] = i;
        for (int i = config.n - 1; i > 0; --i)
            std::swap(order[i], order[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);

        Dag dag;
        dag.n = config.n;
        dag.parent_sets.resize(config.n);
        dag.names = default_names(config.n);
        for (int pos = 0; pos < config.n; ++pos) {
            const int v = order[pos];
            const int avail = std::min(pos, config.max_parents);
            const int count = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(avail) + 1));
            std::vector<int> pool(order.begin(), order.begin() + pos);
            for (int i = 0; i < count; ++i)
                std::swap(pool[i], pool[i + rng.next_below(static_cast<std::uint64_t>(pos - i))]);
            dag.parent_sets[v].assign(pool.begin(), pool.begin() + count);
            std::sort(dag.parent_sets[v].begin(), dag.parent_sets[v].end());
        }
        if (config.forbid_transitive_edges && has_transitive_edge(dag)) continue;
        return dag;
    }
    throw InfeasibleConfig("random_dag: could not satisfy constraints after retries");
}

Network random_mpn(const Dag& dag, const SynthesisConfig& config, Rng& rng) {
    config.validate();
    validate_dag(dag);
    Network net;
    net.dag = dag;
    net.mpn_type = config.mpn_type;
    net.epsilon = config.epsilon;
    net.cpds.resize(dag.n);
    for (int v = 0; v < dag.n; ++v) {
        Cpd& cpd = net.cpds[v];
        cpd.child = v;
        cpd.parents = dag.parent_sets[v];
        const int np = static_cast<int>(cpd.parents.size());
        const std::size_t nrows = std::size_t{1} << np;
        cpd.rows.resize(nrows);
        cpd.support.assign(nrows, 0);
        for (std::uint32_t r = 0; r < nrows; ++r) {
            if (np == 0) {
                cpd.rows[r] = rng.uniform(config.root_marginal_lo, config.root_marginal_hi);
            } else if (row_class(config.mpn_type, r, np) == RowClass::Positive) {
                // (lo, hi]: flip the half-open side of the uniform draw
                cpd.rows[r] = config.theta_pos_hi -
                              (config.theta_pos_hi - config.theta_pos_lo) * rng.next_double();
            } else {
                cpd.rows[r] = rng.uniform(config.theta_neg_lo, config.theta_neg_hi);
            }
        }
    }
    return net;
}

Network random_network(const SynthesisConfig& config, Rng& rng) {
    for (int attempt = 0; attempt < kNetworkRetries; ++attempt) {
        Dag dag = random_dag(config, rng);
        Network net = random_mpn(dag, config, rng);
        if (config.require_faithful && !faithful_temporal_priority(net)) continue;
        return net;
    }
    throw InfeasibleConfig("random_network: faithfulness rejection exhausted retries");
}

Dataset sample(const Network& network, long m, Rng& rng) {
    if (m < 1) throw ModelError("sample: m must be >= 1");
    validate_dag(network.dag);
    const auto order = topological_order(network.dag);
    Dataset ds;
    ds.m = m;
    ds.n = network.dag.n;
    ds.names = network.dag.names.empty() ? default_names(ds.n) : network.dag.names;
    ds.values.assign(static_cast<std::size_t>(m) * ds.n, 0);
    for (long i = 0; i < m; ++i) {
        for (int v : order) {
            const Cpd& cpd = network.cpds[v];
            std::uint32_t r = 0;
            for (std::size_t b = 0; b < cpd.parents.size(); ++b)
                if (ds.at(i, cpd.parents[b])) r |= (1u << b);
            ds.at(i, v) = rng.next_double() < cpd.rows[r] ? 1 : 0;
        }
    }
    return ds;
}

namespace {

template <typename Visit>
void enumerate_joint(const Network& network, Visit&& visit) {
    const int n = network.dag.n;
    if (n > kMarginalGuard)
        throw TooLarge("exact joint enumeration limited to n <= " + std::to_string(kMarginalGuard));
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        double p = 1.0;
        for (int v = 0; v < n; ++v) {
            const Cpd& cpd = network.cpds[v];
            std::uint32_t r = 0;
            for (std::size_t b = 0; b < cpd.parents.size(); ++b)
                if (mask & (1u << cpd.parents[b])) r |= (1u << b);
            const double pv = cpd.rows[r];
            p *= (mask & (1u << v)) ? pv : 1.0 - pv;
            if (p == 0.0) break;
        }
        visit(mask, p);
    }
}

}  // namespace

std::vector<double> exact_marginals(const Network& network) {
    std::vector<double> marg(network.dag.n, 0.0);
    enumerate_joint(network, [&](std::uint32_t mask, double p) {
        for (int v = 0; v < network.dag.n; ++v)
            if (mask & (1u << v)) marg[v] += p;
    });
    return marg;
}

ExactRowProbabilities exact_row_probabilities(const Network& network, int child,
                                              const std::vector<int>& parents) {
    const std::size_t nrows = std::size_t{1} << parents.size();
    ExactRowProbabilities out;
    out.p_row.assign(nrows, 0.0);
    std::vector<double> joint1(nrows, 0.0);
    enumerate_joint(network, [&](std::uint32_t mask, double p) {
        std::uint32_t r = 0;
        for (std::size_t b = 0; b < parents.size(); ++b)
            if (mask & (1u << parents[b])) r |= (1u << b);
        out.p_row[r] += p;
        if (mask & (1u << child)) joint1[r] += p;
    });
    out.p_child_given.resize(nrows);
    for (std::size_t r = 0; r < nrows; ++r)
        out.p_child_given[r] = out.p_row[r] > 0.0 ? joint1[r] / out.p_row[r] : 0.5;
    return out;
}

bool faithful_temporal_priority(const Network& network) {
    const auto marg = exact_marginals(network);
    for (int v = 0; v < network.dag.n; ++v)
        for (int p : network.dag.parent_sets[v])
            if (!(marg[p] > marg[v])) return false;
    return true;
}

}  // namespace polaris
