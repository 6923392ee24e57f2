#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/errors.hpp"
#include "rwl/graph.hpp"

namespace rwl {

// Size caps for the three oracles. The walk search and the permutation
// filter are factorial-time; the subset DP is O(2^n * n) time and O(2^n)
// memory. Exceeding a cap is an error, never silence.
struct OracleLimits {
    int walk_max = 9;
    int perm_max = 10;
    int dp_max = 24;

    // Hard ceilings behind the configurable caps. 20! < 2^62, so the walk
    // and permutation counters stay exact in 64 bits; beyond 30 the DP's
    // 2^n table is unallocatable regardless of patience.
    static constexpr int walk_ceiling = 20;
    static constexpr int perm_ceiling = 20;
    static constexpr int dp_ceiling = 30;
};

// A label order: vertices in the order they received labels 1, 2, ...
using LabelOrder = std::vector<int>;

// Exact integer counts per disruption point: values[k] = number of distinct
// label sequences of length k obtainable before the walk is stopped.
// values[0] = 1 by convention, values[n] is the full labeling count.
struct DisruptedProfile {
    std::vector<BigInt> values;

    int max_k() const { return static_cast<int>(values.size()) - 1; }
};

namespace detail {

inline void check_cap(int n, int cap, const char* which) {
    if (n > cap)
        throw size_limit_error(std::string(which) + ": graph has " + std::to_string(n) +
                               " vertices, cap is " + std::to_string(cap));
}

// Depth-first search over the states of the labeling process, grouped by
// ordered labeled-prefix. From a state the walk may move along edges freely;
// moves inside the labeled set change only the current position, so the set
// of positions reachable without creating a label is the flood-fill closure
// of the current vertex within the labeled mask. Every vertex adjacent to
// that closure and not yet labeled yields a child prefix. A prefix has
// exactly one parent (drop its last entry), so the traversal visits each
// achievable prefix once and needs no visited-set.
template <typename Visit>
void walk_prefix_dfs(const std::vector<std::uint64_t>& adj, int n, LabelOrder& prefix,
                     std::uint64_t labeled, int current, Visit&& visit) {
    visit(static_cast<const LabelOrder&>(prefix));
    if (static_cast<int>(prefix.size()) == n) return;
    const std::uint64_t closure = Graph::reachable(adj, labeled, current);
    std::uint64_t extensions = 0;
    std::uint64_t c = closure;
    while (c) {
        int u = std::countr_zero(c);
        c &= c - 1;
        extensions |= adj[static_cast<size_t>(u)];
    }
    extensions &= ~labeled;
    while (extensions) {
        int w = std::countr_zero(extensions);
        extensions &= extensions - 1;
        prefix.push_back(w);
        walk_prefix_dfs(adj, n, prefix, labeled | (std::uint64_t(1) << w), w, visit);
        prefix.pop_back();
    }
}

} // namespace detail

// Runs the labeling process exhaustively and calls `visit` once per
// achievable labeled-prefix (every length 1..n), in lexicographic order.
template <typename Visit>
void for_each_walk_prefix(const Graph& g, Visit&& visit,
                          const OracleLimits& limits = {}) {
    detail::check_cap(g.vertex_count(), std::min(limits.walk_max, OracleLimits::walk_ceiling),
                      "walk oracle");
    LabelOrder prefix;
    prefix.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        prefix.push_back(v);
        detail::walk_prefix_dfs(g.adjacency(), g.vertex_count(), prefix,
                                std::uint64_t(1) << v, v, visit);
        prefix.pop_back();
    }
}

// All complete label orders the walk process can produce, in lexicographic
// order (distinct by construction).
inline std::vector<LabelOrder> enumerate_labelings_walk(const Graph& g,
                                                        const OracleLimits& limits = {}) {
    std::vector<LabelOrder> out;
    const size_t n = static_cast<size_t>(g.vertex_count());
    for_each_walk_prefix(
        g,
        [&](const LabelOrder& p) {
            if (p.size() == n) out.push_back(p);
        },
        limits);
    return out;
}

// Count of complete label orders by the same state search, without
// materializing them.
inline BigInt count_labelings_walk(const Graph& g, const OracleLimits& limits = {}) {
    unsigned long long count = 0; // exact: the ceiling keeps this <= 20! < 2^62
    const size_t n = static_cast<size_t>(g.vertex_count());
    for_each_walk_prefix(
        g,
        [&](const LabelOrder& p) {
            if (p.size() == n) ++count;
        },
        limits);
    return BigInt(count);
}

// Permutation filter: the number of vertex orderings whose every prefix
// induces a connected subgraph. Checked incrementally -- a prefix stays
// connected exactly when each added vertex has a neighbor among its
// predecessors.
inline BigInt count_labelings_perm(const Graph& g, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    detail::check_cap(n, std::min(limits.perm_max, OracleLimits::perm_ceiling),
                      "permutation oracle");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long long count = 0; // exact: the ceiling keeps this <= 20! < 2^62
    do {
        std::uint64_t seen = std::uint64_t(1) << perm[0];
        bool ok = true;
        for (int i = 1; i < n; ++i) {
            const int v = perm[static_cast<size_t>(i)];
            if (!(g.adj_mask(v) & seen)) {
                ok = false;
                break;
            }
            seen |= std::uint64_t(1) << v;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BigInt(count);
}

namespace detail {

inline void check_dp_cap(int n, const OracleLimits& limits, const char* which) {
    const int cap = std::min(limits.dp_max, OracleLimits::dp_ceiling);
    check_cap(n, cap, which);
}

// Subset DP table: f[S] = number of orderings of S in which every prefix is
// connected. f[{v}] = 1; a vertex can be appended only when it has a
// neighbor in the rest. Masks are iterated in ascending integer order, which
// is subset-monotone, so every predecessor is already final. Disconnected S
// get f[S] = 0 without an explicit test: removing any attached vertex from a
// disconnected set cannot leave a connected predecessor.
inline std::vector<BigInt> ordering_table(const Graph& g) {
    const int n = g.vertex_count();
    const size_t size = size_t(1) << n;
    std::vector<BigInt> f(size);
    for (int v = 0; v < n; ++v) f[size_t(1) << v] = 1;
    for (std::uint64_t s = 1; s < size; ++s) {
        if (std::popcount(s) < 2) continue;
        BigInt acc = 0;
        std::uint64_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t prev = s & ~(std::uint64_t(1) << v);
            if (g.adj_mask(v) & prev) acc += f[prev];
        }
        f[s] = std::move(acc);
    }
    return f;
}

} // namespace detail

// Subset-DP count of complete labelings; agrees with the walk and
// permutation oracles on their shared domain and scales to ~24 vertices.
inline BigInt count_labelings_dp(const Graph& g, const OracleLimits& limits = {}) {
    detail::check_dp_cap(g.vertex_count(), limits, "subset DP");
    auto f = detail::ordering_table(g);
    return f[g.full_mask()];
}

// Full disrupted profile in one DP pass: values[k] sums f over the subsets
// of size k.
inline DisruptedProfile disrupted_profile_dp(const Graph& g, const OracleLimits& limits = {}) {
    detail::check_dp_cap(g.vertex_count(), limits, "subset DP");
    const int n = g.vertex_count();
    auto f = detail::ordering_table(g);
    DisruptedProfile profile;
    profile.values.assign(static_cast<size_t>(n) + 1, 0);
    profile.values[0] = 1;
    for (std::uint64_t s = 1, size = std::uint64_t(1) << n; s < size; ++s)
        if (f[s] != 0) profile.values[static_cast<size_t>(std::popcount(s))] += f[s];
    return profile;
}

// Complete labelings whose first label lands on `start`.
inline BigInt count_labelings_from(const Graph& g, int start, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    detail::check_dp_cap(n, limits, "subset DP");
    if (start < 0 || start >= n)
        throw parameter_error("count_labelings_from: start vertex " + std::to_string(start) +
                              " out of range");
    const size_t size = size_t(1) << n;
    const std::uint64_t start_bit = std::uint64_t(1) << start;
    std::vector<BigInt> f(size);
    f[start_bit] = 1;
    for (std::uint64_t s = 1; s < size; ++s) {
        if (!(s & start_bit) || std::popcount(s) < 2) continue;
        BigInt acc = 0;
        std::uint64_t rest = s & ~start_bit; // the start is never the appended vertex
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t prev = s & ~(std::uint64_t(1) << v);
            if (g.adj_mask(v) & prev) acc += f[prev];
        }
        f[s] = std::move(acc);
    }
    return f[g.full_mask()];
}

} // namespace rwl
