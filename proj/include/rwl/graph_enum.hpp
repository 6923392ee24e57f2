#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rwl/errors.hpp"
#include "rwl/graph.hpp"

namespace rwl {

// Exhaustive generator: every connected graph on exactly n labeled vertices,
// one per subset of the edges of K_n. 2^(n(n-1)/2) masks are scanned, so
// this is only sensible for n <= 7 or so.
template <typename Visit>
void for_each_connected_graph(int n, Visit&& visit) {
    if (n < 1 || n > 8) throw parameter_error("for_each_connected_graph: n must be in [1, 8]");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t masks = std::uint64_t(1) << slots.size();
    std::vector<std::uint64_t> adj(static_cast<size_t>(n));
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (auto& a : adj) a = 0;
        std::uint64_t m = mask;
        while (m) {
            const int bit = std::countr_zero(m);
            m &= m - 1;
            const auto [i, j] = slots[static_cast<size_t>(bit)];
            adj[static_cast<size_t>(i)] |= std::uint64_t(1) << j;
            adj[static_cast<size_t>(j)] |= std::uint64_t(1) << i;
        }
        const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
        if (Graph::reachable(adj, all, 0) != all) continue;
        visit(Graph(n, adj));
    }
}

// Uniform-edge-subset connected graph: resample until connected.
inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
    if (n < 2 || n > Graph::max_vertices)
        throw parameter_error("random_connected_graph: n must be in [2, 64]");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::uint64_t> adj(static_cast<size_t>(n));
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    for (;;) {
        for (auto& a : adj) a = 0;
        for (const auto& [i, j] : slots) {
            if (rng() & 1) {
                adj[static_cast<size_t>(i)] |= std::uint64_t(1) << j;
                adj[static_cast<size_t>(j)] |= std::uint64_t(1) << i;
            }
        }
        if (Graph::reachable(adj, all, 0) == all) return Graph(n, adj);
    }
}

} // namespace rwl
