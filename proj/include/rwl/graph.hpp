#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rwl/errors.hpp"

namespace rwl {

// Structural roles of distinguished vertices, attached by the family
// builders so that callers can find the hub or a bridge endpoint without
// depending on raw indices.
enum class VertexRole { hub, bridge_left, bridge_right, path_end };

inline const char* role_name(VertexRole r) {
    switch (r) {
        case VertexRole::hub: return "hub";
        case VertexRole::bridge_left: return "bridge_left";
        case VertexRole::bridge_right: return "bridge_right";
        case VertexRole::path_end: return "path_end";
    }
    return "?";
}

// Undirected simple connected graph on at most 64 vertices. Adjacency is a
// neighbor bitmask per vertex, which is what the subset DP and the walk
// search operate on directly.
class Graph {
public:
    static constexpr int max_vertices = 64;

    // Flood fill over an adjacency table restricted to `within`; returns the
    // set of vertices reachable from `start`.
    static std::uint64_t reachable(const std::vector<std::uint64_t>& adj, std::uint64_t within,
                                   int start) {
        std::uint64_t seen = std::uint64_t(1) << start;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<size_t>(u)] & within;
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    Graph(int n, std::vector<std::uint64_t> adj,
          std::map<VertexRole, int> roles = {})
        : n_(n), adj_(std::move(adj)), roles_(std::move(roles)) {
        if (n_ < 1 || n_ > max_vertices)
            throw parameter_error("graph: vertex count must be in [1, 64], got " + std::to_string(n_));
        if (adj_.size() != static_cast<size_t>(n_))
            throw parameter_error("graph: adjacency table size mismatch");
        const std::uint64_t all = full_mask();
        for (int v = 0; v < n_; ++v) {
            if (adj_[v] & ~all)
                throw parameter_error("graph: neighbor out of range at vertex " + std::to_string(v));
            if (adj_[v] >> v & 1)
                throw parameter_error("graph: self-loop at vertex " + std::to_string(v));
        }
        for (int v = 0; v < n_; ++v) {
            std::uint64_t nb = adj_[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (!(adj_[u] >> v & 1))
                    throw parameter_error("graph: asymmetric edge " + std::to_string(v) + "-" +
                                          std::to_string(u));
            }
        }
        if (reachable(adj_, all, 0) != all)
            throw parameter_error("graph: not connected");
        for (auto [role, v] : roles_) {
            if (v < 0 || v >= n_)
                throw parameter_error(std::string("graph: role ") + role_name(role) +
                                      " points outside the vertex range");
        }
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int deg_sum = 0;
        for (auto m : adj_) deg_sum += std::popcount(m);
        return deg_sum / 2;
    }

    std::uint64_t adj_mask(int v) const { return adj_[static_cast<size_t>(v)]; }
    const std::vector<std::uint64_t>& adjacency() const { return adj_; }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    }

    int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)] >> v & 1; }

    std::optional<int> role(VertexRole r) const {
        auto it = roles_.find(r);
        if (it == roles_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<VertexRole, int>& roles() const { return roles_; }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
    std::map<VertexRole, int> roles_;
};

// Builds a graph from (possibly duplicated, either-orientation) edges.
inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::map<VertexRole, int> roles = {}) {
    if (n < 1 || n > Graph::max_vertices)
        throw parameter_error("from_edge_list: vertex count must be in [1, 64], got " +
                              std::to_string(n));
    std::vector<std::uint64_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parameter_error("from_edge_list: endpoint out of range in edge " +
                                  std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw parameter_error("from_edge_list: self-loop at vertex " + std::to_string(u));
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    return Graph(n, std::move(adj), std::move(roles)); // ctor rejects disconnected input
}

// Deterministic text form: vertex count line, then one "u v" line per edge
// with u < v, sorted lexicographically. Round-trips through parse_edge_list.
inline std::string export_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::uint64_t nb = g.adj_mask(u) & ~((std::uint64_t(1) << u) | ((std::uint64_t(1) << u) - 1));
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            out << u << " " << v << "\n";
        }
    }
    return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw parameter_error("edge list: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (!in.eof()) throw parameter_error("edge list: trailing garbage");
    return from_edge_list(n, edges);
}

// Adds one vertex adjacent to every existing vertex. The new vertex gets
// index n and the "hub" role.
inline Graph make_cone(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= Graph::max_vertices)
        throw size_limit_error("make_cone: result would exceed 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<size_t>(n) + 1);
    const std::uint64_t hub_bit = std::uint64_t(1) << n;
    for (int v = 0; v < n; ++v) adj[v] = g.adj_mask(v) | hub_bit;
    adj[n] = g.full_mask();
    std::map<VertexRole, int> roles = g.roles();
    roles[VertexRole::hub] = n;
    return Graph(n + 1, std::move(adj), std::move(roles));
}

// Brute-force isomorphism test over all vertex bijections. Test helper for
// small graphs; factorial in n.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            std::uint64_t mapped = 0;
            std::uint64_t nb = a.adj_mask(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                mapped |= std::uint64_t(1) << perm[v];
            }
            ok = mapped == b.adj_mask(perm[u]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace rwl
