#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwl/errors.hpp"
#include "rwl/graph.hpp"

namespace rwl {

enum class Family {
    path,
    cycle,
    complete,
    wheel,
    fan,
    barbell,
    lollipop,
    tadpole,
    one_point_union,
    snake,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::wheel: return "wheel";
        case Family::fan: return "fan";
        case Family::barbell: return "barbell";
        case Family::lollipop: return "lollipop";
        case Family::tadpole: return "tadpole";
        case Family::one_point_union: return "onepointunion";
        case Family::snake: return "snake";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string name) {
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == '_' || c == '-'; }),
               name.end());
    static const std::map<std::string, Family> table = {
        {"path", Family::path},         {"cycle", Family::cycle},
        {"complete", Family::complete}, {"wheel", Family::wheel},
        {"fan", Family::fan},           {"barbell", Family::barbell},
        {"lollipop", Family::lollipop}, {"tadpole", Family::tadpole},
        {"onepointunion", Family::one_point_union},
        {"snake", Family::snake},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// Parameter record naming a family member.
//
// Single-parameter families (path, cycle, complete, wheel, fan) use n and
// leave m empty. Two-parameter families use (m, n) as conventionally
// written: barbell(m,n) = K_m + bridge + K_n; lollipop(m,n) = K_m + bridge +
// P_n; tadpole(m,n) = C_m + bridge + P_n; snake(m,n) = n m-cycles strung
// along a path; one_point_union(n,m) = m copies of C_n sharing one vertex
// (note the reversed reading: n is the cycle length).
struct FamilySpec {
    Family family;
    std::optional<long long> m;
    long long n = 0;

    static FamilySpec single(Family f, long long n) { return {f, std::nullopt, n}; }
    static FamilySpec sized(Family f, long long m, long long n) { return {f, m, n}; }
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw parameter_error(msg);
}

inline long long need_m(const FamilySpec& s) {
    require(s.m.has_value(), std::string(family_name(s.family)) + ": parameter m is required");
    return *s.m;
}

inline void no_m(const FamilySpec& s) {
    require(!s.m.has_value(), std::string(family_name(s.family)) + ": takes a single parameter n");
}

using EdgeList = std::vector<std::pair<int, int>>;

inline void add_clique(EdgeList& e, int first, int count) {
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j) e.emplace_back(i, j);
}

inline void add_path(EdgeList& e, int first, int count) {
    for (int i = 0; i + 1 < count; ++i) e.emplace_back(first + i, first + i + 1);
}

inline void add_cycle(EdgeList& e, int first, int count) {
    add_path(e, first, count);
    e.emplace_back(first + count - 1, first);
}

} // namespace detail

// Canonical vertex numbering, frozen (tests rely on roles, not indices):
//   path      0..n-1 left to right; ends tagged path_end (left end).
//   cycle     0..n-1 around.
//   complete  0..n-1.
//   wheel(n)  cycle 0..n-1, hub n            (W_{n+1}, n >= 3)
//   fan(n)    path 0..n-1, hub n             (F_{n+1}, n >= 1)
//   barbell   left clique 0..m-1, right clique m..m+n-1,
//             bridge (m-1, m); roles bridge_left/bridge_right.
//   lollipop  clique 0..m-1, path m..m+n-1, bridge (m-1, m);
//             free path end m+n-1 tagged path_end. n = 0 gives K_m.
//   tadpole   cycle 0..m-1, path m..m+n-1, bridge (0, m);
//             n = 0 gives C_m.
//   one_point_union(n,m)  shared vertex 0 (hub); copy c of the cycle has
//             inner vertices 1+c(n-1) .. (c+1)(n-1).
//   snake(m,n)  spine 0..n (path_end 0); cycle i over spine edge (i, i+1)
//             has inner vertices n+1+i(m-2) .. n+(i+1)(m-2). n = 0 gives a
//             single vertex.
inline Graph make_family(const FamilySpec& spec) {
    using detail::require;
    detail::EdgeList edges;
    std::map<VertexRole, int> roles;
    const long long n = spec.n;

    switch (spec.family) {
        case Family::path: {
            detail::no_m(spec);
            require(n >= 1, "path: n must be >= 1");
            require(n <= Graph::max_vertices, "path: n must be <= 64");
            detail::add_path(edges, 0, static_cast<int>(n));
            roles[VertexRole::path_end] = 0;
            return from_edge_list(static_cast<int>(n), edges, std::move(roles));
        }
        case Family::cycle: {
            detail::no_m(spec);
            require(n >= 3, "cycle: n must be >= 3");
            require(n <= Graph::max_vertices, "cycle: n must be <= 64");
            detail::add_cycle(edges, 0, static_cast<int>(n));
            return from_edge_list(static_cast<int>(n), edges);
        }
        case Family::complete: {
            detail::no_m(spec);
            require(n >= 1, "complete: n must be >= 1");
            require(n <= Graph::max_vertices, "complete: n must be <= 64");
            detail::add_clique(edges, 0, static_cast<int>(n));
            return from_edge_list(static_cast<int>(n), edges);
        }
        case Family::wheel: {
            detail::no_m(spec);
            require(n >= 3, "wheel: n must be >= 3 (builds the wheel on n+1 vertices)");
            return make_cone(make_family(FamilySpec::single(Family::cycle, n)));
        }
        case Family::fan: {
            detail::no_m(spec);
            require(n >= 1, "fan: n must be >= 1 (builds the fan on n+1 vertices)");
            return make_cone(make_family(FamilySpec::single(Family::path, n)));
        }
        case Family::barbell: {
            const long long m = detail::need_m(spec);
            require(m >= 1 && n >= 1, "barbell: m and n must be >= 1");
            require(m + n <= Graph::max_vertices, "barbell: m+n must be <= 64");
            detail::add_clique(edges, 0, static_cast<int>(m));
            detail::add_clique(edges, static_cast<int>(m), static_cast<int>(n));
            edges.emplace_back(static_cast<int>(m) - 1, static_cast<int>(m));
            roles[VertexRole::bridge_left] = static_cast<int>(m) - 1;
            roles[VertexRole::bridge_right] = static_cast<int>(m);
            return from_edge_list(static_cast<int>(m + n), edges, std::move(roles));
        }
        case Family::lollipop: {
            const long long m = detail::need_m(spec);
            require(m >= 1, "lollipop: m must be >= 1");
            require(n >= 0, "lollipop: n must be >= 0");
            require(m + n <= Graph::max_vertices, "lollipop: m+n must be <= 64");
            detail::add_clique(edges, 0, static_cast<int>(m));
            detail::add_path(edges, static_cast<int>(m), static_cast<int>(n));
            if (n >= 1) {
                edges.emplace_back(static_cast<int>(m) - 1, static_cast<int>(m));
                roles[VertexRole::bridge_left] = static_cast<int>(m) - 1;
                roles[VertexRole::bridge_right] = static_cast<int>(m);
                roles[VertexRole::path_end] = static_cast<int>(m + n) - 1;
            }
            return from_edge_list(static_cast<int>(m + n), edges, std::move(roles));
        }
        case Family::tadpole: {
            const long long m = detail::need_m(spec);
            require(m >= 3, "tadpole: m must be >= 3");
            require(n >= 0, "tadpole: n must be >= 0");
            require(m + n <= Graph::max_vertices, "tadpole: m+n must be <= 64");
            detail::add_cycle(edges, 0, static_cast<int>(m));
            detail::add_path(edges, static_cast<int>(m), static_cast<int>(n));
            if (n >= 1) {
                edges.emplace_back(0, static_cast<int>(m));
                roles[VertexRole::bridge_left] = 0;
                roles[VertexRole::bridge_right] = static_cast<int>(m);
                roles[VertexRole::path_end] = static_cast<int>(m + n) - 1;
            }
            return from_edge_list(static_cast<int>(m + n), edges, std::move(roles));
        }
        case Family::one_point_union: {
            const long long m = detail::need_m(spec);
            require(n >= 3, "onepointunion: n (cycle length) must be >= 3");
            require(m >= 1, "onepointunion: m (number of cycles) must be >= 1");
            const long long total = m * (n - 1) + 1;
            require(total <= Graph::max_vertices, "onepointunion: m(n-1)+1 must be <= 64");
            for (long long c = 0; c < m; ++c) {
                const int base = static_cast<int>(1 + c * (n - 1));
                edges.emplace_back(0, base);
                detail::add_path(edges, base, static_cast<int>(n) - 1);
                edges.emplace_back(base + static_cast<int>(n) - 2, 0);
            }
            roles[VertexRole::hub] = 0;
            return from_edge_list(static_cast<int>(total), edges, std::move(roles));
        }
        case Family::snake: {
            const long long m = detail::need_m(spec);
            require(m >= 3, "snake: m must be >= 3");
            require(n >= 0, "snake: n must be >= 0");
            const long long total = n * (m - 1) + 1;
            require(total <= Graph::max_vertices, "snake: n(m-1)+1 must be <= 64");
            for (long long i = 0; i < n; ++i) {
                edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
                int prev = static_cast<int>(i);
                const int base = static_cast<int>(n + 1 + i * (m - 2));
                for (long long j = 0; j < m - 2; ++j) {
                    edges.emplace_back(prev, base + static_cast<int>(j));
                    prev = base + static_cast<int>(j);
                }
                edges.emplace_back(prev, static_cast<int>(i) + 1);
            }
            roles[VertexRole::path_end] = 0;
            return from_edge_list(static_cast<int>(total), edges, std::move(roles));
        }
    }
    throw parameter_error("make_family: unknown family");
}

// Vertex count of the family member without building it.
inline long long family_vertex_count(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
        case Family::cycle:
        case Family::complete: return spec.n;
        case Family::wheel:
        case Family::fan: return spec.n + 1;
        case Family::barbell:
        case Family::lollipop:
        case Family::tadpole: return detail::need_m(spec) + spec.n;
        case Family::one_point_union: return detail::need_m(spec) * (spec.n - 1) + 1;
        case Family::snake: return spec.n * (detail::need_m(spec) - 1) + 1;
    }
    throw parameter_error("family_vertex_count: unknown family");
}

} // namespace rwl
