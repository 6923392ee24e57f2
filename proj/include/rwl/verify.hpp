#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rwl/closed_forms.hpp"
#include "rwl/graph_enum.hpp"
#include "rwl/oracle.hpp"

namespace rwl {

// One verification outcome. `point` identifies the parameter choice; failed
// rows carry enough detail (usually an edge list) to reproduce.
struct VerifyRow {
    std::string scope;
    std::string point;
    bool ok = false;
    std::string detail;
};

using VerifyRows = std::vector<VerifyRow>;

// Seed for the randomized 8..9-vertex sample; fixed so every run checks the
// same graphs.
inline constexpr std::uint64_t verify_sample_seed = 0x5eed2024'0809ULL;

namespace verify_detail {

inline void add(VerifyRows& rows, std::string scope, std::string point, bool ok,
                std::string detail = "") {
    rows.push_back(VerifyRow{std::move(scope), std::move(point), ok, std::move(detail)});
}

inline std::string one_line_edges(const Graph& g) {
    std::string s = export_edge_list(g);
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

// Exhaustive three-oracle agreement on all connected n-vertex graphs,
// sharded over threads by edge mask. Returns the number of graphs checked;
// mismatching graphs are appended to `failures` (deterministically ordered).
inline std::uint64_t oracle_sweep_exhaustive(int n, unsigned threads,
                                             std::vector<std::string>& failures) {
    if (threads == 0) threads = 1;
    std::vector<std::uint64_t> counts(threads, 0);
    std::vector<std::vector<std::pair<std::uint64_t, std::string>>> fails(threads);

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t mask_count = std::uint64_t(1) << slots.size();
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;

    auto work = [&](unsigned shard) {
        std::vector<std::uint64_t> adj(static_cast<size_t>(n));
        for (std::uint64_t mask = shard; mask < mask_count; mask += threads) {
            for (auto& a : adj) a = 0;
            std::uint64_t m = mask;
            while (m) {
                const int bit = std::countr_zero(m);
                m &= m - 1;
                const auto [i, j] = slots[static_cast<size_t>(bit)];
                adj[static_cast<size_t>(i)] |= std::uint64_t(1) << j;
                adj[static_cast<size_t>(j)] |= std::uint64_t(1) << i;
            }
            if (Graph::reachable(adj, all, 0) != all) continue;
            Graph g(n, adj);
            ++counts[shard];
            const BigInt walk = count_labelings_walk(g);
            const BigInt perm = count_labelings_perm(g);
            const BigInt dp = count_labelings_dp(g);
            if (walk != perm || perm != dp) {
                fails[shard].emplace_back(mask, "walk=" + walk.str() + " perm=" + perm.str() +
                                                    " dp=" + dp.str() + " edges=" +
                                                    one_line_edges(g));
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();

    std::vector<std::pair<std::uint64_t, std::string>> merged;
    for (auto& f : fails) merged.insert(merged.end(), f.begin(), f.end());
    std::sort(merged.begin(), merged.end());
    for (auto& [mask, text] : merged) failures.push_back(text);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

} // namespace verify_detail

// Walk, permutation and DP oracles must agree: exhaustively on all connected
// graphs with <= min(7, max_vertices) vertices, and on `sample_per_size`
// random connected graphs at 8 and 9 vertices when max_vertices allows.
inline void verify_oracle_agreement(int max_vertices, VerifyRows& rows,
                                    int sample_per_size = 50, unsigned threads = 0) {
    using namespace verify_detail;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    for (int n = 1; n <= std::min(max_vertices, 7); ++n) {
        std::vector<std::string> failures;
        const std::uint64_t checked = oracle_sweep_exhaustive(n, threads, failures);
        add(rows, "oracle", "exhaustive n=" + std::to_string(n), failures.empty(),
            std::to_string(checked) + " graphs");
        for (const auto& f : failures) add(rows, "oracle", "n=" + std::to_string(n), false, f);
    }
    std::mt19937_64 rng(verify_sample_seed);
    for (int n = 8; n <= std::min(max_vertices, 9); ++n) {
        bool all_ok = true;
        for (int i = 0; i < sample_per_size; ++i) {
            const Graph g = random_connected_graph(n, rng);
            const BigInt walk = count_labelings_walk(g);
            const BigInt perm = count_labelings_perm(g);
            const BigInt dp = count_labelings_dp(g);
            if (walk != perm || perm != dp) {
                all_ok = false;
                add(rows, "oracle", "random n=" + std::to_string(n) + " #" + std::to_string(i),
                    false, "walk=" + walk.str() + " perm=" + perm.str() + " dp=" + dp.str() +
                               " edges=" + one_line_edges(g));
            }
        }
        add(rows, "oracle", "random n=" + std::to_string(n), all_ok,
            std::to_string(sample_per_size) + " graphs");
    }
}

// Cone composition: the profile formula applied to G equals the DP count of
// the cone over G, for every connected G up to the given size, plus the
// wheel/fan specializations via their cycle/path profiles.
inline void verify_cone_composition(int max_vertices, VerifyRows& rows) {
    using namespace verify_detail;
    for (int n = 1; n <= std::min(max_vertices - 1, 6); ++n) {
        std::uint64_t checked = 0;
        bool all_ok = true;
        for_each_connected_graph(n, [&](const Graph& g) {
            ++checked;
            const BigInt via_profile = cone_count(disrupted_profile_dp(g));
            const BigInt direct = count_labelings_dp(make_cone(g));
            if (via_profile != direct) {
                all_ok = false;
                add(rows, "theorem1", "n=" + std::to_string(n), false,
                    "profile-route=" + via_profile.str() + " dp=" + direct.str() + " edges=" +
                        one_line_edges(g));
            }
        });
        add(rows, "theorem1", "all connected n=" + std::to_string(n), all_ok,
            std::to_string(checked) + " graphs");
    }
    for (int n = 3; n <= 10; ++n) {
        const auto profile = disrupted_profile_dp(make_family(FamilySpec::single(Family::cycle, n)));
        add(rows, "theorem1", "wheel via cycle profile n=" + std::to_string(n),
            wheel_count(n) == cone_count(profile));
    }
    for (int n = 1; n <= 10; ++n) {
        const auto profile = disrupted_profile_dp(make_family(FamilySpec::single(Family::path, n)));
        add(rows, "theorem1", "fan via path profile n=" + std::to_string(n),
            fan_count(n) == cone_count(profile));
    }
}

// Disrupted-count formulas for paths and cycles against the DP profile.
inline void verify_profiles(int max_vertices, VerifyRows& rows) {
    using namespace verify_detail;
    for (int n = 1; n <= max_vertices; ++n) {
        const auto profile = disrupted_profile_dp(make_family(FamilySpec::single(Family::path, n)));
        bool ok = true;
        for (int k = 0; k <= n; ++k)
            ok = ok && profile.values[static_cast<size_t>(k)] == path_disrupted(n, k);
        add(rows, "profiles", "path n=" + std::to_string(n), ok);
    }
    for (int n = 3; n <= max_vertices; ++n) {
        const auto profile = disrupted_profile_dp(make_family(FamilySpec::single(Family::cycle, n)));
        bool ok = true;
        for (int k = 0; k <= n; ++k)
            ok = ok && profile.values[static_cast<size_t>(k)] == cycle_disrupted(n, k);
        add(rows, "profiles", "cycle n=" + std::to_string(n), ok);
    }
}

namespace verify_detail {

// Formula vs DP for one family member.
inline void check_family_point(VerifyRows& rows, const std::string& scope, const FamilySpec& spec,
                               const std::string& point) {
    const CountReport report = evaluate_count(spec, true);
    add(rows, scope, point, report.agree.value(),
        report.agree.value() ? "" : "formula=" + report.formula_value.str() + " dp=" +
                                        report.oracle_value->str());
}

} // namespace verify_detail

inline void verify_wheel(int max_vertices, VerifyRows& rows) {
    for (int n = 3; n + 1 <= max_vertices; ++n)
        verify_detail::check_family_point(rows, "wheel", FamilySpec::single(Family::wheel, n),
                                          "n=" + std::to_string(n));
}

inline void verify_fan(int max_vertices, VerifyRows& rows) {
    for (int n = 1; n + 1 <= max_vertices; ++n)
        verify_detail::check_family_point(rows, "fan", FamilySpec::single(Family::fan, n),
                                          "n=" + std::to_string(n));
}

inline void verify_barbell(int max_vertices, VerifyRows& rows) {
    using namespace verify_detail;
    for (int m = 1; m <= max_vertices - 1; ++m)
        for (int n = 1; m + n <= max_vertices; ++n)
            check_family_point(rows, "theorem5", FamilySpec::sized(Family::barbell, m, n),
                               "m=" + std::to_string(m) + " n=" + std::to_string(n));
    for (int n = 1; n <= 30; ++n)
        add(rows, "theorem5", "catalan corollary n=" + std::to_string(n),
            barbell_equal_count(n) == barbell_count(n, n));
}

inline void verify_lollipop(int max_vertices, VerifyRows& rows) {
    for (int m = 1; m <= max_vertices; ++m)
        for (int n = 0; m + n <= max_vertices; ++n)
            verify_detail::check_family_point(rows, "theorem6",
                                              FamilySpec::sized(Family::lollipop, m, n),
                                              "m=" + std::to_string(m) + " n=" + std::to_string(n));
}

inline void verify_tadpole(int max_vertices, VerifyRows& rows) {
    for (int m = 3; m <= max_vertices; ++m)
        for (int n = 0; m + n <= max_vertices; ++n)
            verify_detail::check_family_point(rows, "theorem7",
                                              FamilySpec::sized(Family::tadpole, m, n),
                                              "m=" + std::to_string(m) + " n=" + std::to_string(n));
}

inline void verify_one_point_union(int max_vertices, VerifyRows& rows) {
    using namespace verify_detail;
    for (int n = 3; n <= max_vertices; ++n)
        for (int m = 1; m * (n - 1) + 1 <= max_vertices; ++m)
            check_family_point(rows, "theorem8", FamilySpec::sized(Family::one_point_union, m, n),
                               "n=" + std::to_string(n) + " m=" + std::to_string(m));
    for (int m = 1; m <= 30; ++m)
        add(rows, "theorem8", "friendship corollary m=" + std::to_string(m),
            friendship_count(m) == one_point_union_count(3, m));
}

inline void verify_snake(int max_vertices, VerifyRows& rows) {
    using namespace verify_detail;
    for (int m = 3; m <= max_vertices; ++m) {
        for (int n = 0; static_cast<long long>(n) * (m - 1) + 1 <= max_vertices; ++n) {
            const FamilySpec spec = FamilySpec::sized(Family::snake, m, n);
            const std::string point = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            check_family_point(rows, "theorem9", spec, point);
            const Graph g = make_family(spec);
            const int end = g.role(VertexRole::path_end).value();
            add(rows, "theorem9", "b " + point,
                snake_b(m, n) == count_labelings_from(g, end));
        }
    }
    for (int n = 1; n <= 15; ++n)
        add(rows, "theorem9", "triangular corollary n=" + std::to_string(n),
            snake3_count(n) == snake_count(3, n));
}

// Equalities between formulas that count the same graph two ways.
inline void verify_coincidences(VerifyRows& rows) {
    using namespace verify_detail;
    for (int n = 0; n <= 30; ++n)
        add(rows, "coincidences", "tadpole(3,n)==lollipop(3,n) n=" + std::to_string(n),
            tadpole_count(3, n) == lollipop_count(3, n));
    for (int m = 3; m <= 30; ++m)
        add(rows, "coincidences", "snake(m,1)==m*2^(m-2) m=" + std::to_string(m),
            snake_count(m, 1) == BigInt(m) * pow2(m - 2));
    for (int n = 3; n <= 30; ++n)
        add(rows, "coincidences", "onepointunion(n,1)==n*2^(n-2) n=" + std::to_string(n),
            one_point_union_count(n, 1) == BigInt(n) * pow2(n - 2));
    add(rows, "coincidences", "snake(3,2)==friendship(2)==56",
        snake_count(3, 2) == 56 && friendship_count(2) == 56);
    for (int m = 1; m <= 30; ++m)
        for (int n = 1; n <= 30; ++n)
            if (barbell_count(m, n) != barbell_count(n, m))
                add(rows, "coincidences",
                    "barbell symmetry m=" + std::to_string(m) + " n=" + std::to_string(n), false);
    add(rows, "coincidences", "barbell symmetry m,n<=30", true);
}

} // namespace rwl
