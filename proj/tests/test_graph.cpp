#include <catch2/catch_amalgamated.hpp>

#include "rwl/families.hpp"
#include "rwl/graph.hpp"
#include "rwl/graph_enum.hpp"

using namespace rwl;

TEST_CASE("from_edge_list") {
    const Graph k2 = from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.degree(0) == 2);

    // duplicates and reversed orientation collapse
    const Graph dup = from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}, {1, 2}});
    CHECK(dup.edge_count() == 2);

    CHECK_THROWS_AS(from_edge_list(3, {{0, 1}}), parameter_error);        // disconnected
    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), parameter_error);        // out of range
    CHECK_THROWS_AS(from_edge_list(2, {{1, 1}}), parameter_error);        // self-loop
    CHECK_THROWS_AS(from_edge_list(0, {}), parameter_error);              // no vertices
    CHECK_THROWS_AS(from_edge_list(65, {{0, 1}}), parameter_error);       // too many
}

TEST_CASE("edge list text round-trips") {
    CHECK(export_edge_list(from_edge_list(2, {{0, 1}})) == "2\n0 1\n");
    CHECK(export_edge_list(from_edge_list(3, {{2, 1}, {0, 2}, {1, 0}})) == "3\n0 1\n0 2\n1 2\n");

    const Graph g = make_family(FamilySpec::sized(Family::tadpole, 5, 3));
    const std::string text = export_edge_list(g);
    const Graph back = parse_edge_list(text);
    CHECK(export_edge_list(back) == text);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1\nbogus\n"), parameter_error);
}

TEST_CASE("cone construction") {
    const Graph w9 = make_cone(make_family(FamilySpec::single(Family::cycle, 8)));
    CHECK(w9.vertex_count() == 9);
    CHECK(w9.edge_count() == 16);
    CHECK(w9.role(VertexRole::hub) == 8);
    CHECK(w9.degree(8) == 8);

    const Graph f6 = make_cone(make_family(FamilySpec::single(Family::path, 5)));
    CHECK(f6.vertex_count() == 6);
    CHECK(f6.edge_count() == 9);

    const Graph k2 = make_cone(make_family(FamilySpec::single(Family::complete, 1)));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    for (int n = 2; n <= 20; ++n) {
        const Graph g = make_cone(make_family(FamilySpec::single(Family::path, n)));
        REQUIRE(g.degree(g.role(VertexRole::hub).value()) == n);
    }

    const Graph p63 = make_family(FamilySpec::single(Family::path, 63));
    CHECK(make_cone(p63).vertex_count() == 64);
    CHECK_THROWS_AS(make_cone(make_cone(p63)), size_limit_error);
}

TEST_CASE("family vertex and edge counts") {
    struct Expect {
        FamilySpec spec;
        int vertices;
        int edges;
    };
    const std::vector<Expect> table = {
        {FamilySpec::single(Family::path, 7), 7, 6},
        {FamilySpec::single(Family::cycle, 7), 7, 7},
        {FamilySpec::single(Family::complete, 6), 6, 15},
        {FamilySpec::single(Family::wheel, 8), 9, 16},
        {FamilySpec::single(Family::fan, 5), 6, 9},
        {FamilySpec::sized(Family::barbell, 4, 5), 9, 6 + 10 + 1},
        {FamilySpec::sized(Family::lollipop, 8, 5), 13, 28 + 4 + 1},
        {FamilySpec::sized(Family::lollipop, 4, 0), 4, 6},
        {FamilySpec::sized(Family::tadpole, 8, 5), 13, 8 + 4 + 1},
        {FamilySpec::sized(Family::tadpole, 5, 0), 5, 5},
        {FamilySpec::sized(Family::one_point_union, 3, 4), 10, 12},
        {FamilySpec::sized(Family::snake, 3, 5), 11, 15},
        {FamilySpec::sized(Family::snake, 5, 3), 13, 15},
        {FamilySpec::sized(Family::snake, 4, 0), 1, 0},
    };
    for (const auto& e : table) {
        const Graph g = make_family(e.spec);
        INFO(family_name(e.spec.family) << " n=" << e.spec.n);
        CHECK(g.vertex_count() == e.vertices);
        CHECK(g.edge_count() == e.edges);
        CHECK(static_cast<long long>(g.vertex_count()) == family_vertex_count(e.spec));
    }
}

TEST_CASE("families match their general counting shapes") {
    // construction itself enforces the graph invariants (symmetric, loop-free,
    // connected); this sweeps every family member with <= 20 vertices
    for (int n = 1; n <= 20; ++n) {
        CHECK(make_family(FamilySpec::single(Family::path, n)).edge_count() == n - 1);
        CHECK(make_family(FamilySpec::single(Family::complete, n)).edge_count() ==
              n * (n - 1) / 2);
    }
    for (int n = 3; n <= 20; ++n)
        CHECK(make_family(FamilySpec::single(Family::cycle, n)).edge_count() == n);
    for (int n = 3; n + 1 <= 20; ++n) {
        const Graph g = make_family(FamilySpec::single(Family::wheel, n));
        CHECK(g.vertex_count() == n + 1);
        CHECK(g.edge_count() == 2 * n);
    }
    for (int n = 1; n + 1 <= 20; ++n) {
        const Graph g = make_family(FamilySpec::single(Family::fan, n));
        CHECK(g.vertex_count() == n + 1);
        CHECK(g.edge_count() == 2 * n - 1);
    }
    // snake(m,n): n(m-1)+1 vertices, nm edges
    for (int m = 3; m <= 8; ++m)
        for (int n = 0; n * (m - 1) + 1 <= 20; ++n) {
            const Graph g = make_family(FamilySpec::sized(Family::snake, m, n));
            REQUIRE(g.vertex_count() == n * (m - 1) + 1);
            REQUIRE(g.edge_count() == n * m);
        }
    // barbell(m,n): m+n vertices, C(m,2)+C(n,2)+1 edges
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; m + n <= 20; ++n) {
            const Graph g = make_family(FamilySpec::sized(Family::barbell, m, n));
            REQUIRE(g.vertex_count() == m + n);
            REQUIRE(g.edge_count() == m * (m - 1) / 2 + n * (n - 1) / 2 + 1);
        }
    for (int m = 1; m <= 10; ++m)
        for (int n = 0; m + n <= 20; ++n) {
            REQUIRE(make_family(FamilySpec::sized(Family::lollipop, m, n)).edge_count() ==
                    m * (m - 1) / 2 + n);
        }
    for (int m = 3; m <= 10; ++m)
        for (int n = 0; m + n <= 20; ++n)
            REQUIRE(make_family(FamilySpec::sized(Family::tadpole, m, n)).edge_count() == m + n);
    for (int n = 3; n <= 10; ++n)
        for (int m = 1; m * (n - 1) + 1 <= 20; ++m) {
            const Graph g = make_family(FamilySpec::sized(Family::one_point_union, m, n));
            REQUIRE(g.vertex_count() == m * (n - 1) + 1);
            REQUIRE(g.edge_count() == m * n);
        }
}

TEST_CASE("domain violations") {
    CHECK_THROWS_AS(make_family(FamilySpec::single(Family::cycle, 2)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::single(Family::wheel, 2)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::single(Family::fan, 0)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::sized(Family::barbell, 0, 3)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::sized(Family::tadpole, 2, 1)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::sized(Family::snake, 2, 1)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::sized(Family::one_point_union, 1, 2)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::single(Family::barbell, 3)), parameter_error); // m missing
    CHECK_THROWS_AS(make_family(FamilySpec::sized(Family::cycle, 3, 4)), parameter_error); // m given
}

TEST_CASE("known isomorphisms") {
    CHECK(isomorphic_brute(make_family(FamilySpec::single(Family::wheel, 3)),
                           make_family(FamilySpec::single(Family::complete, 4))));
    CHECK(isomorphic_brute(make_family(FamilySpec::sized(Family::barbell, 2, 2)),
                           make_family(FamilySpec::single(Family::path, 4))));
    // two triangles sharing a vertex, built two ways
    CHECK(isomorphic_brute(make_family(FamilySpec::sized(Family::snake, 3, 2)),
                           make_family(FamilySpec::sized(Family::one_point_union, 2, 3))));
    for (int m = 3; m <= 8; ++m) {
        REQUIRE(isomorphic_brute(make_family(FamilySpec::sized(Family::snake, m, 1)),
                                 make_family(FamilySpec::single(Family::cycle, m))));
        REQUIRE(isomorphic_brute(make_family(FamilySpec::sized(Family::tadpole, m, 0)),
                                 make_family(FamilySpec::single(Family::cycle, m))));
    }
    for (int n = 3; n <= 8; ++n)
        REQUIRE(isomorphic_brute(make_family(FamilySpec::sized(Family::one_point_union, 1, n)),
                                 make_family(FamilySpec::single(Family::cycle, n))));
    for (int m = 1; m <= 8; ++m)
        REQUIRE(isomorphic_brute(make_family(FamilySpec::sized(Family::lollipop, m, 0)),
                                 make_family(FamilySpec::single(Family::complete, m))));
    CHECK_FALSE(isomorphic_brute(make_family(FamilySpec::single(Family::path, 4)),
                                 make_family(FamilySpec::single(Family::cycle, 4))));
}

TEST_CASE("graph invariants are enforced") {
    // asymmetric adjacency is rejected
    CHECK_THROWS_AS(Graph(2, {1ULL << 1, 0}), parameter_error);
    // self loops are rejected
    CHECK_THROWS_AS(Graph(1, {1ULL}), parameter_error);
    // disconnected is rejected
    CHECK_THROWS_AS(Graph(2, {0, 0}), parameter_error);
}

TEST_CASE("exhaustive generator sees the right number of graphs") {
    const std::vector<std::uint64_t> connected_counts = {1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = 0;
        for_each_connected_graph(n, [&](const Graph&) { ++count; });
        REQUIRE(count == connected_counts[static_cast<size_t>(n - 1)]);
    }
}
