#include <doctest.h>

#include "modcolor/errors.hpp"
#include "modcolor/families.hpp"
#include "modcolor/oracle.hpp"
#include "modcolor/vc_solver.hpp"
#include "support/support.hpp"

#include <random>

using namespace modcolor;

namespace {

// endpoints of a greedily chosen maximal matching: a vertex cover
VertexSet matching_cover(const Graph &g) {
    std::vector<char> used(g.num_vertices(), 0);
    VertexSet cover;
    for (auto [u, v] : g.edges())
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            cover.push_back(u);
            cover.push_back(v);
        }
    return normalize_vertex_set(cover, g.num_vertices());
}

} // namespace

TEST_CASE("bipartite recognition") {
    auto [ok, coloring] = is_bipartite(support::cycle_graph(6));
    CHECK(ok);
    REQUIRE(coloring.has_value());
    CHECK(is_proper_coloring(support::cycle_graph(6), *coloring));
    CHECK_FALSE(is_bipartite(support::cycle_graph(5)).first);
    CHECK(is_bipartite(Graph(3)).first);
}

TEST_CASE("vc solver input validation") {
    Graph g = support::path_graph(3);
    CHECK_THROWS_AS(solve_vc(g, {0}, 2), invalid_input); // {0} is no vertex cover
    CHECK_THROWS_AS(solve_vc(g, {1}, 0), invalid_input);
}

TEST_CASE("vc solver on hand instances") {
    Graph c5 = support::cycle_graph(5);
    VertexSet cover{0, 1, 3};
    CHECK_FALSE(solve_vc(c5, cover, 2).colorable);
    auto result = solve_vc(c5, cover, 3);
    REQUIRE(result.colorable);
    REQUIRE(result.coloring.has_value());
    CHECK(is_proper_coloring(c5, *result.coloring));

    Graph k4 = support::complete_graph(4);
    CHECK_FALSE(solve_vc(k4, full_vertex_set(4), 3).colorable);
    CHECK(solve_vc(k4, full_vertex_set(4), 4).colorable);
}

TEST_CASE("vc solver agrees with the oracle on small graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph &g : support::all_graphs(n)) {
            int chi = support::brute_chromatic(g);
            VertexSet cover = matching_cover(g);
            for (int q = 1; q <= 4; ++q) {
                auto result = solve_vc(g, cover, q);
                CHECK(result.colorable == (chi <= q));
                if (result.colorable)
                    CHECK(is_proper_coloring(g, *result.coloring));
            }
        }
}

TEST_CASE("vc solver agrees on random modulator instances") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        int k = 2 + trial % 5;
        int n = k + 1 + trial % 6;
        int q = 1 + trial % 4;
        auto inst = families::random_instance(ClassTag::Independent, n, k, q,
                                              static_cast<std::uint32_t>(trial), 1, 1);
        auto result = solve_vc(inst.graph, inst.modulator.vertices, q);
        bool expect =
            oracle::brute_force_list_color(inst.graph, ListAssignment(n, q, true)).has_value();
        CHECK(result.colorable == expect);
        if (result.colorable)
            CHECK(is_proper_coloring(inst.graph, *result.coloring));
    }
}

TEST_CASE("top-level subset count respects the binomial budget") {
    auto inst = families::vc_bench_instance(9, 3, 5);
    auto result = solve_vc(inst.graph, inst.modulator.vertices, 3);
    CHECK_FALSE(result.colorable);
    // sum of C(9, l) for l <= 3
    CHECK(result.stats.top_level_subsets <= 1 + 9 + 36 + 84);
    CHECK(result.stats.nodes_expanded > 0);
}
