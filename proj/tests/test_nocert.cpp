#include <doctest.h>

#include "modcolor/errors.hpp"
#include "modcolor/families.hpp"
#include "modcolor/nocert.hpp"
#include "modcolor/oracle.hpp"
#include "support/support.hpp"

#include <random>

using namespace modcolor;

TEST_CASE("certificate set for the independent class") {
    // the only vertex-minimal uncolorable independent instance is a single
    // vertex with an empty list
    for (int q = 1; q <= 3; ++q) {
        auto zeta = build_certificate_set(ClassTag::Independent, q, 1);
        REQUIRE(zeta.members.size() == 1);
        CHECK(zeta.members[0].graph.num_vertices() == 1);
        CHECK(zeta.members[0].lists.lists[0].empty());
    }
}

TEST_CASE("certificate members are minimal No-instances in the class") {
    for (ClassTag tag : {ClassTag::UnionSplit, ClassTag::Cograph}) {
        auto zeta = build_certificate_set(tag, 2, 3);
        CHECK(!zeta.members.empty());
        for (const auto &member : zeta.members) {
            int n = member.graph.num_vertices();
            CHECK(n <= 3);
            CHECK(is_member(member.graph, tag));
            CHECK_FALSE(oracle::brute_force_list_color(member.graph, member.lists));
            for (int v = 0; v < n; ++v) {
                VertexSet rest = set_minus(full_vertex_set(n), {v});
                CHECK(oracle::brute_force_list_color(induced_subgraph(member.graph, rest).graph,
                                                     member.lists.restrict_to(rest)));
            }
        }
    }
}

TEST_CASE("certificate set parameter validation") {
    CHECK_THROWS_AS(build_certificate_set(ClassTag::Independent, 0, 1), invalid_input);
    CHECK_THROWS_AS(build_certificate_set(ClassTag::Independent, 2, 0), invalid_input);
    CHECK_THROWS_AS(build_certificate_set(ClassTag::Independent, 2, 9), resource_limit);
}

TEST_CASE("blocking configuration on a hand instance") {
    // v2 sees colors 1 and 2; both can be blocked by its modulator neighbors
    Graph g = support::graph_from_edges(3, {{0, 2}, {1, 2}});
    ListAssignment l(3, 2, false);
    l.add_color(0, 1);
    l.add_color(1, 2);
    l.add_color(2, 1);
    l.add_color(2, 2);
    auto zeta = build_certificate_set(ClassTag::Independent, 2, 1);

    auto cfg = find_blocking_configuration(g, l, {0, 1}, zeta);
    REQUIRE(cfg.has_value());
    CHECK(cfg->subgraph == VertexSet{2});
    CHECK(cfg->blockers[0] == VertexSet{0});
    CHECK(cfg->blockers[1] == VertexSet{1});
    CHECK(cfg->blocker_union() == VertexSet{0, 1});

    // drop the 1-side blocker: color 1 on v2 can no longer be blocked
    ListAssignment l2 = l;
    l2.remove_color(0, 1);
    l2.add_color(0, 2);
    CHECK_FALSE(find_blocking_configuration(g, l2, {0, 1}, zeta).has_value());
}

TEST_CASE("blocking configuration validation") {
    auto zeta = build_certificate_set(ClassTag::Independent, 2, 1);
    Graph g = support::path_graph(3);
    // modulator leaving an edge behind
    CHECK_THROWS_AS(find_blocking_configuration(g, ListAssignment(3, 2, true), {0}, zeta),
                    invalid_input);
    CHECK_THROWS_AS(find_blocking_configuration(g, ListAssignment(3, 3, true), {1}, zeta),
                    invalid_input);
}

TEST_CASE("nocert agrees with the oracle") {
    struct Combo {
        ClassTag tag;
        int g;
    };
    std::mt19937 rng(41);
    for (Combo combo : {Combo{ClassTag::Independent, 1}, Combo{ClassTag::UnionSplit, 3},
                        Combo{ClassTag::Cograph, 3}})
        for (int q = 2; q <= 3; ++q) {
            auto zeta = build_certificate_set(combo.tag, q, combo.g);
            for (int trial = 0; trial < 12; ++trial) {
                int k = 1 + trial % 4;
                int n = k + 2 + trial % 5;
                auto inst = families::random_instance(combo.tag, n, k, q,
                                                      rng(), 4, 5);
                auto result =
                    solve_nocert(inst.graph, inst.lists, inst.modulator.vertices, zeta);
                bool expect =
                    oracle::brute_force_list_color(inst.graph, inst.lists).has_value();
                CHECK(result.colorable == expect);
                if (result.colorable) {
                    REQUIRE(result.coloring.has_value());
                    CHECK(is_proper_list_coloring(inst.graph, inst.lists, *result.coloring));
                }
            }
        }
}

TEST_CASE("skipped colorings are never extendible") {
    std::mt19937 rng(43);
    auto zeta = build_certificate_set(ClassTag::Independent, 2, 1);
    int seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + trial % 3;
        int n = k + 2 + trial % 4;
        auto inst = families::random_instance(ClassTag::Independent, n, k, 2, rng(), 3, 4);
        NocertTrace trace;
        solve_nocert(inst.graph, inst.lists, inst.modulator.vertices, zeta, &trace);
        for (const auto &skip : trace.skipped) {
            ++seen;
            // pin the skipped coloring via singleton lists and re-solve
            ListAssignment pinned = skip.lists;
            for (std::size_t i = 0; i < skip.chi.size(); ++i)
                pinned.lists[skip.chi[i]] = {skip.colors[i]};
            CHECK_FALSE(oracle::brute_force_list_color(skip.graph, pinned));
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("modulator-only branch decides like the oracle") {
    std::mt19937 rng(47);
    auto zeta = build_certificate_set(ClassTag::Cograph, 3, 3);
    int seen = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + trial % 3;
        int n = k + 2 + trial % 5;
        auto inst = families::random_instance(ClassTag::Cograph, n, k, 3, rng(), 4, 5);
        NocertTrace trace;
        auto result = solve_nocert(inst.graph, inst.lists, inst.modulator.vertices, zeta, &trace);
        bool expect = oracle::brute_force_list_color(inst.graph, inst.lists).has_value();
        CHECK(result.colorable == expect);
        for (const auto &mo : trace.modulator_only) {
            ++seen;
            // colorability of the modulator subinstance is necessary
            auto sub = induced_subgraph(mo.graph, mo.x);
            bool on_modulator =
                oracle::brute_force_list_color(sub.graph, mo.lists.restrict_to(mo.x))
                    .has_value();
            bool full = oracle::brute_force_list_color(mo.graph, mo.lists).has_value();
            if (full)
                CHECK(on_modulator);
        }
    }
    CHECK(seen > 0);
}
