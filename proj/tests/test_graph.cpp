#include <doctest.h>

#include "modcolor/errors.hpp"
#include "modcolor/graph.hpp"
#include "support/support.hpp"

using namespace modcolor;

TEST_CASE("set helpers") {
    CHECK(full_vertex_set(3) == VertexSet{0, 1, 2});
    CHECK(set_union({0, 2}, {1, 2}) == VertexSet{0, 1, 2});
    CHECK(set_minus({0, 1, 2}, {1}) == VertexSet{0, 2});
    CHECK(set_intersection({0, 1, 2}, {1, 3}) == VertexSet{1});
    CHECK(set_complement(4, {1, 2}) == VertexSet{0, 3});
    CHECK(set_contains({0, 2}, 2));
    CHECK_FALSE(set_contains({0, 2}, 1));
    CHECK(normalize_vertex_set({2, 0, 2}, 3) == VertexSet{0, 2});
    CHECK_THROWS_AS(normalize_vertex_set({3}, 3), invalid_input);
}

TEST_CASE("graph edges") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // duplicate, ignored
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(1, 1), invalid_input);
    CHECK_THROWS_AS(g.add_edge(0, 3), invalid_input);
    g.add_edge(2, 0);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("class membership") {
    CHECK(is_member(Graph(4), ClassTag::Independent));
    CHECK_FALSE(is_member(support::path_graph(2), ClassTag::Independent));

    CHECK(is_member(support::path_graph(5), ClassTag::Path));
    CHECK(is_member(Graph(0), ClassTag::Path));
    CHECK_FALSE(is_member(support::star_graph(3), ClassTag::Path));
    CHECK_FALSE(is_member(support::cycle_graph(4), ClassTag::Path));

    // two disjoint paths: linear forest but not a path
    Graph two_paths(5);
    two_paths.add_edge(0, 1);
    two_paths.add_edge(2, 3);
    two_paths.add_edge(3, 4);
    CHECK(is_member(two_paths, ClassTag::LinearForest));
    CHECK_FALSE(is_member(two_paths, ClassTag::Path));

    CHECK(is_member(support::star_graph(4), ClassTag::Forest));
    CHECK_FALSE(is_member(support::cycle_graph(3), ClassTag::Forest));

    CHECK(is_member(support::complete_graph(4), ClassTag::Split));
    CHECK(is_member(support::star_graph(4), ClassTag::Split));
    CHECK_FALSE(is_member(support::cycle_graph(4), ClassTag::Split)); // C4 is not split
    CHECK_FALSE(is_member(support::path_graph(5), ClassTag::Split));  // contains 2K2

    // K3 + K1,2: union of split graphs, not itself split
    Graph us(6);
    us.add_edge(0, 1);
    us.add_edge(1, 2);
    us.add_edge(0, 2);
    us.add_edge(3, 4);
    us.add_edge(3, 5);
    CHECK(is_member(us, ClassTag::UnionSplit));
    CHECK_FALSE(is_member(us, ClassTag::Split));

    CHECK(is_member(support::complete_graph(4), ClassTag::Cograph));
    CHECK(is_member(support::cycle_graph(4), ClassTag::Cograph));
    CHECK_FALSE(is_member(support::path_graph(4), ClassTag::Cograph));
    CHECK_FALSE(is_member(support::cycle_graph(5), ClassTag::Cograph));
}

TEST_CASE("class tag names round-trip") {
    for (ClassTag tag : {ClassTag::Independent, ClassTag::Forest, ClassTag::LinearForest,
                         ClassTag::Path, ClassTag::Split, ClassTag::UnionSplit,
                         ClassTag::Cograph})
        CHECK(class_tag_from_name(class_tag_name(tag)) == tag);
    CHECK_FALSE(class_tag_from_name("no-such-class").has_value());
}

TEST_CASE("induced subgraph") {
    Graph g = support::cycle_graph(5);
    auto sub = induced_subgraph(g, {0, 1, 3});
    CHECK(sub.graph.num_vertices() == 3);
    CHECK(sub.graph.num_edges() == 1); // only 0-1 survives
    CHECK(sub.new_to_old == VertexSet{0, 1, 3});
    CHECK(sub.old_to_new[3] == 2);
    CHECK(sub.old_to_new[2] == -1);
}

TEST_CASE("modulator verification") {
    Graph g = support::cycle_graph(5);
    CHECK(verify_modulator(g, {0}, ClassTag::Path));
    CHECK(verify_modulator(g, {0, 2}, ClassTag::LinearForest));
    CHECK_FALSE(verify_modulator(g, {}, ClassTag::Forest));
    CHECK(verify_modulator(g, {0, 1, 2, 3, 4}, ClassTag::Independent));
}

TEST_CASE("induced isomorphism search") {
    // triangle with a pendant; K3 appears, C4 does not
    Graph g = support::graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto iso = find_induced_isomorphism(support::complete_graph(3), g, full_vertex_set(4));
    REQUIRE(iso.has_value());
    CHECK(iso->domain == VertexSet{0, 1, 2});
    CHECK_FALSE(
        find_induced_isomorphism(support::cycle_graph(4), g, full_vertex_set(4)).has_value());
    // restricting the candidates can rule the pattern out
    CHECK_FALSE(find_induced_isomorphism(support::complete_graph(3), g, {1, 2, 3}).has_value());
}

TEST_CASE("canonical form identifies isomorphs") {
    Graph a = support::path_graph(4);
    Graph b = support::graph_from_edges(4, {{2, 0}, {0, 3}, {3, 1}}); // P4 relabeled
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(support::star_graph(3)));
}

TEST_CASE("graph enumeration counts") {
    // one independent graph per order
    CHECK(enumerate_graphs_up_to(5, ClassTag::Independent).size() == 5);
    // 1 + 2 + 3 + 6 forests on up to 4 vertices
    CHECK(enumerate_graphs_up_to(4, ClassTag::Forest).size() == 12);
    // all 18 graphs on up to 4 vertices are cographs except P4
    CHECK(enumerate_graphs_up_to(4, ClassTag::Cograph).size() == 17);
    CHECK_THROWS_AS(enumerate_graphs_up_to(9, ClassTag::Forest), resource_limit);
}

TEST_CASE("all_graphs matches the known census") {
    CHECK(support::all_graphs(4).size() == 11);
    CHECK(support::all_graphs(5).size() == 34);
    CHECK(support::all_graphs(6).size() == 156);
}

TEST_CASE("connectivity helpers") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2});
    CHECK(comps[2] == VertexSet{3, 4});
    CHECK(connected_components(g, {1, 2, 4}).size() == 3);
    CHECK_FALSE(is_connected(g));
    CHECK(is_acyclic(g));
    CHECK_FALSE(is_acyclic(support::cycle_graph(3)));
}
