#ifndef MODCOLOR_GRAPH_HPP
#define MODCOLOR_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modcolor {

// Sorted set of vertex indices, no duplicates.
using VertexSet = std::vector<int>;

enum class ClassTag {
    Independent,
    Forest,
    LinearForest,
    Path,
    Split,
    UnionSplit,
    Cograph,
};

const char *class_tag_name(ClassTag tag);
std::optional<ClassTag> class_tag_from_name(const std::string &name);

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted; self-loops are rejected, duplicate edges ignored.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int> &neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph &other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// ---- vertex set helpers ----

VertexSet full_vertex_set(int n);
bool set_contains(const VertexSet &s, int v);
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_minus(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
// V(G) minus s for a graph on n vertices.
VertexSet set_complement(int n, const VertexSet &s);
// Sorts and deduplicates in place, checks range [0..n).
VertexSet normalize_vertex_set(std::vector<int> s, int n);

struct Modulator {
    VertexSet vertices;
    ClassTag target = ClassTag::Independent;
};

// ---- operations ----

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // size n of host, -1 when not selected
    VertexSet new_to_old;        // new index -> host vertex
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &s);

bool is_member(const Graph &g, ClassTag tag);

bool verify_modulator(const Graph &g, const VertexSet &x, ClassTag tag);

// Induced isomorphism from some subset of `candidates` onto all of H.
// domain is sorted; map[i] is the H-vertex assigned to domain[i].
struct InducedIso {
    VertexSet domain;
    std::vector<int> map;
};

std::optional<InducedIso> find_induced_isomorphism(const Graph &h, const Graph &g,
                                                   const VertexSet &candidates);

// Minimum adjacency bitstring over all vertex permutations; requires n <= 11.
std::uint64_t canonical_form(const Graph &g);

// One representative per isomorphism class with 1..n_max vertices in the class.
std::vector<Graph> enumerate_graphs_up_to(int n_max, ClassTag tag, int hard_cap = 7);

// ---- misc structure helpers shared across modules ----

std::vector<VertexSet> connected_components(const Graph &g);
std::vector<VertexSet> connected_components(const Graph &g, const VertexSet &alive);
bool is_connected(const Graph &g);
bool is_acyclic(const Graph &g);

} // namespace modcolor

#endif
