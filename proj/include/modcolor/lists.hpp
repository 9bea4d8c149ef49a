#ifndef MODCOLOR_LISTS_HPP
#define MODCOLOR_LISTS_HPP

#include "modcolor/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modcolor {

// Per-vertex subset of the palette [1..q]. Empty lists are allowed; they
// encode immediate No-instances.
struct ListAssignment {
    int q = 0;
    std::vector<std::vector<int>> lists; // sorted, one per vertex

    ListAssignment() = default;
    ListAssignment(int n, int q_, bool full = true);

    int num_vertices() const { return static_cast<int>(lists.size()); }
    bool has_color(int v, int c) const;
    void add_color(int v, int c);
    void remove_color(int v, int c);

    // lists restricted to s, reindexed by position in s
    ListAssignment restrict_to(const VertexSet &s) const;

    bool operator==(const ListAssignment &other) const = default;
};

// color per vertex in [1..q], 0 = unassigned
struct Coloring {
    std::vector<int> color;

    int num_vertices() const { return static_cast<int>(color.size()); }
};

// Vertex subset of a host instance, lists copied unchanged.
struct Subinstance {
    VertexSet vertices;

    Graph graph(const Graph &host) const { return induced_subgraph(host, vertices).graph; }
    ListAssignment lists(const ListAssignment &host) const { return host.restrict_to(vertices); }
};

// ---- validators ----

// First adjacent same-color pair, if any. Only fully assigned vertices count
// against each other; unassigned (0) vertices are reported as a violation
// when require_total is set.
struct ColoringViolation {
    std::string reason;
    int u = -1, v = -1;
};

std::optional<ColoringViolation> check_proper_coloring(const Graph &g, const Coloring &c,
                                                       bool require_total = true);
std::optional<ColoringViolation> check_list_coloring(const Graph &g, const ListAssignment &l,
                                                     const Coloring &c,
                                                     bool require_total = true);

bool is_proper_coloring(const Graph &g, const Coloring &c);
bool is_proper_list_coloring(const Graph &g, const ListAssignment &l, const Coloring &c);

} // namespace modcolor

#endif
