#ifndef MODCOLOR_ORACLE_HPP
#define MODCOLOR_ORACLE_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"

#include <cstdint>
#include <optional>

namespace modcolor::oracle {

// Node budget for the backtracking oracle; MODCOLOR_BUDGET overrides.
std::int64_t default_node_budget();

// Ground-truth list-coloring decision by backtracking with unit propagation
// on singleton lists. Deterministic for fixed input. budget < 0 means the
// default budget; nodes_out, when set, receives the search-tree size.
std::optional<Coloring> brute_force_list_color(const Graph &g, const ListAssignment &l,
                                               std::int64_t budget = -1,
                                               std::int64_t *nodes_out = nullptr);

// Chromatic number by inclusion-exclusion over independent-set counts.
int chromatic_number_ie(const Graph &g, int cap = 24);

// The palette-clique reduction from list coloring to plain coloring.
// palette[c-1] is the vertex representing color c; the output graph is
// q-colorable iff (g, l) is q-list-colorable.
struct PaletteJoin {
    Graph graph;
    VertexSet palette;
};

PaletteJoin list_to_coloring(const Graph &g, const ListAssignment &l);

// sum over v of q - |lists(v)|
std::int64_t deficiency(const Graph &g, const ListAssignment &l);

// Vertex-minimal No-subinstance of a No-instance, greedy removal in
// ascending vertex order.
Subinstance minimize_no_instance(const Graph &g, const ListAssignment &l);

} // namespace modcolor::oracle

#endif
