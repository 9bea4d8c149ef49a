#ifndef MODCOLOR_TREEDEPTH_HPP
#define MODCOLOR_TREEDEPTH_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"

#include <utility>

namespace modcolor {

// Rooted forest on V(G); every edge of G joins an ancestor-descendant pair.
struct TreedepthDecomposition {
    std::vector<int> parent; // -1 = root

    int num_vertices() const { return static_cast<int>(parent.size()); }
    // max root-to-leaf vertex count
    int depth() const;
};

// closure property + acyclic parent map
bool validate_decomposition(const Graph &g, const TreedepthDecomposition &t);

// td(G) with a witness decomposition; memoized subset recursion per
// component, td(K1) = 1, disconnected graphs take the component maximum.
std::pair<int, TreedepthDecomposition> exact_treedepth(const Graph &g, int cap = 16);

// DFS tree from the lowest-index vertex of each component.
TreedepthDecomposition dfs_treedepth(const Graph &g);

// Remove lowest-index vertices until the remaining graph is (q+1)-colorable;
// No-ness is preserved.
Subinstance prune_to_q_plus_1_colorable(const Graph &g, const ListAssignment &l);

// The recursive marking procedure: a vertex set M with (G[M], lists|M) still
// a No-instance and |M| <= (q^t - 1)/(q - 1) for a depth-t decomposition.
VertexSet mark_no_certificate(const Graph &g, const ListAssignment &l,
                              const TreedepthDecomposition &t);

} // namespace modcolor

#endif
