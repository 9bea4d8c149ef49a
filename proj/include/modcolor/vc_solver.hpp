#ifndef MODCOLOR_VC_SOLVER_HPP
#define MODCOLOR_VC_SOLVER_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"
#include "modcolor/stats.hpp"

#include <optional>
#include <utility>

namespace modcolor {

// BFS 2-coloring per component; witness uses colors {1, 2}.
std::pair<bool, std::optional<Coloring>> is_bipartite(const Graph &g);

struct VcSolveResult {
    bool colorable = false;
    std::optional<Coloring> coloring;
    BranchStats stats;
};

// q-coloring given a vertex cover X: enumerate independent S <= X of size at
// most floor(k/q), extend by the uncovered vertices without neighbors in S,
// assign them the freed color and recurse with q-1.
VcSolveResult solve_vc(const Graph &g, const VertexSet &x, int q);

} // namespace modcolor

#endif
