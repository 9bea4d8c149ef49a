#ifndef MODCOLOR_STATS_HPP
#define MODCOLOR_STATS_HPP

#include <cstdint>

namespace modcolor {

// Recursion-tree instrumentation shared by the branching solvers.
struct BranchStats {
    std::int64_t nodes_expanded = 0;      // recursive calls
    std::int64_t subsets_enumerated = 0;  // candidate sets / colorings tried
    std::int64_t top_level_subsets = 0;   // candidates tried at recursion depth 0
    int depth = 0;                        // deepest recursion level reached

    void merge(const BranchStats &other) {
        nodes_expanded += other.nodes_expanded;
        subsets_enumerated += other.subsets_enumerated;
        top_level_subsets += other.top_level_subsets;
        if (other.depth > depth)
            depth = other.depth;
    }
};

} // namespace modcolor

#endif
