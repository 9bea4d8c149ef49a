#ifndef MODCOLOR_REDUCTIONS_HPP
#define MODCOLOR_REDUCTIONS_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"

#include <string>
#include <vector>

namespace modcolor {

// CNF formula with 1-indexed variables; literal = signed variable index.
// Normalization removes duplicate literals and drops tautological clauses.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int width() const;
    bool evaluate(const std::vector<bool> &assignment) const;

    static CnfFormula normalized(int num_vars, std::vector<std::vector<int>> raw_clauses);
};

// Path gadget: for every d in [q]^m there is a proper list-coloring avoiding
// d on the distinguished vertices iff d differs from the forbidden vector.
struct ClausePathGadget {
    Graph path;                // vertices 0..6m+1 in path order
    ListAssignment lists;
    std::vector<int> distinguished; // pi_1..pi_m
    std::vector<int> forbidden;     // the color vector c
};

ClausePathGadget build_clause_path(const std::vector<int> &c, int q);

// Generated coloring instance with modulator and provenance metadata.
struct ReductionOutput {
    Graph graph;
    ListAssignment lists;
    Modulator modulator;
    std::vector<std::string> roles; // per-vertex role name

    // variable group -> vertices, covered variables, and the injection
    // table: colors_for_assignment[bits] = colors of the group vertices
    struct GroupEncoding {
        std::vector<int> vertices;
        std::vector<int> variables;
        std::vector<std::vector<int>> colors_for_assignment;

        bool operator==(const GroupEncoding &other) const = default;
    };
    std::vector<GroupEncoding> groups;

    std::vector<int> palette;                    // palette clique, if added
    std::vector<std::vector<int>> paths;         // appended paths, in order
    std::vector<std::vector<int>> distinguished; // per path
};

// 3-SAT -> 3q-list-coloring on Independent+kv, palette clique included;
// q must be a power of two.
ReductionOutput reduce_3sat(const CnfFormula &phi, int q);

// s-SAT -> q-list-coloring on LinearForest+kv via clause paths.
ReductionOutput reduce_ssat(const CnfFormula &phi, int q, int p);

// Palette-clique conversion of a list instance to a plain coloring instance;
// the q clique vertices join the modulator.
ReductionOutput add_palette_clique(const ReductionOutput &in);

// Concatenate all paths into one with fresh full-list connector vertices;
// modulator unchanged, class tag becomes Path.
ReductionOutput join_paths(const ReductionOutput &in);

} // namespace modcolor

#endif
