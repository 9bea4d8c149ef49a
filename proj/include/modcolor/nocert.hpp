#ifndef MODCOLOR_NOCERT_HPP
#define MODCOLOR_NOCERT_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"
#include "modcolor/stats.hpp"

#include <optional>
#include <vector>

namespace modcolor {

// One small No-instance (H, Lambda_H) with H in the class.
struct CertificateInstance {
    Graph graph;
    ListAssignment lists;
};

// All (or all vertex-minimal) No-instances of the class with at most g
// vertices, deduplicated up to isomorphism-with-lists.
struct NoCertificateSet {
    ClassTag tag = ClassTag::Independent;
    int q = 0;
    int g = 0;
    bool minimal_only = true;
    std::vector<CertificateInstance> members;
};

NoCertificateSet build_certificate_set(ClassTag tag, int q, int g, bool minimal_only = true,
                                       int hard_cap = 4);

// A blocking configuration: member of the certificate set realized inside
// G - X, with modulator vertices that can block the extra list colors.
struct BlockingConfiguration {
    int member = -1;
    VertexSet subgraph;              // G' vertices, sorted
    std::vector<int> iso;            // iso[i] = H-vertex for subgraph[i]
    std::vector<VertexSet> blockers; // X_1..X_q
    // blocker vertex -> its blocking color; consistent by construction
    std::vector<std::pair<int, int>> blocker_colors;

    VertexSet blocker_union() const;
};

std::optional<BlockingConfiguration> find_blocking_configuration(const Graph &g,
                                                                 const ListAssignment &l,
                                                                 const VertexSet &x,
                                                                 const NoCertificateSet &zeta);

// Per-run evidence for the soundness checks: every skipped coloring and
// every instance decided through the modulator-only branch.
struct NocertTrace {
    struct SkippedColoring {
        Graph graph;
        ListAssignment lists;
        VertexSet chi;
        std::vector<int> colors; // gamma on chi, by position
    };
    struct ModulatorOnly {
        Graph graph;
        ListAssignment lists;
        VertexSet x;
    };
    std::vector<SkippedColoring> skipped;
    std::vector<ModulatorOnly> modulator_only;
};

struct NocertResult {
    bool colorable = false;
    std::optional<Coloring> coloring;
    BranchStats stats;
};

NocertResult solve_nocert(const Graph &g, const ListAssignment &l, const VertexSet &x,
                          const NoCertificateSet &zeta, NocertTrace *trace = nullptr);

} // namespace modcolor

#endif
