#ifndef MODCOLOR_FAMILIES_HPP
#define MODCOLOR_FAMILIES_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"

#include <cstdint>

namespace modcolor::families {

struct GeneratedInstance {
    Graph graph;
    ListAssignment lists;
    Modulator modulator;
};

// Benchmark family for the vertex-cover solver: modulator X = {0..k-1}
// containing a K_{q+1} (so the instance is a No and the whole top-level
// subset space is enumerated), independent remainder of k vertices with
// random attachments. Requires k >= q+1.
GeneratedInstance vc_bench_instance(int k, int q, std::uint32_t seed);

// Random F+kv instance: n total vertices, modulator {0..k-1} with random
// internal and crossing edges, remainder drawn from the class. Each
// vertex-color pair survives in the lists with probability keep_num/keep_den
// (keep everything for a plain coloring instance).
GeneratedInstance random_instance(ClassTag tag, int n, int k, int q, std::uint32_t seed,
                                  int keep_num = 4, int keep_den = 5);

} // namespace modcolor::families

#endif
