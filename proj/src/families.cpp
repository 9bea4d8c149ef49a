#include "modcolor/families.hpp"
#include "modcolor/errors.hpp"

#include <algorithm>
#include <random>

namespace modcolor::families {

namespace {

bool chance(std::mt19937 &rng, int num, int den) {
    return std::uniform_int_distribution<int>(0, den - 1)(rng) < num;
}

int pick(std::mt19937 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void add_cograph_edges(Graph &g, int lo, int hi, std::mt19937 &rng) {
    if (hi - lo <= 1)
        return;
    int mid = pick(rng, lo + 1, hi - 1);
    add_cograph_edges(g, lo, mid, rng);
    add_cograph_edges(g, mid, hi, rng);
    if (chance(rng, 1, 2))
        for (int u = lo; u < mid; ++u)
            for (int v = mid; v < hi; ++v)
                g.add_edge(u, v);
}

void add_split_component(Graph &g, int lo, int hi, std::mt19937 &rng) {
    int size = hi - lo;
    int clique = pick(rng, 0, size);
    for (int u = lo; u < lo + clique; ++u)
        for (int v = u + 1; v < lo + clique; ++v)
            g.add_edge(u, v);
    for (int u = lo; u < lo + clique; ++u)
        for (int v = lo + clique; v < hi; ++v)
            if (chance(rng, 1, 2))
                g.add_edge(u, v);
}

// remainder vertices occupy [k..n); build a member of the class on them
void add_remainder_edges(Graph &g, ClassTag tag, int k, int n, std::mt19937 &rng) {
    int m = n - k;
    switch (tag) {
    case ClassTag::Independent:
        break;
    case ClassTag::Forest:
        for (int i = 1; i < m; ++i)
            if (chance(rng, 7, 10))
                g.add_edge(k + pick(rng, 0, i - 1), k + i);
        break;
    case ClassTag::LinearForest:
        for (int i = 0; i + 1 < m; ++i)
            if (chance(rng, 3, 4))
                g.add_edge(k + i, k + i + 1);
        break;
    case ClassTag::Path:
        for (int i = 0; i + 1 < m; ++i)
            g.add_edge(k + i, k + i + 1);
        break;
    case ClassTag::Split:
        if (m > 0)
            add_split_component(g, k, n, rng);
        break;
    case ClassTag::UnionSplit:
        for (int lo = k; lo < n;) {
            int hi = std::min(n, lo + pick(rng, 1, 5));
            add_split_component(g, lo, hi, rng);
            lo = hi;
        }
        break;
    case ClassTag::Cograph:
        if (m > 0)
            add_cograph_edges(g, k, n, rng);
        break;
    }
}

} // namespace

GeneratedInstance vc_bench_instance(int k, int q, std::uint32_t seed) {
    if (q < 1 || k < q + 1)
        throw invalid_input("vc_bench_instance requires k >= q+1");
    std::mt19937 rng(seed);
    int n = 2 * k;
    GeneratedInstance out;
    out.graph = Graph(n);
    // K_{q+1} pins the answer to No
    for (int u = 0; u <= q; ++u)
        for (int v = u + 1; v <= q; ++v)
            out.graph.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (!out.graph.has_edge(u, v) && chance(rng, 1, 20))
                out.graph.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v)
            if (chance(rng, 3, 10))
                out.graph.add_edge(u, v);
    out.lists = ListAssignment(n, q, true);
    out.modulator = Modulator{full_vertex_set(k), ClassTag::Independent};
    return out;
}

GeneratedInstance random_instance(ClassTag tag, int n, int k, int q, std::uint32_t seed,
                                  int keep_num, int keep_den) {
    if (k < 0 || k > n || q < 1)
        throw invalid_input("random_instance parameter out of range");
    std::mt19937 rng(seed);
    GeneratedInstance out;
    out.graph = Graph(n);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (chance(rng, 2, 5))
                out.graph.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v)
            if (chance(rng, 7, 20))
                out.graph.add_edge(u, v);
    add_remainder_edges(out.graph, tag, k, n, rng);
    out.lists = ListAssignment(n, q, true);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= q; ++c)
            if (!chance(rng, keep_num, keep_den))
                out.lists.remove_color(v, c);
    out.modulator = Modulator{full_vertex_set(k), tag};
    return out;
}

} // namespace modcolor::families
