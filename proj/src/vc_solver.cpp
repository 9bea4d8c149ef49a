#include "modcolor/vc_solver.hpp"
#include "modcolor/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace modcolor {

std::pair<bool, std::optional<Coloring>> is_bipartite(const Graph &g) {
    Coloring c{std::vector<int>(g.num_vertices(), 0)};
    for (int start = 0; start < g.num_vertices(); ++start) {
        if (c.color[start] != 0)
            continue;
        c.color[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (c.color[w] == 0) {
                    c.color[w] = 3 - c.color[v];
                    queue.push_back(w);
                } else if (c.color[w] == c.color[v]) {
                    return {false, std::nullopt};
                }
            }
        }
    }
    return {true, std::move(c)};
}

namespace {

class VcSolver {
public:
    VcSolver(const Graph &g) : g_(g), alive_(g.num_vertices(), 1), color_(g.num_vertices(), 0) {}

    bool solve(const VertexSet &x, int q, int depth, BranchStats &stats) {
        ++stats.nodes_expanded;
        stats.depth = std::max(stats.depth, depth);
        if (q <= 2)
            return solve_base(x, q);

        int k = static_cast<int>(x.size());
        int bound = k / q;
        std::vector<int> idx;
        // subsets of x by size ascending, then lexicographic
        for (int size = 0; size <= bound; ++size) {
            idx.resize(size);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                ++stats.subsets_enumerated;
                if (depth == 0)
                    ++stats.top_level_subsets;
                if (try_subset(x, idx, q, depth, stats))
                    return true;
                int i = size - 1;
                while (i >= 0 && idx[i] == k - size + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
        return false;
    }

private:
    bool try_subset(const VertexSet &x, const std::vector<int> &idx, int q, int depth,
                    BranchStats &stats) {
        VertexSet s;
        s.reserve(idx.size());
        for (int i : idx)
            s.push_back(x[i]);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (g_.has_edge(s[i], s[j]))
                    return false;
        // extend by uncovered vertices without a neighbor in s
        VertexSet removed = s;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (!alive_[v] || set_contains(x, v) || set_contains(s, v))
                continue;
            bool touches = false;
            for (int w : s)
                if (g_.has_edge(v, w)) {
                    touches = true;
                    break;
                }
            if (!touches)
                removed.push_back(v);
        }
        std::sort(removed.begin(), removed.end());
        for (int v : removed) {
            alive_[v] = 0;
            color_[v] = q;
        }
        bool ok = solve(set_minus(x, s), q - 1, depth + 1, stats);
        if (!ok)
            for (int v : removed) {
                alive_[v] = 1;
                color_[v] = 0;
            }
        return ok;
    }

    bool solve_base(const VertexSet &x, int q) {
        (void)x;
        VertexSet alive;
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (alive_[v])
                alive.push_back(v);
        auto sub = induced_subgraph(g_, alive);
        if (q <= 1) {
            if (sub.graph.num_edges() > 0 || (q == 0 && !alive.empty()))
                return false;
            for (int v : alive)
                color_[v] = 1;
            return true;
        }
        auto [bip, witness] = is_bipartite(sub.graph);
        if (!bip)
            return false;
        for (std::size_t i = 0; i < alive.size(); ++i)
            color_[alive[i]] = witness->color[i];
        return true;
    }

public:
    const Graph &g_;
    std::vector<char> alive_;
    std::vector<int> color_;
};

} // namespace

VcSolveResult solve_vc(const Graph &g, const VertexSet &x, int q) {
    VertexSet xs = normalize_vertex_set(x, g.num_vertices());
    if (q < 1)
        throw invalid_input("q must be at least 1");
    if (!verify_modulator(g, xs, ClassTag::Independent))
        throw invalid_input("given set is not a vertex cover");

    VcSolveResult result;
    VcSolver solver(g);
    result.colorable = solver.solve(xs, q, 0, result.stats);
    if (result.colorable)
        result.coloring = Coloring{solver.color_};
    return result;
}

} // namespace modcolor
