#include "modcolor/oracle.hpp"
#include "modcolor/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace modcolor::oracle {

std::int64_t default_node_budget() {
    if (const char *env = std::getenv("MODCOLOR_BUDGET")) {
        char *end = nullptr;
        long long val = std::strtoll(env, &end, 10);
        if (end != env && val > 0)
            return val;
    }
    return 50'000'000;
}

namespace {

class ListColorSearch {
public:
    ListColorSearch(const Graph &g, const ListAssignment &l, std::int64_t budget)
        : g_(g), budget_(budget), color_(g.num_vertices(), 0), mask_(g.num_vertices(), 0) {
        if (l.q > 31)
            throw invalid_input("palette size too large for oracle (max 31)");
        if (l.num_vertices() != g.num_vertices())
            throw invalid_input("lists cover wrong vertex count");
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int c : l.lists[v])
                mask_[v] |= 1u << (c - 1);
    }

    std::optional<Coloring> run() {
        bool found = solve();
        if (nodes_out_)
            *nodes_out_ = nodes_;
        if (found)
            return Coloring{color_};
        return std::nullopt;
    }

    void set_nodes_out(std::int64_t *out) { nodes_out_ = out; }

private:
    bool solve() {
        if (++nodes_ > budget_)
            throw resource_limit("list-coloring oracle node budget exceeded");
        // MRV pick doubles as unit propagation: singleton lists go first.
        int best = -1;
        int best_size = 32 + 1;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (color_[v] != 0)
                continue;
            int size = std::popcount(mask_[v]);
            if (size < best_size) {
                best = v;
                best_size = size;
                if (size == 0)
                    return false;
            }
        }
        if (best == -1)
            return true;
        std::uint32_t avail = mask_[best];
        while (avail) {
            int c = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            color_[best] = c;
            std::size_t trail_mark = trail_.size();
            for (int w : g_.neighbors(best))
                if (color_[w] == 0 && (mask_[w] >> (c - 1) & 1)) {
                    mask_[w] &= ~(1u << (c - 1));
                    trail_.push_back(w);
                }
            if (solve())
                return true;
            while (trail_.size() > trail_mark) {
                mask_[trail_.back()] |= 1u << (c - 1);
                trail_.pop_back();
            }
        }
        color_[best] = 0;
        return false;
    }

    const Graph &g_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<std::uint32_t> mask_;
    std::vector<int> trail_;
    std::int64_t *nodes_out_ = nullptr;
};

} // namespace

std::optional<Coloring> brute_force_list_color(const Graph &g, const ListAssignment &l,
                                               std::int64_t budget, std::int64_t *nodes_out) {
    if (budget < 0)
        budget = default_node_budget();
    ListColorSearch search(g, l, budget);
    search.set_nodes_out(nodes_out);
    return search.run();
}

int chromatic_number_ie(const Graph &g, int cap) {
    int n = g.num_vertices();
    if (cap > 30)
        cap = 30;
    if (n > cap)
        throw resource_limit("chromatic_number_ie cap " + std::to_string(cap) +
                             " exceeded (n=" + std::to_string(n) + ")");
    if (n == 0)
        return 0;

    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int w : g.neighbors(v))
            closed[v] |= 1u << w;
    }

    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    // ind[S] = number of independent subsets of S, empty set included
    std::vector<std::uint64_t> ind(std::size_t(full) + 1);
    ind[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        ind[s] = ind[s & ~(1u << v)] + ind[s & ~closed[v]];
    }

    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> pw(std::size_t(full) + 1, 1);
    for (int k = 1; k <= n; ++k) {
        cpp_int total = 0;
        for (std::uint32_t s = 0; s <= full; ++s) {
            pw[s] *= ind[s];
            if ((n - std::popcount(s)) % 2 == 0)
                total += pw[s];
            else
                total -= pw[s];
        }
        if (total > 0)
            return k;
    }
    // unreachable: n colors always suffice
    throw invalid_input("inclusion-exclusion found no chromatic number");
}

PaletteJoin list_to_coloring(const Graph &g, const ListAssignment &l) {
    if (l.q < 1)
        throw invalid_input("palette size must be at least 1");
    if (l.num_vertices() != g.num_vertices())
        throw invalid_input("lists cover wrong vertex count");
    int n = g.num_vertices();
    PaletteJoin out;
    out.graph = Graph(n + l.q);
    for (auto [u, v] : g.edges())
        out.graph.add_edge(u, v);
    for (int c = 1; c <= l.q; ++c)
        out.palette.push_back(n + c - 1);
    for (int c = 1; c <= l.q; ++c)
        for (int c2 = c + 1; c2 <= l.q; ++c2)
            out.graph.add_edge(n + c - 1, n + c2 - 1);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= l.q; ++c)
            if (!l.has_color(v, c))
                out.graph.add_edge(v, n + c - 1);
    return out;
}

std::int64_t deficiency(const Graph &g, const ListAssignment &l) {
    if (l.num_vertices() != g.num_vertices())
        throw invalid_input("lists cover wrong vertex count");
    std::int64_t total = 0;
    for (const auto &list : l.lists)
        total += l.q - static_cast<std::int64_t>(list.size());
    return total;
}

Subinstance minimize_no_instance(const Graph &g, const ListAssignment &l) {
    if (brute_force_list_color(g, l))
        throw invalid_input("minimize_no_instance requires a No-instance");
    VertexSet kept = full_vertex_set(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexSet trial = set_minus(kept, {v});
        auto sub = induced_subgraph(g, trial);
        if (!brute_force_list_color(sub.graph, l.restrict_to(trial)))
            kept = std::move(trial);
    }
    return Subinstance{kept};
}

} // namespace modcolor::oracle
