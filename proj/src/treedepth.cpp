#include "modcolor/treedepth.hpp"
#include "modcolor/errors.hpp"
#include "modcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace modcolor {

int TreedepthDecomposition::depth() const {
    int n = num_vertices();
    int best = 0;
    for (int v = 0; v < n; ++v) {
        int len = 0;
        for (int u = v; u != -1; u = parent[u]) {
            if (++len > n)
                throw invalid_input("cyclic parent map in treedepth decomposition");
        }
        best = std::max(best, len);
    }
    return best;
}

namespace {

bool is_ancestor(const std::vector<int> &parent, int anc, int v) {
    for (int u = parent[v]; u != -1; u = parent[u])
        if (u == anc)
            return true;
    return false;
}

} // namespace

bool validate_decomposition(const Graph &g, const TreedepthDecomposition &t) {
    int n = g.num_vertices();
    if (t.num_vertices() != n)
        return false;
    for (int v = 0; v < n; ++v)
        if (t.parent[v] != -1 && (t.parent[v] < 0 || t.parent[v] >= n || t.parent[v] == v))
            return false;
    // acyclic parent map
    for (int v = 0; v < n; ++v) {
        int len = 0;
        for (int u = v; u != -1; u = t.parent[u])
            if (++len > n)
                return false;
    }
    // closure property
    for (auto [u, v] : g.edges())
        if (!is_ancestor(t.parent, u, v) && !is_ancestor(t.parent, v, u))
            return false;
    return true;
}

namespace {

class ExactTdComponent {
public:
    ExactTdComponent(const Graph &g, const VertexSet &comp) : verts_(comp) {
        int k = static_cast<int>(comp.size());
        adj_.assign(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(comp[i], comp[j])) {
                    adj_[i] |= 1u << j;
                    adj_[j] |= 1u << i;
                }
    }

    int solve(std::uint32_t mask) {
        if (mask == 0)
            return 0;
        if (auto it = td_.find(mask); it != td_.end())
            return it->second;
        int result;
        std::uint32_t first = component_of(mask, std::countr_zero(mask));
        if (first != mask) {
            // disconnected: maximum over components
            result = 0;
            for (std::uint32_t rem = mask; rem;) {
                std::uint32_t comp = component_of(mask, std::countr_zero(rem));
                result = std::max(result, solve(comp));
                rem &= ~comp;
            }
            root_[mask] = -1;
        } else {
            result = std::popcount(mask) + 1;
            int best_root = -1;
            for (std::uint32_t rem = mask; rem;) {
                int v = std::countr_zero(rem);
                rem &= rem - 1;
                int cand = 1 + solve(mask & ~(1u << v));
                if (cand < result) {
                    result = cand;
                    best_root = v;
                }
            }
            root_[mask] = best_root;
        }
        td_[mask] = result;
        return result;
    }

    void reconstruct(std::uint32_t mask, int par, std::vector<int> &parent) {
        if (mask == 0)
            return;
        solve(mask);
        int r = root_[mask];
        if (r == -1) {
            for (std::uint32_t rem = mask; rem;) {
                std::uint32_t comp = component_of(mask, std::countr_zero(rem));
                reconstruct(comp, par, parent);
                rem &= ~comp;
            }
            return;
        }
        parent[verts_[r]] = par;
        reconstruct(mask & ~(1u << r), verts_[r], parent);
    }

private:
    std::uint32_t component_of(std::uint32_t mask, int start) const {
        std::uint32_t comp = 1u << start, frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t next = adj_[v] & mask & ~comp;
            comp |= next;
            frontier |= next;
        }
        return comp;
    }

    VertexSet verts_;
    std::vector<std::uint32_t> adj_;
    std::unordered_map<std::uint32_t, int> td_;
    std::unordered_map<std::uint32_t, int> root_;
};

} // namespace

std::pair<int, TreedepthDecomposition> exact_treedepth(const Graph &g, int cap) {
    TreedepthDecomposition t;
    t.parent.assign(g.num_vertices(), -1);
    int depth = 0;
    for (const VertexSet &comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) > cap)
            throw resource_limit("exact_treedepth cap " + std::to_string(cap) +
                                 " exceeded (component of size " +
                                 std::to_string(comp.size()) + ")");
        ExactTdComponent solver(g, comp);
        std::uint32_t full =
            comp.size() == 32 ? ~0u : (1u << comp.size()) - 1;
        depth = std::max(depth, solver.solve(full));
        solver.reconstruct(full, -1, t.parent);
    }
    return {depth, t};
}

TreedepthDecomposition dfs_treedepth(const Graph &g) {
    TreedepthDecomposition t;
    t.parent.assign(g.num_vertices(), -1);
    std::vector<char> seen(g.num_vertices(), 0);
    auto dfs = [&](auto &&self, int v) -> void {
        seen[v] = 1;
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                t.parent[w] = v;
                self(self, w);
            }
    };
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!seen[v])
            dfs(dfs, v);
    return t;
}

Subinstance prune_to_q_plus_1_colorable(const Graph &g, const ListAssignment &l) {
    if (oracle::brute_force_list_color(g, l))
        throw invalid_input("prune_to_q_plus_1_colorable requires a No-instance");
    VertexSet alive = full_vertex_set(g.num_vertices());
    while (!alive.empty() &&
           oracle::chromatic_number_ie(induced_subgraph(g, alive).graph) > l.q + 1) {
        alive.erase(alive.begin());
    }
    return Subinstance{alive};
}

namespace {

VertexSet mark_recursive(const Graph &g, const std::vector<int> &parent, const VertexSet &alive,
                         const ListAssignment &lists) {
    // first non-list-colorable component, components in min-vertex order
    for (const VertexSet &comp : connected_components(g, alive)) {
        auto sub = induced_subgraph(g, comp);
        if (oracle::brute_force_list_color(sub.graph, lists.restrict_to(comp)))
            continue;

        // root of the decomposition restricted to this component
        int root = -1;
        for (int v : comp) {
            bool has_anc = false;
            for (int u = parent[v]; u != -1 && !has_anc; u = parent[u])
                if (set_contains(comp, u))
                    has_anc = true;
            if (!has_anc) {
                root = v;
                break;
            }
        }

        VertexSet marked{root};
        VertexSet remainder = set_minus(comp, {root});
        for (int c : lists.lists[root]) {
            ListAssignment reduced = lists;
            for (int w : g.neighbors(root))
                if (set_contains(remainder, w))
                    reduced.remove_color(w, c);
            marked = set_union(marked, mark_recursive(g, parent, remainder, reduced));
        }
        return marked;
    }
    throw invalid_input("marking procedure reached a colorable instance");
}

} // namespace

VertexSet mark_no_certificate(const Graph &g, const ListAssignment &l,
                              const TreedepthDecomposition &t) {
    if (l.num_vertices() != g.num_vertices())
        throw invalid_input("lists cover wrong vertex count");
    if (!validate_decomposition(g, t))
        throw invalid_input("invalid treedepth decomposition");
    if (oracle::brute_force_list_color(g, l))
        throw invalid_input("mark_no_certificate requires a No-instance");
    return mark_recursive(g, t.parent, full_vertex_set(g.num_vertices()), l);
}

} // namespace modcolor
