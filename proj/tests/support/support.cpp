#include "support/support.hpp"

#include "modcolor/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace support {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::vector<Graph> all_graphs(int n) {
    // augmentation from all representatives one size down
    std::vector<Graph> level{Graph(1)};
    for (int size = 1; size < n; ++size) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph &g : level)
            for (std::uint32_t nb = 0; nb < (1u << size); ++nb) {
                Graph h(size + 1);
                for (auto [u, v] : g.edges())
                    h.add_edge(u, v);
                for (int v = 0; v < size; ++v)
                    if (nb >> v & 1)
                        h.add_edge(v, size);
                if (seen.insert(canonical_form(h)).second)
                    next.push_back(std::move(h));
            }
        level = std::move(next);
    }
    return level;
}

int brute_chromatic(const Graph &g) {
    if (g.num_vertices() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (oracle::brute_force_list_color(g, ListAssignment(g.num_vertices(), k, true)))
            return k;
}

bool sat_brute(const CnfFormula &phi) {
    for (std::uint32_t bits = 0; bits < (1u << phi.num_vars); ++bits) {
        std::vector<bool> assignment(phi.num_vars);
        for (int i = 0; i < phi.num_vars; ++i)
            assignment[i] = bits >> i & 1;
        if (phi.evaluate(assignment))
            return true;
    }
    return phi.clauses.empty();
}

CnfFormula random_cnf(int num_vars, int num_clauses, int width, std::mt19937 &rng) {
    std::vector<std::vector<int>> clauses;
    std::vector<int> vars(num_vars);
    for (int i = 0; i < num_vars; ++i)
        vars[i] = i + 1;
    for (int j = 0; j < num_clauses; ++j) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<int> clause;
        for (int i = 0; i < std::min(width, num_vars); ++i)
            clause.push_back(rng() % 2 ? vars[i] : -vars[i]);
        clauses.push_back(std::move(clause));
    }
    return CnfFormula::normalized(num_vars, std::move(clauses));
}

Graph random_graph(int n, int num, int den, std::mt19937 &rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % den) < num)
                g.add_edge(u, v);
    return g;
}

ListAssignment random_lists(int n, int q, int num, int den, std::mt19937 &rng) {
    ListAssignment l(n, q, true);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= q; ++c)
            if (static_cast<int>(rng() % den) >= num)
                l.remove_color(v, c);
    return l;
}

} // namespace support
