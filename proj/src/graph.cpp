#include "modcolor/graph.hpp"
#include "modcolor/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace modcolor {

const char *class_tag_name(ClassTag tag) {
    switch (tag) {
    case ClassTag::Independent: return "independent";
    case ClassTag::Forest: return "forest";
    case ClassTag::LinearForest: return "linearforest";
    case ClassTag::Path: return "path";
    case ClassTag::Split: return "split";
    case ClassTag::UnionSplit: return "unionsplit";
    case ClassTag::Cograph: return "cograph";
    }
    return "?";
}

std::optional<ClassTag> class_tag_from_name(const std::string &name) {
    for (ClassTag tag : {ClassTag::Independent, ClassTag::Forest, ClassTag::LinearForest,
                         ClassTag::Path, ClassTag::Split, ClassTag::UnionSplit,
                         ClassTag::Cograph}) {
        if (name == class_tag_name(tag))
            return tag;
    }
    return std::nullopt;
}

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0)
        throw invalid_input("negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw invalid_input("vertex index " + std::to_string(v) + " out of range [0.." +
                            std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw invalid_input("self-loop on vertex " + std::to_string(u));
    auto &au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return; // duplicate
    au.insert(it, v);
    auto &av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto &au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int> &Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet full_vertex_set(int n) {
    VertexSet s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool set_contains(const VertexSet &s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_complement(int n, const VertexSet &s) {
    return set_minus(full_vertex_set(n), s);
}

VertexSet normalize_vertex_set(std::vector<int> s, int n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= n)
            throw invalid_input("vertex " + std::to_string(v) + " out of range [0.." +
                                std::to_string(n) + ")");
    return s;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &s) {
    VertexSet sel = normalize_vertex_set(s, g.num_vertices());
    InducedSubgraph out;
    out.old_to_new.assign(g.num_vertices(), -1);
    out.new_to_old = sel;
    for (std::size_t i = 0; i < sel.size(); ++i)
        out.old_to_new[sel[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(sel.size()));
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (int w : g.neighbors(sel[i]))
            if (out.old_to_new[w] > static_cast<int>(i))
                out.graph.add_edge(static_cast<int>(i), out.old_to_new[w]);
    return out;
}

std::vector<VertexSet> connected_components(const Graph &g) {
    return connected_components(g, full_vertex_set(g.num_vertices()));
}

std::vector<VertexSet> connected_components(const Graph &g, const VertexSet &alive) {
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (int v : alive)
        in[v] = 1;
    std::vector<VertexSet> comps;
    for (int start : alive) {
        if (seen[start])
            continue;
        VertexSet comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph &g) {
    if (g.num_vertices() == 0)
        return true;
    return connected_components(g).size() == 1;
}

bool is_acyclic(const Graph &g) {
    // forest iff m = n - #components
    std::size_t comps = connected_components(g).size();
    return g.num_edges() + comps == static_cast<std::size_t>(g.num_vertices());
}

namespace {

bool is_split(const Graph &g) {
    // Hammer-Simeone degree criterion.
    int n = g.num_vertices();
    std::vector<long> d(n);
    for (int v = 0; v < n; ++v)
        d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    long m = 0;
    for (int i = 1; i <= n; ++i)
        if (d[i - 1] >= i - 1)
            m = i;
    long lhs = 0, rhs = m * (m - 1);
    for (long i = 0; i < m; ++i)
        lhs += d[i];
    for (long i = m; i < n; ++i)
        rhs += d[i];
    return lhs == rhs;
}

bool has_induced_p4(const Graph &g) {
    int n = g.num_vertices();
    // ordered middle edge (b, c), endpoints a-b and c-d
    for (int b = 0; b < n; ++b)
        for (int c : g.neighbors(b))
            for (int a : g.neighbors(b)) {
                if (a == c || g.has_edge(a, c))
                    continue;
                for (int d : g.neighbors(c)) {
                    if (d == a || d == b)
                        continue;
                    if (!g.has_edge(d, a) && !g.has_edge(d, b))
                        return true;
                }
            }
    return false;
}

} // namespace

bool is_member(const Graph &g, ClassTag tag) {
    switch (tag) {
    case ClassTag::Independent:
        return g.num_edges() == 0;
    case ClassTag::Forest:
        return is_acyclic(g);
    case ClassTag::LinearForest: {
        if (!is_acyclic(g))
            return false;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) > 2)
                return false;
        return true;
    }
    case ClassTag::Path:
        // the empty graph and K1 count as paths
        return is_member(g, ClassTag::LinearForest) && is_connected(g);
    case ClassTag::Split:
        return is_split(g);
    case ClassTag::UnionSplit: {
        for (const VertexSet &comp : connected_components(g))
            if (!is_split(induced_subgraph(g, comp).graph))
                return false;
        return true;
    }
    case ClassTag::Cograph:
        return !has_induced_p4(g);
    }
    return false;
}

bool verify_modulator(const Graph &g, const VertexSet &x, ClassTag tag) {
    VertexSet xs = normalize_vertex_set(x, g.num_vertices());
    return is_member(induced_subgraph(g, set_complement(g.num_vertices(), xs)).graph, tag);
}

std::optional<InducedIso> find_induced_isomorphism(const Graph &h, const Graph &g,
                                                   const VertexSet &candidates) {
    int hn = h.num_vertices();
    VertexSet cand = normalize_vertex_set(candidates, g.num_vertices());
    if (hn > static_cast<int>(cand.size()))
        return std::nullopt;
    if (hn == 0)
        return InducedIso{};

    // subsets of `cand` of size hn in lexicographic order
    std::vector<int> idx(hn);
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() -> bool {
        int i = hn - 1;
        while (i >= 0 && idx[i] == static_cast<int>(cand.size()) - hn + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < hn; ++j)
            idx[j] = idx[j - 1] + 1;
        return true;
    };

    std::vector<int> perm(hn);
    do {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < hn && ok; ++i)
                for (int j = i + 1; j < hn && ok; ++j)
                    if (g.has_edge(cand[idx[i]], cand[idx[j]]) !=
                        h.has_edge(perm[i], perm[j]))
                        ok = false;
            if (ok) {
                InducedIso iso;
                for (int i = 0; i < hn; ++i)
                    iso.domain.push_back(cand[idx[i]]);
                iso.map = perm;
                return iso;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (advance());
    return std::nullopt;
}

std::uint64_t canonical_form(const Graph &g) {
    int n = g.num_vertices();
    if (n > 11)
        throw resource_limit("canonical_form supports at most 11 vertices");
    if (n < 2)
        return 0;
    std::vector<std::uint16_t> rows(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            rows[u] |= std::uint16_t(1u << v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (rows[perm[i]] >> perm[j] & 1)
                    code |= 1ull << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> enumerate_graphs_up_to(int n_max, ClassTag tag, int hard_cap) {
    if (n_max > hard_cap)
        throw resource_limit("enumeration cap " + std::to_string(hard_cap) +
                             " exceeded (n_max=" + std::to_string(n_max) + ")");
    std::vector<Graph> out;
    // grow one vertex at a time: every graph on n vertices arises from some
    // graph on n-1 vertices by attaching a new vertex, so augmenting all
    // representatives reaches every isomorphism class
    std::vector<Graph> level{Graph(1)};
    for (int n = 1; n <= n_max; ++n) {
        for (const Graph &g : level)
            if (is_member(g, tag))
                out.push_back(g);
        if (n == n_max)
            break;
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph &g : level)
            for (std::uint32_t nb = 0; nb < (1u << n); ++nb) {
                Graph h(n + 1);
                for (auto [u, v] : g.edges())
                    h.add_edge(u, v);
                for (int v = 0; v < n; ++v)
                    if (nb >> v & 1)
                        h.add_edge(v, n);
                if (seen.insert(canonical_form(h)).second)
                    next.push_back(std::move(h));
            }
        level = std::move(next);
    }
    return out;
}

} // namespace modcolor
