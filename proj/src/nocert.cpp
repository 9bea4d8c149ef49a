#include "modcolor/nocert.hpp"
#include "modcolor/errors.hpp"
#include "modcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace modcolor {

VertexSet BlockingConfiguration::blocker_union() const {
    VertexSet out;
    for (const auto &b : blockers)
        out = set_union(out, b);
    return out;
}

namespace {

// (adjacency code, per-vertex list masks) minimized over all permutations
using ListCanon = std::pair<std::uint64_t, std::vector<std::uint32_t>>;

ListCanon canonical_list_form(const Graph &g, const ListAssignment &l) {
    int n = g.num_vertices();
    std::vector<std::uint16_t> rows(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            rows[u] |= std::uint16_t(1u << v);
    std::vector<std::uint32_t> masks(n, 0);
    for (int v = 0; v < n; ++v)
        for (int c : l.lists[v])
            masks[v] |= 1u << (c - 1);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ListCanon best;
    bool first = true;
    do {
        ListCanon cand;
        cand.second.resize(n);
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            cand.second[i] = masks[perm[i]];
            for (int j = i + 1; j < n; ++j, ++bit)
                if (rows[perm[i]] >> perm[j] & 1)
                    cand.first |= 1ull << bit;
        }
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

NoCertificateSet build_certificate_set(ClassTag tag, int q, int g, bool minimal_only,
                                       int hard_cap) {
    if (q < 1)
        throw invalid_input("q must be at least 1");
    if (g < 1)
        throw invalid_input("certificate size bound must be at least 1");
    if (g > hard_cap)
        throw resource_limit("certificate enumeration cap " + std::to_string(hard_cap) +
                             " exceeded (g=" + std::to_string(g) + ")");

    NoCertificateSet zeta{tag, q, g, minimal_only, {}};
    std::set<ListCanon> seen;
    for (const Graph &h : enumerate_graphs_up_to(g, tag)) {
        int n = h.num_vertices();
        std::vector<std::uint32_t> masks(n, 0);
        const std::uint32_t mask_end = 1u << q;
        while (true) {
            ListAssignment l(n, q, false);
            for (int v = 0; v < n; ++v)
                for (int c = 1; c <= q; ++c)
                    if (masks[v] >> (c - 1) & 1)
                        l.lists[v].push_back(c);
            bool keep = !oracle::brute_force_list_color(h, l).has_value();
            if (keep && minimal_only) {
                for (int v = 0; v < n && keep; ++v) {
                    VertexSet rest = set_minus(full_vertex_set(n), {v});
                    if (!oracle::brute_force_list_color(induced_subgraph(h, rest).graph,
                                                        l.restrict_to(rest)))
                        keep = false;
                }
            }
            if (keep && seen.insert(canonical_list_form(h, l)).second)
                zeta.members.push_back({h, std::move(l)});

            // odometer over per-vertex list masks, last vertex fastest
            int pos = n - 1;
            while (pos >= 0 && masks[pos] + 1 == mask_end) {
                masks[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++masks[pos];
        }
    }
    return zeta;
}

std::optional<BlockingConfiguration> find_blocking_configuration(const Graph &g,
                                                                 const ListAssignment &l,
                                                                 const VertexSet &x,
                                                                 const NoCertificateSet &zeta) {
    if (l.q != zeta.q)
        throw invalid_input("certificate set built for different palette size");
    VertexSet xs = normalize_vertex_set(x, g.num_vertices());
    if (!verify_modulator(g, xs, zeta.tag))
        throw invalid_input("modulator does not place the rest of the graph in class " +
                            std::string(class_tag_name(zeta.tag)));
    VertexSet rest = set_complement(g.num_vertices(), xs);

    for (std::size_t m_idx = 0; m_idx < zeta.members.size(); ++m_idx) {
        const CertificateInstance &member = zeta.members[m_idx];
        const int hn = member.graph.num_vertices();
        if (hn > static_cast<int>(rest.size()))
            continue;

        std::vector<int> idx(hn);
        std::iota(idx.begin(), idx.end(), 0);
        auto advance = [&]() -> bool {
            int i = hn - 1;
            while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - hn + i)
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
                bool iso_ok = true;
                for (int i = 0; i < hn && iso_ok; ++i)
                    for (int j = i + 1; j < hn && iso_ok; ++j)
                        if (g.has_edge(rest[idx[i]], rest[idx[j]]) !=
                            member.graph.has_edge(perm[i], perm[j]))
                            iso_ok = false;
                if (!iso_ok)
                    continue;

                // greedily pick blockers, one color per modulator vertex
                std::vector<int> assigned(g.num_vertices(), 0);
                std::vector<VertexSet> blockers(l.q);
                std::vector<std::pair<int, int>> blocker_colors;
                bool ok = true;
                for (int i = 0; i < hn && ok; ++i) {
                    int v = rest[idx[i]];
                    for (int c : l.lists[v]) {
                        if (member.lists.has_color(perm[i], c))
                            continue;
                        int found = -1;
                        for (int w : g.neighbors(v)) {
                            if (!set_contains(xs, w) || !l.has_color(w, c))
                                continue;
                            if (assigned[w] == 0 || assigned[w] == c) {
                                found = w;
                                break;
                            }
                        }
                        if (found == -1) {
                            ok = false;
                            break;
                        }
                        if (assigned[found] == 0) {
                            assigned[found] = c;
                            blockers[c - 1] = set_union(blockers[c - 1], {found});
                            blocker_colors.emplace_back(found, c);
                        }
                    }
                }
                if (!ok)
                    continue;

                BlockingConfiguration cfg;
                cfg.member = static_cast<int>(m_idx);
                for (int i = 0; i < hn; ++i)
                    cfg.subgraph.push_back(rest[idx[i]]);
                cfg.iso = perm;
                cfg.blockers = std::move(blockers);
                std::sort(blocker_colors.begin(), blocker_colors.end());
                cfg.blocker_colors = std::move(blocker_colors);
                return cfg;
            } while (std::next_permutation(perm.begin(), perm.end()));
        } while (advance());
    }
    return std::nullopt;
}

namespace {

class NocertSolver {
public:
    NocertSolver(const NoCertificateSet &zeta, NocertTrace *trace, int orig_n)
        : color_(orig_n, 0), zeta_(zeta), trace_(trace) {}

    bool solve(const Graph &cur, const ListAssignment &lists, const VertexSet &x,
               const std::vector<int> &to_orig, int depth) {
        ++stats_.nodes_expanded;
        stats_.depth = std::max(stats_.depth, depth);

        auto cfg = find_blocking_configuration(cur, lists, x, zeta_);
        if (!cfg)
            return decide_on_modulator(cur, lists, x, to_orig);

        VertexSet chi = cfg->blocker_union();
        if (chi.empty()) {
            // the certificate appears in G - X with no blocking needed; the
            // empty coloring is the one being skipped
            if (trace_)
                trace_->skipped.push_back({cur, lists, {}, {}});
            return false;
        }

        std::vector<int> canon(chi.size(), 0);
        for (auto [w, c] : cfg->blocker_colors) {
            auto pos = std::lower_bound(chi.begin(), chi.end(), w) - chi.begin();
            canon[pos] = c;
        }

        std::vector<int> gamma(chi.size(), 0);
        return enumerate_colorings(cur, lists, x, to_orig, chi, canon, gamma, 0, depth);
    }

    BranchStats stats_;
    std::vector<int> color_;

private:
    bool enumerate_colorings(const Graph &cur, const ListAssignment &lists, const VertexSet &x,
                             const std::vector<int> &to_orig, const VertexSet &chi,
                             const std::vector<int> &canon, std::vector<int> &gamma,
                             std::size_t pos, int depth) {
        if (pos == chi.size())
            return branch_on_coloring(cur, lists, x, to_orig, chi, canon, gamma, depth);
        int v = chi[pos];
        for (int c : lists.lists[v]) {
            bool conflict = false;
            for (std::size_t j = 0; j < pos && !conflict; ++j)
                if (gamma[j] == c && cur.has_edge(chi[j], v))
                    conflict = true;
            if (conflict)
                continue;
            gamma[pos] = c;
            if (enumerate_colorings(cur, lists, x, to_orig, chi, canon, gamma, pos + 1, depth))
                return true;
        }
        gamma[pos] = 0;
        return false;
    }

    bool branch_on_coloring(const Graph &cur, const ListAssignment &lists, const VertexSet &x,
                            const std::vector<int> &to_orig, const VertexSet &chi,
                            const std::vector<int> &canon, const std::vector<int> &gamma,
                            int depth) {
        ++stats_.subsets_enumerated;
        if (depth == 0)
            ++stats_.top_level_subsets;

        if (gamma == canon) {
            // the one coloring identified as non-extendible
            if (trace_)
                trace_->skipped.push_back({cur, lists, chi, gamma});
            return false;
        }

        ListAssignment reduced = lists;
        for (std::size_t i = 0; i < chi.size(); ++i)
            for (int w : cur.neighbors(chi[i]))
                if (!set_contains(chi, w))
                    reduced.remove_color(w, gamma[i]);

        VertexSet rest = set_complement(cur.num_vertices(), chi);
        auto sub = induced_subgraph(cur, rest);
        ListAssignment sub_lists = reduced.restrict_to(rest);
        VertexSet sub_x;
        for (int v : set_minus(x, chi))
            sub_x.push_back(sub.old_to_new[v]);
        std::vector<int> sub_to_orig(rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i)
            sub_to_orig[i] = to_orig[rest[i]];

        if (solve(sub.graph, sub_lists, sub_x, sub_to_orig, depth + 1)) {
            for (std::size_t i = 0; i < chi.size(); ++i)
                color_[to_orig[chi[i]]] = gamma[i];
            return true;
        }
        return false;
    }

    // No blocking configuration left. With a complete certificate set the
    // answer now only depends on G[X] and the first modulator coloring
    // extends; with an undersized set that claim can fail, so stay honest and
    // keep trying modulator colorings until one extends.
    bool decide_on_modulator(const Graph &cur, const ListAssignment &lists, const VertexSet &x,
                             const std::vector<int> &to_orig) {
        if (trace_)
            trace_->modulator_only.push_back({cur, lists, x});

        auto sub_x = induced_subgraph(cur, x);
        ListAssignment lists_x = lists.restrict_to(x);
        auto joined = oracle::list_to_coloring(sub_x.graph, lists_x);
        if (oracle::chromatic_number_ie(joined.graph) > lists.q)
            return false;

        VertexSet rest = set_complement(cur.num_vertices(), x);
        auto sub_rest = induced_subgraph(cur, rest);
        std::vector<int> gamma(x.size(), 0);
        return extend_modulator_coloring(cur, lists, x, rest, sub_rest, to_orig, gamma, 0);
    }

    bool extend_modulator_coloring(const Graph &cur, const ListAssignment &lists,
                                   const VertexSet &x, const VertexSet &rest,
                                   const InducedSubgraph &sub_rest,
                                   const std::vector<int> &to_orig, std::vector<int> &gamma,
                                   std::size_t pos) {
        if (pos == x.size()) {
            ListAssignment reduced = lists;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (int w : cur.neighbors(x[i]))
                    if (!set_contains(x, w))
                        reduced.remove_color(w, gamma[i]);
            auto witness_rest =
                oracle::brute_force_list_color(sub_rest.graph, reduced.restrict_to(rest));
            if (!witness_rest)
                return false;
            for (std::size_t i = 0; i < x.size(); ++i)
                color_[to_orig[x[i]]] = gamma[i];
            for (std::size_t i = 0; i < rest.size(); ++i)
                color_[to_orig[rest[i]]] = witness_rest->color[i];
            return true;
        }
        int v = x[pos];
        for (int c : lists.lists[v]) {
            bool conflict = false;
            for (std::size_t j = 0; j < pos && !conflict; ++j)
                if (gamma[j] == c && cur.has_edge(x[j], v))
                    conflict = true;
            if (conflict)
                continue;
            gamma[pos] = c;
            if (extend_modulator_coloring(cur, lists, x, rest, sub_rest, to_orig, gamma,
                                          pos + 1))
                return true;
        }
        gamma[pos] = 0;
        return false;
    }

    const NoCertificateSet &zeta_;
    NocertTrace *trace_;
};

} // namespace

NocertResult solve_nocert(const Graph &g, const ListAssignment &l, const VertexSet &x,
                          const NoCertificateSet &zeta, NocertTrace *trace) {
    if (l.num_vertices() != g.num_vertices())
        throw invalid_input("lists cover wrong vertex count");
    if (l.q != zeta.q)
        throw invalid_input("certificate set built for different palette size");
    VertexSet xs = normalize_vertex_set(x, g.num_vertices());
    if (!verify_modulator(g, xs, zeta.tag))
        throw invalid_input("modulator does not place the rest of the graph in class " +
                            std::string(class_tag_name(zeta.tag)));

    NocertSolver solver(zeta, trace, g.num_vertices());
    std::vector<int> to_orig = full_vertex_set(g.num_vertices());
    NocertResult result;
    result.colorable = solver.solve(g, l, xs, to_orig, 0);
    result.stats = solver.stats_;
    if (result.colorable)
        result.coloring = Coloring{solver.color_};
    return result;
}

} // namespace modcolor
