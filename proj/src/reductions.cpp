#include "modcolor/reductions.hpp"
#include "modcolor/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace modcolor {

int CnfFormula::width() const {
    std::size_t w = 0;
    for (const auto &cl : clauses)
        w = std::max(w, cl.size());
    return static_cast<int>(w);
}

bool CnfFormula::evaluate(const std::vector<bool> &assignment) const {
    if (static_cast<int>(assignment.size()) != num_vars)
        throw invalid_input("assignment covers wrong variable count");
    for (const auto &cl : clauses) {
        bool sat = false;
        for (int lit : cl)
            if (assignment[std::abs(lit) - 1] == (lit > 0)) {
                sat = true;
                break;
            }
        if (!sat)
            return false;
    }
    return true;
}

CnfFormula CnfFormula::normalized(int num_vars, std::vector<std::vector<int>> raw_clauses) {
    if (num_vars < 0)
        throw invalid_input("negative variable count");
    CnfFormula out;
    out.num_vars = num_vars;
    for (auto &cl : raw_clauses) {
        if (cl.empty())
            throw invalid_input("empty clause");
        std::vector<int> norm;
        bool tautology = false;
        for (int lit : cl) {
            int var = std::abs(lit);
            if (lit == 0 || var > num_vars)
                throw invalid_input("literal " + std::to_string(lit) + " out of range");
            if (std::find(norm.begin(), norm.end(), lit) != norm.end())
                continue;
            if (std::find(norm.begin(), norm.end(), -lit) != norm.end()) {
                tautology = true;
                break;
            }
            norm.push_back(lit);
        }
        if (!tautology)
            out.clauses.push_back(std::move(norm));
    }
    return out;
}

ClausePathGadget build_clause_path(const std::vector<int> &c, int q) {
    if (q < 3)
        throw invalid_input("clause path requires q >= 3");
    if (c.empty())
        throw invalid_input("clause path requires at least one forbidden color");
    for (int ci : c)
        if (ci < 1 || ci > q)
            throw invalid_input("forbidden color out of palette [1.." + std::to_string(q) + "]");

    int m = static_cast<int>(c.size());
    int n = 6 * m + 2;
    ClausePathGadget out;
    out.forbidden = c;
    out.path = Graph(n);
    for (int i = 0; i + 1 < n; ++i)
        out.path.add_edge(i, i + 1);

    out.lists = ListAssignment(n, q, false);
    out.lists.add_color(0, 2);
    out.lists.add_color(n - 1, 2);
    auto default_list = [](int i) {
        return std::pair<int, int>{i % 3 + 1, (i + 1) % 3 + 1};
    };
    for (int i = 1; i <= 6 * m; ++i) {
        auto [a, b] = default_list(i);
        out.lists.add_color(i, a);
        out.lists.add_color(i, b);
    }
    for (int i = 1; i <= m; ++i) {
        // interior of group D_i: the middle four vertices
        int pi = -1;
        for (int v = 6 * (i - 1) + 2; v <= 6 * (i - 1) + 5; ++v) {
            auto [a, b] = default_list(v);
            if (a != c[i - 1] && b != c[i - 1]) {
                pi = v;
                break;
            }
        }
        out.lists.add_color(pi, c[i - 1]);
        out.distinguished.push_back(pi);
    }
    return out;
}

namespace {

struct GraphBuilder {
    std::vector<std::vector<int>> lists;
    std::vector<std::string> roles;
    std::vector<std::pair<int, int>> edges;

    int add_vertex(std::vector<int> list, std::string role) {
        lists.push_back(std::move(list));
        roles.push_back(std::move(role));
        return static_cast<int>(lists.size()) - 1;
    }

    void finish(ReductionOutput &out, int q) const {
        out.graph = Graph(static_cast<int>(lists.size()));
        for (auto [u, v] : edges)
            out.graph.add_edge(u, v);
        out.lists = ListAssignment(static_cast<int>(lists.size()), q, false);
        for (std::size_t v = 0; v < lists.size(); ++v)
            for (int c : lists[v])
                out.lists.add_color(static_cast<int>(v), c);
        out.roles = roles;
    }
};

std::vector<int> range_list(int lo, int hi) {
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

} // namespace

ReductionOutput reduce_3sat(const CnfFormula &phi, int q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw invalid_input("reduce_3sat requires q to be a power of two, q >= 2");
    int t = std::countr_zero(static_cast<unsigned>(q));
    for (const auto &cl : phi.clauses)
        if (cl.size() > 3)
            throw invalid_input("reduce_3sat requires clause width at most 3");

    const int n = phi.num_vars;
    const int gcount = (n + t - 1) / t;
    const int big_q = 3 * q;

    ReductionOutput out;
    GraphBuilder b;

    // variable vertices, three layers
    auto vvert = [&](int layer, int group) { return (layer - 1) * gcount + (group - 1); };
    for (int layer = 1; layer <= 3; ++layer)
        for (int j = 1; j <= gcount; ++j)
            b.add_vertex(range_list((layer - 1) * q + 1, layer * q), "variable");

    // propagation vertices between consecutive layers
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= gcount; ++j)
            for (int c = (i - 1) * q + 1; c <= i * q; ++c)
                for (int c2 = i * q + 1; c2 <= (i + 1) * q; ++c2) {
                    if (c2 == c + q)
                        continue;
                    int u = b.add_vertex({c, c2}, "propagation");
                    b.edges.emplace_back(u, vvert(i, j));
                    b.edges.emplace_back(u, vvert(i + 1, j));
                }

    // clause vertices: one per falsifying color triple
    for (const auto &cl : phi.clauses) {
        std::vector<int> lits = cl;
        while (lits.size() < 3)
            lits.push_back(lits.back()); // pad by repeating a literal
        std::array<std::vector<int>, 3> falsifying;
        std::array<int, 3> group{};
        for (int i = 0; i < 3; ++i) {
            int var = std::abs(lits[i]);
            int sign = lits[i] > 0 ? 1 : 0;
            int bit = (var - 1) % t;
            group[i] = (var - 1) / t + 1;
            for (int c = 1; c <= q; ++c)
                if (((c - 1) >> bit & 1) != sign)
                    falsifying[i].push_back(c + i * q);
        }
        for (int g1 : falsifying[0])
            for (int g2 : falsifying[1])
                for (int g3 : falsifying[2]) {
                    int w = b.add_vertex({g1, g2, g3}, "clause");
                    b.edges.emplace_back(w, vvert(1, group[0]));
                    b.edges.emplace_back(w, vvert(2, group[1]));
                    b.edges.emplace_back(w, vvert(3, group[2]));
                }
    }

    // palette clique over all 3q colors
    std::vector<int> palette;
    int pre_palette = static_cast<int>(b.lists.size());
    for (int c = 1; c <= big_q; ++c)
        palette.push_back(b.add_vertex(range_list(1, big_q), "palette"));
    for (int i = 0; i < big_q; ++i)
        for (int j = i + 1; j < big_q; ++j)
            b.edges.emplace_back(palette[i], palette[j]);
    for (int v = 0; v < pre_palette; ++v) {
        std::vector<char> on(big_q + 1, 0);
        for (int c : b.lists[v])
            on[c] = 1;
        for (int c = 1; c <= big_q; ++c)
            if (!on[c])
                b.edges.emplace_back(v, palette[c - 1]);
    }

    b.finish(out, big_q);
    out.palette = palette;
    out.modulator.target = ClassTag::Independent;
    for (int layer = 1; layer <= 3; ++layer)
        for (int j = 1; j <= gcount; ++j)
            out.modulator.vertices.push_back(vvert(layer, j));
    for (int v : palette)
        out.modulator.vertices.push_back(v);
    out.modulator.vertices = normalize_vertex_set(out.modulator.vertices, out.graph.num_vertices());

    for (int j = 1; j <= gcount; ++j) {
        ReductionOutput::GroupEncoding enc;
        enc.vertices = {vvert(1, j), vvert(2, j), vvert(3, j)};
        int lo = (j - 1) * t + 1, hi = std::min(j * t, n);
        for (int var = lo; var <= hi; ++var)
            enc.variables.push_back(var);
        int bits = hi - lo + 1;
        for (int pattern = 0; pattern < (1 << bits); ++pattern)
            enc.colors_for_assignment.push_back(
                {pattern + 1, pattern + 1 + q, pattern + 1 + 2 * q});
        out.groups.push_back(std::move(enc));
    }
    return out;
}

ReductionOutput reduce_ssat(const CnfFormula &phi, int q, int p) {
    if (q < 3)
        throw invalid_input("reduce_ssat requires q >= 3");
    if (p < 1)
        throw invalid_input("reduce_ssat requires p >= 1");
    // group size floor(log2 q^p), computed exactly
    std::int64_t qp = 1;
    for (int i = 0; i < p; ++i) {
        qp *= q;
        if (qp > (std::int64_t(1) << 40))
            throw invalid_input("q^p too large");
    }
    int gs = 63 - std::countl_zero(static_cast<std::uint64_t>(qp));
    if (gs < 1)
        throw invalid_input("degenerate group size");

    const int n = phi.num_vars;
    const int t = (n + gs - 1) / gs;

    ReductionOutput out;
    GraphBuilder b;

    auto group_first_var = [&](int i) { return (i - 1) * gs + 1; };
    auto group_bits = [&](int i) { return std::min(i * gs, n) - group_first_var(i) + 1; };
    auto gvert = [&](int i, int l) { return (i - 1) * p + (l - 1); };
    for (int i = 1; i <= t; ++i)
        for (int l = 1; l <= p; ++l)
            b.add_vertex(range_list(1, q), "variable");

    // injection: assignment bits (first variable = most significant) read as
    // a binary number, emitted as p base-q digits, most significant first
    auto colors_of_pattern = [&](std::int64_t pattern) {
        std::vector<int> colors(p);
        for (int l = p - 1; l >= 0; --l) {
            colors[l] = static_cast<int>(pattern % q) + 1;
            pattern /= q;
        }
        return colors;
    };
    auto pattern_of_colors = [&](const std::vector<int> &colors) {
        std::int64_t pattern = 0;
        for (int l = 0; l < p; ++l)
            pattern = pattern * q + (colors[l] - 1);
        return pattern;
    };

    for (int i = 1; i <= t; ++i) {
        ReductionOutput::GroupEncoding enc;
        for (int l = 1; l <= p; ++l)
            enc.vertices.push_back(gvert(i, l));
        if (n > 0 && group_bits(i) > 0)
            for (int var = group_first_var(i); var <= std::min(i * gs, n); ++var)
                enc.variables.push_back(var);
        for (std::int64_t pattern = 0; pattern < (std::int64_t(1) << enc.variables.size());
             ++pattern)
            enc.colors_for_assignment.push_back(colors_of_pattern(pattern));
        out.groups.push_back(std::move(enc));
    }

    // clause paths, one per bad coloring of the involved groups
    for (const auto &cl : phi.clauses) {
        int sp = static_cast<int>(cl.size());
        std::vector<int> grp(sp);
        for (int i = 0; i < sp; ++i)
            grp[i] = (std::abs(cl[i]) - 1) / gs + 1;
        std::vector<int> dgroups = grp;
        std::sort(dgroups.begin(), dgroups.end());
        dgroups.erase(std::unique(dgroups.begin(), dgroups.end()), dgroups.end());
        int dg = static_cast<int>(dgroups.size());

        // odometer over colorings mu of the involved group vertices
        std::vector<int> mu(dg * p, 1);
        auto mu_color = [&](int group_id, int l) {
            int di = static_cast<int>(std::lower_bound(dgroups.begin(), dgroups.end(),
                                                       group_id) -
                                      dgroups.begin());
            return mu[di * p + (l - 1)];
        };
        while (true) {
            // decode each involved group; mu is bad if some group coloring is
            // outside the injection image or the clause is falsified
            bool bad = false;
            std::vector<std::int64_t> patterns(dg, 0);
            for (int di = 0; di < dg && !bad; ++di) {
                std::vector<int> colors(mu.begin() + di * p, mu.begin() + (di + 1) * p);
                std::int64_t pattern = pattern_of_colors(colors);
                int bits = group_bits(dgroups[di]);
                if (pattern >= (std::int64_t(1) << bits))
                    bad = true;
                else
                    patterns[di] = pattern;
            }
            if (!bad) {
                bool satisfied = false;
                for (int i = 0; i < sp && !satisfied; ++i) {
                    int var = std::abs(cl[i]);
                    int di = static_cast<int>(std::lower_bound(dgroups.begin(), dgroups.end(),
                                                               grp[i]) -
                                              dgroups.begin());
                    int bits = group_bits(grp[i]);
                    int offset = var - group_first_var(grp[i]);
                    int value = patterns[di] >> (bits - 1 - offset) & 1;
                    if (value == (cl[i] > 0 ? 1 : 0))
                        satisfied = true;
                }
                bad = !satisfied;
            }

            if (bad) {
                std::vector<int> c_mu;
                for (int i = 0; i < sp; ++i)
                    for (int l = 1; l <= p; ++l)
                        c_mu.push_back(mu_color(grp[i], l));
                ClausePathGadget gadget = build_clause_path(c_mu, q);
                int base = static_cast<int>(b.lists.size());
                std::vector<int> path_ids;
                for (int v = 0; v < gadget.path.num_vertices(); ++v) {
                    path_ids.push_back(b.add_vertex(gadget.lists.lists[v], "path"));
                }
                for (auto [u, v] : gadget.path.edges())
                    b.edges.emplace_back(base + u, base + v);
                std::vector<int> dist_ids;
                for (int i = 0; i < sp; ++i)
                    for (int l = 1; l <= p; ++l) {
                        int pi = gadget.distinguished[i * p + (l - 1)];
                        b.edges.emplace_back(base + pi, gvert(grp[i], l));
                        dist_ids.push_back(base + pi);
                    }
                out.paths.push_back(std::move(path_ids));
                out.distinguished.push_back(std::move(dist_ids));
            }

            int pos = dg * p - 1;
            while (pos >= 0 && mu[pos] == q) {
                mu[pos] = 1;
                --pos;
            }
            if (pos < 0)
                break;
            ++mu[pos];
        }
    }

    b.finish(out, q);
    out.modulator.target = ClassTag::LinearForest;
    for (int i = 1; i <= t; ++i)
        for (int l = 1; l <= p; ++l)
            out.modulator.vertices.push_back(gvert(i, l));
    out.modulator.vertices = normalize_vertex_set(out.modulator.vertices, out.graph.num_vertices());
    return out;
}

ReductionOutput add_palette_clique(const ReductionOutput &in) {
    if (!in.palette.empty())
        throw invalid_input("palette clique already present");
    int q = in.lists.q;
    int n = in.graph.num_vertices();
    ReductionOutput out = in;
    out.graph = Graph(n + q);
    for (auto [u, v] : in.graph.edges())
        out.graph.add_edge(u, v);
    out.lists = ListAssignment(n + q, q, false);
    for (int v = 0; v < n; ++v)
        out.lists.lists[v] = in.lists.lists[v];
    for (int c = 1; c <= q; ++c) {
        int pv = n + c - 1;
        out.palette.push_back(pv);
        out.roles.push_back("palette");
        out.lists.lists[pv] = range_list(1, q);
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            out.graph.add_edge(n + i, n + j);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= q; ++c)
            if (!in.lists.has_color(v, c))
                out.graph.add_edge(v, n + c - 1);
    out.modulator.vertices = set_union(out.modulator.vertices, out.palette);
    return out;
}

ReductionOutput join_paths(const ReductionOutput &in) {
    VertexSet remainder =
        set_complement(in.graph.num_vertices(), in.modulator.vertices);
    auto rem = induced_subgraph(in.graph, remainder);
    if (!is_member(rem.graph, ClassTag::LinearForest))
        throw invalid_input("non-modulator part is not a disjoint union of paths");
    VertexSet recorded;
    for (const auto &pth : in.paths)
        for (int v : pth)
            recorded.push_back(v);
    if (normalize_vertex_set(recorded, in.graph.num_vertices()) != remainder)
        throw invalid_input("recorded paths do not cover the non-modulator part");

    ReductionOutput out = in;
    out.modulator.target = ClassTag::Path;
    if (in.paths.size() <= 1)
        return out;

    int n = in.graph.num_vertices();
    int connectors = static_cast<int>(in.paths.size()) - 1;
    out.graph = Graph(n + connectors);
    for (auto [u, v] : in.graph.edges())
        out.graph.add_edge(u, v);
    out.lists = ListAssignment(n + connectors, in.lists.q, false);
    for (int v = 0; v < n; ++v)
        out.lists.lists[v] = in.lists.lists[v];

    std::vector<int> joined;
    std::vector<int> joined_dist;
    for (std::size_t i = 0; i < in.paths.size(); ++i) {
        joined.insert(joined.end(), in.paths[i].begin(), in.paths[i].end());
        joined_dist.insert(joined_dist.end(), in.distinguished[i].begin(),
                           in.distinguished[i].end());
        if (i + 1 < in.paths.size()) {
            int cv = n + static_cast<int>(i);
            out.roles.push_back("connector");
            out.lists.lists[cv] = range_list(1, in.lists.q);
            out.graph.add_edge(in.paths[i].back(), cv);
            out.graph.add_edge(cv, in.paths[i + 1].front());
            joined.push_back(cv);
        }
    }
    out.paths = {joined};
    out.distinguished = {joined_dist};
    return out;
}

} // namespace modcolor
