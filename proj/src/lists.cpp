#include "modcolor/lists.hpp"
#include "modcolor/errors.hpp"

#include <algorithm>

namespace modcolor {

ListAssignment::ListAssignment(int n, int q_, bool full) : q(q_), lists(n) {
    if (n < 0 || q_ < 0)
        throw invalid_input("negative size in list assignment");
    if (full) {
        std::vector<int> all(q_);
        for (int c = 0; c < q_; ++c)
            all[c] = c + 1;
        for (auto &l : lists)
            l = all;
    }
}

bool ListAssignment::has_color(int v, int c) const {
    const auto &l = lists.at(v);
    return std::binary_search(l.begin(), l.end(), c);
}

void ListAssignment::add_color(int v, int c) {
    if (c < 1 || c > q)
        throw invalid_input("color " + std::to_string(c) + " outside palette [1.." +
                            std::to_string(q) + "]");
    auto &l = lists.at(v);
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it == l.end() || *it != c)
        l.insert(it, c);
}

void ListAssignment::remove_color(int v, int c) {
    auto &l = lists.at(v);
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it != l.end() && *it == c)
        l.erase(it);
}

ListAssignment ListAssignment::restrict_to(const VertexSet &s) const {
    ListAssignment out(static_cast<int>(s.size()), q, false);
    for (std::size_t i = 0; i < s.size(); ++i)
        out.lists[i] = lists.at(s[i]);
    return out;
}

std::optional<ColoringViolation> check_proper_coloring(const Graph &g, const Coloring &c,
                                                       bool require_total) {
    if (c.num_vertices() != g.num_vertices())
        return ColoringViolation{"coloring covers wrong vertex count", -1, -1};
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.color[v] == 0) {
            if (require_total)
                return ColoringViolation{"vertex uncolored", v, -1};
            continue;
        }
        for (int w : g.neighbors(v))
            if (w > v && c.color[w] == c.color[v])
                return ColoringViolation{"adjacent vertices share color " +
                                             std::to_string(c.color[v]),
                                         v, w};
    }
    return std::nullopt;
}

std::optional<ColoringViolation> check_list_coloring(const Graph &g, const ListAssignment &l,
                                                     const Coloring &c, bool require_total) {
    if (auto bad = check_proper_coloring(g, c, require_total))
        return bad;
    if (l.num_vertices() != g.num_vertices())
        return ColoringViolation{"lists cover wrong vertex count", -1, -1};
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.color[v] == 0)
            continue;
        if (!l.has_color(v, c.color[v]))
            return ColoringViolation{"color " + std::to_string(c.color[v]) +
                                         " not on vertex list",
                                     v, -1};
    }
    return std::nullopt;
}

bool is_proper_coloring(const Graph &g, const Coloring &c) {
    return !check_proper_coloring(g, c).has_value();
}

bool is_proper_list_coloring(const Graph &g, const ListAssignment &l, const Coloring &c) {
    return !check_list_coloring(g, l, c).has_value();
}

} // namespace modcolor
