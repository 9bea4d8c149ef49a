#include "modcolor/io.hpp"
#include "modcolor/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace modcolor::io {

namespace {

using ordered_json = nlohmann::ordered_json;

// Line-oriented tokenizer: skips blank and `c` lines, tracks line numbers
// for error messages.
class LineReader {
public:
    explicit LineReader(std::istream &in) : in_(in) {}

    // next non-comment line split into tokens; empty vector at EOF
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok)
                tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c")
                continue;
            return tokens;
        }
        return {};
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw invalid_input("line " + std::to_string(lineno_) + ": " + msg);
    }

    int parse_int(const std::string &tok) const {
        try {
            std::size_t pos = 0;
            int value = std::stoi(tok, &pos);
            if (pos != tok.size())
                fail("bad integer '" + tok + "'");
            return value;
        } catch (const invalid_input &) {
            throw;
        } catch (const std::exception &) {
            fail("bad integer '" + tok + "'");
        }
    }

private:
    std::istream &in_;
    int lineno_ = 0;
};

Graph read_graph_block(LineReader &r) {
    auto header = r.next();
    if (header.size() != 4 || header[0] != "p" || header[1] != "edge")
        r.fail("expected 'p edge <n> <m>' header");
    int n = r.parse_int(header[2]);
    int m = r.parse_int(header[3]);
    if (n < 0 || m < 0)
        r.fail("negative size in header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        auto line = r.next();
        if (line.size() != 3 || line[0] != "e")
            r.fail("expected 'e <u> <v>' edge line");
        int u = r.parse_int(line[1]), v = r.parse_int(line[2]);
        if (u < 1 || u > n || v < 1 || v > n)
            r.fail("edge endpoint out of range");
        try {
            g.add_edge(u - 1, v - 1);
        } catch (const invalid_input &e) {
            r.fail(e.what());
        }
    }
    return g;
}

ListAssignment read_lists_block(LineReader &r) {
    auto header = r.next();
    if (header.size() != 4 || header[0] != "p" || header[1] != "lists")
        r.fail("expected 'p lists <n> <q>' header");
    int n = r.parse_int(header[2]);
    int q = r.parse_int(header[3]);
    if (n < 0 || q < 0)
        r.fail("negative size in header");
    ListAssignment l(n, q, true);
    std::vector<char> seen(n, 0);
    // list lines are optional; stop at EOF or a non-`l` line is an error
    // only inside multi-record streams, so we peek via the caller instead:
    // here every remaining line must be an `l` line.
    for (auto line = r.next(); !line.empty(); line = r.next()) {
        if (line[0] != "l" || line.size() < 2)
            r.fail("expected 'l <v> <colors...>' line");
        int v = r.parse_int(line[1]);
        if (v < 1 || v > n)
            r.fail("vertex out of range");
        if (seen[v - 1])
            r.fail("duplicate list line for vertex " + std::to_string(v));
        seen[v - 1] = 1;
        l.lists[v - 1].clear();
        for (std::size_t i = 2; i < line.size(); ++i) {
            int c = r.parse_int(line[i]);
            if (c < 1 || c > q)
                r.fail("color out of palette");
            l.add_color(v - 1, c);
        }
    }
    return l;
}

// variant with a known number of list lines, for multi-record streams
ListAssignment read_lists_block_counted(LineReader &r) {
    auto header = r.next();
    if (header.size() != 4 || header[0] != "p" || header[1] != "lists")
        r.fail("expected 'p lists <n> <q>' header");
    int n = r.parse_int(header[2]);
    int q = r.parse_int(header[3]);
    ListAssignment l(n, q, false);
    for (int i = 0; i < n; ++i) {
        auto line = r.next();
        if (line.empty() || line[0] != "l" || line.size() < 2)
            r.fail("expected 'l <v> <colors...>' line");
        int v = r.parse_int(line[1]);
        if (v != i + 1)
            r.fail("list lines must cover vertices in order");
        for (std::size_t j = 2; j < line.size(); ++j) {
            int c = r.parse_int(line[j]);
            if (c < 1 || c > q)
                r.fail("color out of palette");
            l.add_color(v - 1, c);
        }
    }
    return l;
}

void write_graph_block(std::ostream &out, const Graph &g) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_lists_block(std::ostream &out, const ListAssignment &l) {
    out << "p lists " << l.num_vertices() << ' ' << l.q << '\n';
    for (int v = 0; v < l.num_vertices(); ++v) {
        out << "l " << v + 1;
        for (int c : l.lists[v])
            out << ' ' << c;
        out << '\n';
    }
}

} // namespace

Graph read_graph(std::istream &in) {
    LineReader r(in);
    Graph g = read_graph_block(r);
    if (!r.next().empty())
        r.fail("trailing content after edge list");
    return g;
}

void write_graph(std::ostream &out, const Graph &g) { write_graph_block(out, g); }

ListAssignment read_lists(std::istream &in) {
    LineReader r(in);
    return read_lists_block(r);
}

void write_lists(std::ostream &out, const ListAssignment &l) { write_lists_block(out, l); }

VertexSet read_vertex_set(std::istream &in, int n) {
    LineReader r(in);
    std::vector<int> raw;
    for (auto line = r.next(); !line.empty(); line = r.next())
        for (const auto &tok : line) {
            int v = r.parse_int(tok);
            if (v < 1 || v > n)
                r.fail("vertex out of range");
            raw.push_back(v - 1);
        }
    return normalize_vertex_set(std::move(raw), n);
}

void write_vertex_set(std::ostream &out, const VertexSet &s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        out << s[i] + 1 << (i + 1 == s.size() ? "" : " ");
    out << '\n';
}

Coloring read_coloring(std::istream &in) {
    LineReader r(in);
    auto header = r.next();
    if (header.size() != 4 || header[0] != "p" || header[1] != "coloring")
        r.fail("expected 'p coloring <n> <q>' header");
    int n = r.parse_int(header[2]);
    int q = r.parse_int(header[3]);
    if (n < 0 || q < 0)
        r.fail("negative size in header");
    Coloring c;
    c.color.assign(n, 0);
    for (auto line = r.next(); !line.empty(); line = r.next()) {
        if (line.size() != 3 || line[0] != "v")
            r.fail("expected 'v <vertex> <color>' line");
        int v = r.parse_int(line[1]);
        int col = r.parse_int(line[2]);
        if (v < 1 || v > n)
            r.fail("vertex out of range");
        if (col < 0 || col > q)
            r.fail("color out of palette");
        c.color[v - 1] = col;
    }
    return c;
}

void write_coloring(std::ostream &out, const Coloring &c, int q) {
    out << "p coloring " << c.num_vertices() << ' ' << q << '\n';
    for (int v = 0; v < c.num_vertices(); ++v)
        out << "v " << v + 1 << ' ' << c.color[v] << '\n';
}

TreedepthDecomposition read_decomposition(std::istream &in) {
    LineReader r(in);
    std::vector<std::pair<int, int>> entries;
    int n = 0;
    for (auto line = r.next(); !line.empty(); line = r.next()) {
        if (line.size() != 3 || line[0] != "t")
            r.fail("expected 't <v> <parent>' line");
        int v = r.parse_int(line[1]);
        int par = r.parse_int(line[2]);
        if (v < 1 || par < 0)
            r.fail("vertex ids must be positive (parent 0 = root)");
        entries.emplace_back(v, par);
        n = std::max({n, v, par});
    }
    TreedepthDecomposition t;
    t.parent.assign(n, -2);
    for (auto [v, par] : entries) {
        if (t.parent[v - 1] != -2)
            throw invalid_input("duplicate decomposition line for vertex " + std::to_string(v));
        t.parent[v - 1] = par - 1;
    }
    for (int v = 0; v < n; ++v)
        if (t.parent[v] == -2)
            throw invalid_input("missing decomposition line for vertex " + std::to_string(v + 1));
    return t;
}

void write_decomposition(std::ostream &out, const TreedepthDecomposition &t) {
    for (int v = 0; v < t.num_vertices(); ++v)
        out << "t " << v + 1 << ' ' << t.parent[v] + 1 << '\n';
}

CnfFormula read_cnf(std::istream &in) {
    LineReader r(in);
    auto header = r.next();
    if (header.size() != 4 || header[0] != "p" || header[1] != "cnf")
        r.fail("expected 'p cnf <n> <m>' header");
    int n = r.parse_int(header[2]);
    int m = r.parse_int(header[3]);
    if (n < 0 || m < 0)
        r.fail("negative size in header");
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    for (auto line = r.next(); !line.empty(); line = r.next())
        for (const auto &tok : line) {
            int lit = r.parse_int(tok);
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    if (!current.empty())
        throw invalid_input("unterminated clause at end of CNF file");
    if (static_cast<int>(clauses.size()) != m)
        throw invalid_input("clause count " + std::to_string(clauses.size()) +
                            " does not match header " + std::to_string(m));
    return CnfFormula::normalized(n, std::move(clauses));
}

void write_cnf(std::ostream &out, const CnfFormula &phi) {
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto &cl : phi.clauses) {
        for (int lit : cl)
            out << lit << ' ';
        out << "0\n";
    }
}

NoCertificateSet read_certificate_set(std::istream &in) {
    LineReader r(in);
    auto header = r.next();
    if (header.size() != 7 || header[0] != "p" || header[1] != "zeta")
        r.fail("expected 'p zeta <class> <q> <g> <minimal> <count>' header");
    auto tag = class_tag_from_name(header[2]);
    if (!tag)
        r.fail("unknown class '" + header[2] + "'");
    NoCertificateSet zeta;
    zeta.tag = *tag;
    zeta.q = r.parse_int(header[3]);
    zeta.g = r.parse_int(header[4]);
    zeta.minimal_only = r.parse_int(header[5]) != 0;
    int count = r.parse_int(header[6]);
    if (count < 0)
        r.fail("negative member count");
    for (int i = 0; i < count; ++i) {
        CertificateInstance member;
        member.graph = read_graph_block(r);
        member.lists = read_lists_block_counted(r);
        if (member.lists.num_vertices() != member.graph.num_vertices() ||
            member.lists.q != zeta.q)
            r.fail("certificate member lists do not match its graph");
        zeta.members.push_back(std::move(member));
    }
    if (!r.next().empty())
        r.fail("trailing content after certificate set");
    return zeta;
}

void write_certificate_set(std::ostream &out, const NoCertificateSet &zeta) {
    out << "p zeta " << class_tag_name(zeta.tag) << ' ' << zeta.q << ' ' << zeta.g << ' '
        << (zeta.minimal_only ? 1 : 0) << ' ' << zeta.members.size() << '\n';
    for (const auto &member : zeta.members) {
        write_graph_block(out, member.graph);
        write_lists_block(out, member.lists);
    }
}

ReductionMeta meta_of(const ReductionOutput &out) {
    ReductionMeta meta;
    meta.roles = out.roles;
    meta.groups = out.groups;
    meta.palette = out.palette;
    meta.paths = out.paths;
    meta.distinguished = out.distinguished;
    return meta;
}

namespace {

std::vector<int> to_one_indexed(const std::vector<int> &v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v)
        out.push_back(x + 1);
    return out;
}

std::vector<int> from_one_indexed(const std::vector<int> &v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) {
        if (x < 1)
            throw invalid_input("vertex ids in meta records are 1-indexed");
        out.push_back(x - 1);
    }
    return out;
}

} // namespace

void write_meta(std::ostream &out, const ReductionMeta &meta) {
    for (std::size_t v = 0; v < meta.roles.size(); ++v) {
        ordered_json rec{{"type", "role"}, {"vertex", v + 1}, {"role", meta.roles[v]}};
        out << rec.dump() << '\n';
    }
    for (const auto &grp : meta.groups) {
        ordered_json rec{{"type", "group"},
                         {"vertices", to_one_indexed(grp.vertices)},
                         {"variables", grp.variables},
                         {"colors_for_assignment", grp.colors_for_assignment}};
        out << rec.dump() << '\n';
    }
    if (!meta.palette.empty()) {
        ordered_json rec{{"type", "palette"}, {"vertices", to_one_indexed(meta.palette)}};
        out << rec.dump() << '\n';
    }
    for (std::size_t i = 0; i < meta.paths.size(); ++i) {
        ordered_json rec{{"type", "path"},
                         {"vertices", to_one_indexed(meta.paths[i])},
                         {"distinguished", to_one_indexed(meta.distinguished[i])}};
        out << rec.dump() << '\n';
    }
}

ReductionMeta read_meta(std::istream &in) {
    ReductionMeta meta;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        ordered_json rec;
        try {
            rec = ordered_json::parse(line);
        } catch (const std::exception &e) {
            throw invalid_input("meta line " + std::to_string(lineno) + ": " + e.what());
        }
        std::string type = rec.at("type");
        if (type == "role") {
            int v = rec.at("vertex");
            if (v < 1)
                throw invalid_input("meta line " + std::to_string(lineno) + ": bad vertex id");
            if (static_cast<int>(meta.roles.size()) < v)
                meta.roles.resize(v);
            meta.roles[v - 1] = rec.at("role");
        } else if (type == "group") {
            ReductionOutput::GroupEncoding grp;
            grp.vertices = from_one_indexed(rec.at("vertices").get<std::vector<int>>());
            grp.variables = rec.at("variables").get<std::vector<int>>();
            grp.colors_for_assignment =
                rec.at("colors_for_assignment").get<std::vector<std::vector<int>>>();
            meta.groups.push_back(std::move(grp));
        } else if (type == "palette") {
            meta.palette = from_one_indexed(rec.at("vertices").get<std::vector<int>>());
        } else if (type == "path") {
            meta.paths.push_back(from_one_indexed(rec.at("vertices").get<std::vector<int>>()));
            meta.distinguished.push_back(
                from_one_indexed(rec.at("distinguished").get<std::vector<int>>()));
        } else {
            throw invalid_input("meta line " + std::to_string(lineno) + ": unknown record type '" +
                                type + "'");
        }
    }
    return meta;
}

} // namespace modcolor::io
