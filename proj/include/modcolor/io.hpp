#ifndef MODCOLOR_IO_HPP
#define MODCOLOR_IO_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"
#include "modcolor/nocert.hpp"
#include "modcolor/reductions.hpp"
#include "modcolor/treedepth.hpp"

#include <iosfwd>
#include <string>

namespace modcolor::io {

// All text formats are 1-indexed and allow `c` comment lines. Parse errors
// throw invalid_input naming the offending line.

// `p edge <n> <m>` header, `e <u> <v>` lines
Graph read_graph(std::istream &in);
void write_graph(std::ostream &out, const Graph &g);

// `p lists <n> <q>` header, `l <v> <c1> <c2> ...` lines; vertices without a
// line get the full palette
ListAssignment read_lists(std::istream &in);
void write_lists(std::ostream &out, const ListAssignment &l);

// whitespace-separated vertex ids
VertexSet read_vertex_set(std::istream &in, int n);
void write_vertex_set(std::ostream &out, const VertexSet &s);

// `p coloring <n> <q>` header, `v <vertex> <color>` lines; color 0 = unset
Coloring read_coloring(std::istream &in);
void write_coloring(std::ostream &out, const Coloring &c, int q);

// `t <v> <parent>` lines, parent 0 = root
TreedepthDecomposition read_decomposition(std::istream &in);
void write_decomposition(std::ostream &out, const TreedepthDecomposition &t);

// DIMACS CNF: `p cnf <n> <m>`, zero-terminated clauses (may span lines)
CnfFormula read_cnf(std::istream &in);
void write_cnf(std::ostream &out, const CnfFormula &phi);

// certificate-set cache: header `p zeta <class> <q> <g> <minimal> <count>`,
// then each member as a graph block followed by a list block
NoCertificateSet read_certificate_set(std::istream &in);
void write_certificate_set(std::ostream &out, const NoCertificateSet &zeta);

// reduction metadata as JSON lines: one `role` record per vertex, then
// `group`, `palette`, `path` records; graph and lists live in their own files
struct ReductionMeta {
    std::vector<std::string> roles;
    std::vector<ReductionOutput::GroupEncoding> groups;
    std::vector<int> palette;
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> distinguished;

    bool operator==(const ReductionMeta &other) const = default;
};

ReductionMeta meta_of(const ReductionOutput &out);
ReductionMeta read_meta(std::istream &in);
void write_meta(std::ostream &out, const ReductionMeta &meta);

} // namespace modcolor::io

#endif
