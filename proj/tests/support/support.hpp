#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include "modcolor/graph.hpp"
#include "modcolor/lists.hpp"
#include "modcolor/reductions.hpp"

#include <random>
#include <utility>
#include <vector>

namespace support {

using namespace modcolor;

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// center is vertex 0
Graph star_graph(int leaves);
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>> &edges);

// every isomorphism class on exactly n vertices (no class restriction)
std::vector<Graph> all_graphs(int n);

// smallest k such that the graph is k-colorable, by the backtracking oracle
int brute_chromatic(const Graph &g);

// 2^n assignment enumeration
bool sat_brute(const CnfFormula &phi);

// clauses over `width` distinct variables with random signs
CnfFormula random_cnf(int num_vars, int num_clauses, int width, std::mt19937 &rng);

// random graph, each edge independently with probability num/den
Graph random_graph(int n, int num, int den, std::mt19937 &rng);

// thin a full list assignment, keeping each color with probability num/den
ListAssignment random_lists(int n, int q, int num, int den, std::mt19937 &rng);

} // namespace support

#endif
