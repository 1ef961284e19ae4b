#pragma once

#include <iosfwd>
#include <string>

#include "detsum/graph.hpp"

namespace detsum {

// Edge lists: a header line `n m`, then m lines `u v` or `u v weight`,
// 0-indexed. Blank lines are skipped. Unweighted edges get weight 1.
struct ParsedGraph {
  WeightedGraph graph;
  bool weighted = false;
};

// Throws ParseError (with the 1-based line) on malformed lines, vertices out
// of range, self-loops, duplicate edges, bad weights or a wrong edge count.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
ParsedGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const WeightedGraph& wg);

}  // namespace detsum
