#include "detsum/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace detsum {

namespace {

// Splits a line into integer fields; nullopt when a field is not an integer.
std::optional<std::vector<long long>> integer_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long value;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != token.size()) return std::nullopt;
    out.push_back(value);
  }
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing header line 'n m'");
  const auto header = integer_fields(line);
  if (!header || header->size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const long long n = (*header)[0];
  const long long m = (*header)[1];
  if (n < 0 || n > Graph::kMaxVertices)
    throw ParseError(line_no, "vertex count must be in 0.." + std::to_string(Graph::kMaxVertices));
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(line_no, "edge count out of range");

  ParsedGraph out{WeightedGraph(static_cast<int>(n)), false};
  int fields_seen = 0;
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    const auto fields = integer_fields(line);
    if (!fields || (fields->size() != 2 && fields->size() != 3))
      throw ParseError(line_no, "malformed edge line '" + line + "'");
    if (fields_seen != 0 && static_cast<int>(fields->size()) != fields_seen)
      throw ParseError(line_no, "mixed weighted and unweighted edge lines");
    fields_seen = static_cast<int>(fields->size());
    const long long u = (*fields)[0];
    const long long v = (*fields)[1];
    const long long w = fields->size() == 3 ? (*fields)[2] : 1;
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (out.graph.graph().has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (w < 1) throw ParseError(line_no, "weights must be positive integers");
    out.graph.add_edge(static_cast<int>(u), static_cast<int>(v), w);
  }
  out.weighted = fields_seen == 3;
  if (next_line()) throw ParseError(line_no, "more edge lines than the header announces");
  return out;
}

ParsedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const WeightedGraph& wg) {
  const Graph& g = wg.graph();
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << ' ' << wg.weight(u, v) << '\n';
}

}  // namespace detsum
