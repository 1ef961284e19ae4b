#include "detsum/graph.hpp"

#include <bit>
#include <string>

namespace detsum {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("vertex count must be in [0, 64], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  edges_.emplace_back(u, v);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

bool Graph::is_independent_set(const std::vector<int>& vertices) const {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    check_vertex(v);
    if ((mask >> v) & 1) return false;
    mask |= std::uint64_t{1} << v;
  }
  for (int v : vertices)
    if (adj_[v] & mask) return false;
  return true;
}

void WeightedGraph::add_edge(int u, int v, std::int64_t weight) {
  if (weight < 1) throw InvalidInput("edge weights must be positive integers");
  graph_.add_edge(u, v);
  const auto n = static_cast<std::size_t>(graph_.vertex_count());
  weight_[u * n + v] = weight;
  weight_[v * n + u] = weight;
  total_ += weight;
}

WeightedGraph WeightedGraph::unit(const Graph& g) {
  WeightedGraph wg(g.vertex_count());
  for (auto [u, v] : g.edges()) wg.add_edge(u, v, 1);
  return wg;
}

}  // namespace detsum
