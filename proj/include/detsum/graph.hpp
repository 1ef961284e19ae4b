#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detsum/errors.hpp"

namespace detsum {

// Simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Throws InvalidInput on self-loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_connected() const;
  bool is_independent_set(const std::vector<int>& vertices) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Graph with positive integer edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : graph_(n), weight_(static_cast<std::size_t>(n) * n, 0) {}

  void add_edge(int u, int v, std::int64_t weight);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  // Zero for non-edges.
  std::int64_t weight(int u, int v) const {
    return weight_[static_cast<std::size_t>(u) * graph_.vertex_count() + v];
  }
  // Sum of all edge weights.
  std::int64_t total_weight() const { return total_; }

  // Every edge of g with weight 1.
  static WeightedGraph unit(const Graph& g);

 private:
  Graph graph_;
  std::vector<std::int64_t> weight_;
  std::int64_t total_ = 0;
};

}  // namespace detsum
