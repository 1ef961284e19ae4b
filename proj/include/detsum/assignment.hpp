#pragma once

#include <compare>
#include <cstdint>

#include "detsum/gf2k.hpp"
#include "detsum/graph.hpp"
#include "detsum/matrix.hpp"

namespace detsum {

// splitmix64 finalizer; the basis of every seed derivation in the library.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the seed of stream `index` under `root`.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(mix64(root) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

// Identity of a formal variable. Plain edge variables x_uv have extra = -1;
// x_{uv,d} carries the extra label d. Mirror variables share one identity
// unless the edge touches the special vertex.
struct VariableId {
  int from;
  int to;
  int extra = -1;

  friend bool operator==(const VariableId&, const VariableId&) = default;
  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

VariableId edge_variable(int u, int v, int special);
VariableId extra_variable(int u, int v, int d, int special);

// A uniformly random point: every variable identity hashes to an element
// of GF(2^k) under the seed, so values are drawn lazily and reproducibly.
class VariableAssignment {
 public:
  VariableAssignment(FieldContext field, std::uint64_t seed, int special)
      : field_(std::move(field)), seed_(seed), special_(special) {}

  const FieldContext& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  int special() const { return special_; }

  FieldElement value(const VariableId& id) const;
  FieldElement edge(int u, int v) const { return value(edge_variable(u, v, special_)); }
  FieldElement extra(int u, int v, int d) const { return value(extra_variable(u, v, d, special_)); }

 private:
  FieldContext field_;
  std::uint64_t seed_;
  int special_;
};

// Values of the edge variables of one run on a fixed graph: x_uv on edges
// and zero elsewhere, optionally scaled by y^weight(uv) for the TSP embedding.
class EdgeValues {
 public:
  EdgeValues(const Graph& g, const VariableAssignment& point);

  // Each x_uv and x_{uv,d} multiplied by y^weight(uv).
  EdgeValues weighted(const WeightedGraph& wg, FieldElement y) const;

  const FieldContext& field() const { return point_.field(); }
  int special() const { return point_.special(); }
  int vertex_count() const { return static_cast<int>(edge_.rows()); }

  FieldElement edge(int u, int v) const { return edge_(u, v); }
  // Zero unless uv is an edge.
  FieldElement extra(int u, int v, int d) const;
  const Matrix& edge_matrix() const { return edge_; }

 private:
  VariableAssignment point_;
  Matrix edge_;
  Matrix extra_scale_;
};

}  // namespace detsum
