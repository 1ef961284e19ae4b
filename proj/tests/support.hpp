#pragma once

#include <random>
#include <vector>

#include "detsum/gf2k.hpp"
#include "detsum/graph.hpp"
#include "detsum/lcc.hpp"
#include "detsum/matrix.hpp"

namespace detsum::testing {

inline FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  return ctx.from_random_bits(rng());
}

inline FieldElement random_nonzero(const FieldContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    const FieldElement x = random_element(ctx, rng);
    if (!x.is_zero()) return x;
  }
}

inline Matrix random_matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(ctx, rng);
  return m;
}

// Random arcs (each present with probability 1/2) and random f on every
// nonempty label subset.
inline LccInstance random_instance(const FieldContext& ctx, int n, int labels, std::mt19937_64& rng,
                                   bool singletons_only = false) {
  ArcSet base(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (rng() & 1)) base.add_arc(u, v);
  LccInstance inst(std::move(base), labels);
  for (int a = 0; a < static_cast<int>(inst.base().arc_count()); ++a)
    for (LabelSet z = 1; z < (LabelSet{1} << labels); ++z)
      if (!singletons_only || (z & (z - 1)) == 0) inst.set(a, z, random_element(ctx, rng));
  return inst;
}

// All graphs on n vertices, by edge mask over the pairs u < v.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detsum::testing
