#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "detsum/assignment.hpp"
#include "detsum/detection.hpp"
#include "detsum/graph.hpp"
#include "detsum/lcc.hpp"

namespace detsum {

// V = part1 ∪ part2, both sorted. part1 hosts the base graph, part2 the labels.
struct Partition {
  std::vector<int> part1;
  std::vector<int> part2;

  int special() const { return part1.empty() ? -1 : part1.front(); }
};

// part2 is the complement of part1 in 0..n-1.
Partition make_partition(int n, std::vector<int> part1);

// Uniform partition with |part1| = ceil(n/2).
Partition random_balanced_partition(int n, std::mt19937_64& rng);

// f̂(uv, X): sum over simple u -> v paths whose interior is exactly X ⊆ part2
// of the product of the edge values along the path. Defined for any start u
// outside X and any end v in part1. X is a bitmask over part2 positions.
class PathPolyTable {
 public:
  static constexpr int kMaxPart2 = 24;

  PathPolyTable(const Graph& g, const Partition& part, const EdgeValues& values);

  FieldElement value(int u, int v, LabelSet interior) const {
    return data_[(static_cast<std::size_t>(u) * part1_size_ + static_cast<std::size_t>(pos1_[v])) * subsets_ +
                 interior];
  }

 private:
  std::size_t part1_size_;
  std::size_t subsets_;
  std::vector<int> pos1_;
  std::vector<FieldElement> data_;
};

PathPolyTable tabulate_pathpoly(const Graph& g, const Partition& part, const EdgeValues& values);

// Complete bidirected D on part1; labels are part2 (bits 0..|part2|-1) then
// m extra labels. f(uv, X) = f̂(uv, X) for X ⊆ part2, f(uv, {d}) = x_{uv,d} for
// edges uv of G[part1], zero elsewhere.
LccInstance build_general_lcc(const Graph& g, const Partition& part, int m, const EdgeValues& values,
                              const PathPolyTable& table);

struct GeneralRunParams {
  int m_max = 0;
  int runs = 0;
  unsigned k = 0;
};

// Applies presets and overrides. fast: m_max = max(1, floor(0.205 n)) and
// runs = ceil(n^2 2^(0.024 n)); safe: m_max = ceil(n/4), runs = n^2.
GeneralRunParams resolve_general_params(int n, const DetectionConfig& cfg);

// Random balanced partitions; per run, m = 0..m_max, stopping at the first
// nonzero fingerprint. Uses the zeta-table or the streaming engine.
DetectionResult detect_general(const Graph& g, const DetectionConfig& cfg);

// Fixed part2 = indep; m_max = n - 2|indep| and runs linear in n.
DetectionResult detect_with_independent_set(const Graph& g, const std::vector<int>& indep,
                                            const DetectionConfig& cfg);

// Lambda of the (part, m) instance under the selected engine.
FieldElement general_fingerprint(const FieldContext& ctx, const Graph& g, const Partition& part, int m,
                                 const EdgeValues& values, const PathPolyTable* table, Engine engine,
                                 unsigned threads);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::uint64_t binomial(int n, int k);

// Lower bound on the probability that a balanced random partition leaves a
// fixed Hamiltonian cycle with exactly m arcs inside part1:
// C(n/2 - 1, m)^2 / C(n, n/2), for even n and 0 <= m < n/2; zero at m = n/2.
Rational success_probability_lower_bound(int n, int m);

}  // namespace detsum
