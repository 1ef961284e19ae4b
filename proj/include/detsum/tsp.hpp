#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detsum/assignment.hpp"
#include "detsum/detection.hpp"
#include "detsum/general.hpp"
#include "detsum/graph.hpp"
#include "detsum/lcc.hpp"

namespace detsum {

// The general instance with every edge variable scaled by y^weight.
LccInstance build_fy_lcc(const WeightedGraph& wg, const Partition& part, int m, FieldElement y,
                         const VariableAssignment& point);

// t(j) = Σ_l g^(-jl) T(l) for j = 0..2^k-2: coefficients of the polynomial in
// y whose values at y = g^l are T(l). T must have 2^k - 1 entries.
std::vector<FieldElement> inverse_transform(const std::vector<FieldElement>& values, const FieldContext& ctx);

struct TspRun {
  int index = 0;
  std::vector<int> part1;
  // Smallest j with t(j) != 0 in this run.
  std::optional<std::int64_t> weight;
  double elapsed_ms = 0;
};

struct TspResult {
  std::optional<std::int64_t> weight;
  unsigned k = 0;
  int m_max = 0;
  int runs_planned = 0;
  std::uint64_t seed = 0;
  Engine engine = Engine::Table;
  std::int64_t total_weight = 0;
  std::vector<TspRun> runs;
  double elapsed_ms = 0;
};

// Smallest k with 2^k > w + 1 and 2^k > |L| |part1|; cfg.k is validated
// against both instead.
unsigned resolve_tsp_field_bits(const DetectionConfig& cfg, std::int64_t total_weight, int labels, int base);

// Minimum Hamiltonian cycle weight, or nothing when no run saw a tour. Every
// run evaluates T(l) = Σ_m Λ at y = g^l for all l and inverts; the answer is
// the minimum over runs.
TspResult solve_tsp(const WeightedGraph& wg, const DetectionConfig& cfg);

}  // namespace detsum
