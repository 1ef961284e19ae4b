#include "detsum/tsp.hpp"

#include <algorithm>
#include <string>

#include "detsum/parallel.hpp"
#include "detsum/polyspace.hpp"

namespace detsum {

LccInstance build_fy_lcc(const WeightedGraph& wg, const Partition& part, int m, FieldElement y,
                         const VariableAssignment& point) {
  const EdgeValues values = EdgeValues(wg.graph(), point).weighted(wg, y);
  const PathPolyTable table(wg.graph(), part, values);
  return build_general_lcc(wg.graph(), part, m, values, table);
}

std::vector<FieldElement> inverse_transform(const std::vector<FieldElement>& values, const FieldContext& ctx) {
  const std::uint64_t order = ctx.group_order();
  if (values.size() != order)
    throw InvalidInput("inverse transform needs " + std::to_string(order) + " values, got " +
                       std::to_string(values.size()));
  std::vector<FieldElement> t(values.size());
  const FieldElement g_inv = ctx.inv(ctx.generator());
  FieldElement h = FieldElement::one();  // g^(-j)
  for (std::size_t j = 0; j < t.size(); ++j) {
    t[j] = eval_poly(ctx, values, h);
    h = ctx.mul(h, g_inv);
  }
  return t;
}

unsigned resolve_tsp_field_bits(const DetectionConfig& cfg, std::int64_t total_weight, int labels, int base) {
  // A graph that is a single cycle has a tour of weight exactly w.
  const auto weight_bound = static_cast<std::uint64_t>(total_weight) + 1;
  const auto interpolation = static_cast<std::uint64_t>(labels) * static_cast<std::uint64_t>(base);
  if (cfg.k != 0) {
    if (cfg.k > FieldContext::kMaxBits) throw InvalidInput("k must be at most 32");
    if ((std::uint64_t{1} << cfg.k) <= std::max(weight_bound, interpolation))
      throw FieldTooSmall("k = " + std::to_string(cfg.k) + " violates 2^k > max(w + 1, |L| n) = " +
                          std::to_string(std::max(weight_bound, interpolation)));
    return cfg.k;
  }
  const unsigned k = bits_exceeding(std::max(weight_bound, interpolation));
  // The transform touches 2^k - 1 points per run; refuse hopeless sizes.
  if (k > 20) throw InstanceTooLarge("total weight too large for the quadratic transform");
  return k;
}

TspResult solve_tsp(const WeightedGraph& wg, const DetectionConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = wg.graph();
  const int n = g.vertex_count();
  TspResult result;
  result.seed = cfg.seed;
  result.engine = cfg.engine;
  result.total_weight = wg.total_weight();
  if (n < 3) {
    result.elapsed_ms = ms_since(start);
    return result;
  }

  // Runs and m_max follow the detection presets; the field is sized here.
  DetectionConfig auto_k = cfg;
  auto_k.k = 0;
  GeneralRunParams params = resolve_general_params(n, auto_k);
  const int n1 = (n + 1) / 2;
  params.k = resolve_tsp_field_bits(cfg, wg.total_weight(), n - n1 + params.m_max, n1);
  result.k = params.k;
  result.m_max = params.m_max;
  result.runs_planned = params.runs;
  const FieldContext ctx(params.k);
  const std::size_t order = ctx.group_order();

  for (int i = 0; i < params.runs; ++i) {
    const auto run_start = std::chrono::steady_clock::now();
    const std::uint64_t seed = run_seed(cfg.seed, i);
    std::mt19937_64 rng(derive_seed(seed, kPartitionStream));
    const Partition part = random_balanced_partition(n, rng);
    const VariableAssignment point(ctx, derive_seed(seed, kAssignmentStream), part.special());
    const EdgeValues base(g, point);

    std::vector<FieldElement> sums(order);
    std::vector<FieldElement> ys(order);
    FieldElement y = FieldElement::one();
    for (std::size_t l = 0; l < order; ++l) {
      ys[l] = y;
      y = ctx.mul(y, ctx.generator());
    }
    parallel_for(order, cfg.threads, [&](std::size_t l) {
      const EdgeValues values = base.weighted(wg, ys[l]);
      std::optional<PathPolyTable> table;
      if (cfg.engine == Engine::Table) table.emplace(g, part, values);
      FieldElement acc;
      for (int m = 0; m <= params.m_max; ++m)
        acc += general_fingerprint(ctx, g, part, m, values, table ? &*table : nullptr, cfg.engine, 1);
      sums[l] = acc;
    });
    const std::vector<FieldElement> t = inverse_transform(sums, ctx);

    TspRun run;
    run.index = i;
    run.part1 = part.part1;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!t[j].is_zero()) {
        run.weight = static_cast<std::int64_t>(j);
        break;
      }
    }
    if (run.weight && (!result.weight || *run.weight < *result.weight)) result.weight = run.weight;
    run.elapsed_ms = ms_since(run_start);
    result.runs.push_back(std::move(run));
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace detsum
