#include "detsum/general.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "detsum/polyspace.hpp"

namespace detsum {

Partition make_partition(int n, std::vector<int> part1) {
  std::vector<char> in1(static_cast<std::size_t>(n), 0);
  for (int v : part1) {
    if (v < 0 || v >= n || in1[v]) throw InvalidInput("part1 is not a set of distinct vertices");
    in1[v] = 1;
  }
  Partition p;
  p.part1 = std::move(part1);
  std::sort(p.part1.begin(), p.part1.end());
  for (int v = 0; v < n; ++v)
    if (!in1[v]) p.part2.push_back(v);
  return p;
}

Partition random_balanced_partition(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  order.resize(static_cast<std::size_t>((n + 1) / 2));
  return make_partition(n, std::move(order));
}

PathPolyTable::PathPolyTable(const Graph& g, const Partition& part, const EdgeValues& values)
    : part1_size_(part.part1.size()) {
  const int n = g.vertex_count();
  const int n2 = static_cast<int>(part.part2.size());
  if (n2 > kMaxPart2)
    throw InstanceTooLarge("path tabulation supports at most " + std::to_string(kMaxPart2) + " label vertices");
  subsets_ = std::size_t{1} << n2;
  pos1_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < part.part1.size(); ++i) pos1_[part.part1[i]] = static_cast<int>(i);
  std::vector<int> pos2(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n2; ++i) pos2[part.part2[i]] = i;

  const FieldContext& ctx = values.field();
  data_.assign(static_cast<std::size_t>(n) * part1_size_ * subsets_, FieldElement::zero());
  auto at = [&](int u, std::size_t vi, LabelSet x) -> FieldElement& {
    return data_[(static_cast<std::size_t>(u) * part1_size_ + vi) * subsets_ + x];
  };

  // Slot X = ∅ holds the direct edge u -> v; it seeds the recursion
  // f̂(uv, X) = Σ_{w ∈ X} x_uw f̂(wv, X \ {w}) and never reaches an instance.
  for (std::size_t vi = 0; vi < part1_size_; ++vi) {
    const int v = part.part1[vi];
    for (int u = 0; u < n; ++u)
      if (u != v) at(u, vi, 0) = values.edge(u, v);
  }
  // X \ {w} < X numerically, so increasing order is bottom-up.
  for (LabelSet x = 1; x < subsets_; ++x) {
    for (std::size_t vi = 0; vi < part1_size_; ++vi) {
      const int v = part.part1[vi];
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (pos2[u] >= 0 && ((x >> pos2[u]) & 1)) continue;
        FieldElement acc;
        for (LabelSet rest = x; rest != 0; rest &= rest - 1) {
          const int bit = std::countr_zero(rest);
          const FieldElement e = values.edge(u, part.part2[bit]);
          if (e.is_zero()) continue;
          acc += ctx.mul(e, at(part.part2[bit], vi, x & ~(LabelSet{1} << bit)));
        }
        at(u, vi, x) = acc;
      }
    }
  }
}

PathPolyTable tabulate_pathpoly(const Graph& g, const Partition& part, const EdgeValues& values) {
  return PathPolyTable(g, part, values);
}

LccInstance build_general_lcc(const Graph& g, const Partition& part, int m, const EdgeValues& values,
                              const PathPolyTable& table) {
  if (m < 0) throw InvalidInput("m must be nonnegative");
  const int n1 = static_cast<int>(part.part1.size());
  const int n2 = static_cast<int>(part.part2.size());
  LccInstance lcc(ArcSet::complete_bidirected(n1), n2 + m);
  const LabelSet part2_subsets = LabelSet{1} << n2;
  for (std::size_t a = 0; a < lcc.base().arc_count(); ++a) {
    const Arc arc = lcc.base().arc(static_cast<int>(a));
    const int u = part.part1[arc.from];
    const int v = part.part1[arc.to];
    for (LabelSet x = 1; x < part2_subsets; ++x) {
      const FieldElement value = table.value(u, v, x);
      if (!value.is_zero()) lcc.set(static_cast<int>(a), x, value);
    }
    if (!g.has_edge(u, v)) continue;
    for (int d = 0; d < m; ++d) lcc.set(static_cast<int>(a), LabelSet{1} << (n2 + d), values.extra(u, v, d));
  }
  return lcc;
}

GeneralRunParams resolve_general_params(int n, const DetectionConfig& cfg) {
  GeneralRunParams p;
  const int half_up = (n + 1) / 2;
  int auto_runs;
  if (cfg.preset == Preset::Fast) {
    p.m_max = std::min(std::max(1, static_cast<int>(std::floor(0.205 * n))), half_up);
    auto_runs = static_cast<int>(std::ceil(static_cast<double>(n) * n * std::exp2(0.024 * n)));
  } else {
    p.m_max = std::min((n + 3) / 4, half_up);
    auto_runs = n * n;
  }
  if (cfg.m_max >= 0) {
    if (cfg.m_max > half_up) throw InvalidInput("m_max may not exceed ceil(n/2)");
    p.m_max = cfg.m_max;
  }
  p.runs = cfg.runs > 0 ? cfg.runs : std::clamp(auto_runs, 1, std::max(1, cfg.max_runs));
  const int n1 = half_up;
  const int n2 = n - n1;
  p.k = resolve_field_bits(cfg, n, n2 + p.m_max, n1);
  return p;
}

FieldElement general_fingerprint(const FieldContext& ctx, const Graph& g, const Partition& part, int m,
                                 const EdgeValues& values, const PathPolyTable* table, Engine engine,
                                 unsigned threads) {
  if (engine == Engine::Streaming) return lambda_polyspace(g, part, m, values, threads);
  return lambda(ctx, build_general_lcc(g, part, m, values, *table), threads);
}

namespace {

// One run on a fixed partition: m = 0..m_max until a nonzero fingerprint.
RunRecord general_run(const FieldContext& ctx, const Graph& g, const Partition& part, int m_max,
                      std::uint64_t seed, int index, const DetectionConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.index = index;
  rec.part1 = part.part1;
  rec.part2 = part.part2;
  rec.special = part.special();
  const VariableAssignment point(ctx, derive_seed(seed, kAssignmentStream), rec.special);
  const EdgeValues values(g, point);
  std::optional<PathPolyTable> table;
  if (cfg.engine == Engine::Table) table.emplace(g, part, values);
  for (int m = 0; m <= m_max; ++m) {
    const FieldElement value =
        general_fingerprint(ctx, g, part, m, values, table ? &*table : nullptr, cfg.engine, cfg.threads);
    rec.fingerprints.push_back({m, value});
    if (!value.is_zero()) break;
  }
  rec.elapsed_ms = ms_since(start);
  return rec;
}

}  // namespace

DetectionResult detect_general(const Graph& g, const DetectionConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.vertex_count();
  DetectionResult result;
  result.seed = cfg.seed;
  result.engine = cfg.engine;
  if (n < 3) {
    result.shortcut = "fewer than three vertices";
    result.elapsed_ms = ms_since(start);
    return result;
  }
  const GeneralRunParams params = resolve_general_params(n, cfg);
  result.k = params.k;
  result.m_max = params.m_max;
  result.runs_planned = params.runs;
  const FieldContext ctx(params.k);

  for (int i = 0; i < params.runs && !result.hamiltonian; ++i) {
    const std::uint64_t seed = run_seed(cfg.seed, i);
    std::mt19937_64 rng(derive_seed(seed, kPartitionStream));
    const Partition part = random_balanced_partition(n, rng);
    result.runs.push_back(general_run(ctx, g, part, params.m_max, seed, i, cfg));
    result.hamiltonian = result.runs.back().nonzero();
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

DetectionResult detect_with_independent_set(const Graph& g, const std::vector<int>& indep,
                                            const DetectionConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (!g.is_independent_set(indep)) throw InvalidInput("the given vertex set is not independent");
  const int n = g.vertex_count();
  const int i = static_cast<int>(indep.size());
  DetectionResult result;
  result.seed = cfg.seed;
  result.engine = cfg.engine;
  if (n < 3) {
    result.shortcut = "fewer than three vertices";
    result.elapsed_ms = ms_since(start);
    return result;
  }
  // Each independent vertex needs two cycle arcs of its own.
  if (2 * i > n) {
    result.shortcut = "independent set larger than n/2";
    result.elapsed_ms = ms_since(start);
    return result;
  }

  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (int v : indep) in_set[v] = 1;
  std::vector<int> part1;
  for (int v = 0; v < n; ++v)
    if (!in_set[v]) part1.push_back(v);
  const Partition part = make_partition(n, std::move(part1));

  result.m_max = cfg.m_max >= 0 ? cfg.m_max : n - 2 * i;
  result.runs_planned = cfg.runs > 0 ? cfg.runs : std::min(n, std::max(1, cfg.max_runs));
  result.k = resolve_field_bits(cfg, n, i + result.m_max, n - i);
  const FieldContext ctx(result.k);

  for (int r = 0; r < result.runs_planned && !result.hamiltonian; ++r) {
    result.runs.push_back(general_run(ctx, g, part, result.m_max, run_seed(cfg.seed, r), r, cfg));
    result.hamiltonian = result.runs.back().nonzero();
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

Rational success_probability_lower_bound(int n, int m) {
  if (n < 2 || n % 2 != 0 || n > 60) throw InvalidInput("n must be even and in [2, 60]");
  if (m < 0 || m > n / 2) throw InvalidInput("m must be in [0, n/2]");
  // A cycle leaves at most n/2 - 1 arcs inside a half that misses a vertex.
  if (m == n / 2) return {0, 1};
  // Compositions of n/2 into n/2 - m positive parts, once for each side.
  const std::uint64_t ways = binomial(n / 2 - 1, m);
  Rational r{ways * ways, binomial(n, n / 2)};
  const std::uint64_t d = std::gcd(r.num, r.den);
  r.num /= d;
  r.den /= d;
  return r;
}

}  // namespace detsum
