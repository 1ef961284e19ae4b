#include "detsum/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <queue>
#include <string>

namespace detsum {

BipartiteInstance make_bipartite_instance(const Graph& g, std::vector<int> part1, std::vector<int> part2) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw InvalidInput("bipartite detection needs an even vertex count");
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int v : part1) {
    if (v < 0 || v >= n || side[v] != -1) throw InvalidInput("part1 is not a set of distinct vertices");
    side[v] = 0;
  }
  for (int v : part2) {
    if (v < 0 || v >= n || side[v] != -1) throw InvalidInput("parts overlap or contain invalid vertices");
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) throw InvalidInput("parts do not cover every vertex");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) throw InvalidInput("edge " + std::to_string(u) + " " + std::to_string(v) + " does not cross the bipartition");
  if (part1.size() != part2.size()) throw InvalidInput("unbalanced bipartition");
  std::sort(part1.begin(), part1.end());
  std::sort(part2.begin(), part2.end());
  BipartiteInstance inst{g, std::move(part1), std::move(part2), -1};
  if (!inst.part1.empty()) inst.special = inst.part1.front();
  return inst;
}

BipartiteInstance make_bipartite_instance(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw InvalidInput("bipartite detection needs an even vertex count");

  // Color each component, remembering its two sides.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comp_side0, comp_side1;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    std::vector<int> a, b;
    std::queue<int> q;
    q.push(root);
    color[root] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      (color[u] == 0 ? a : b).push_back(u);
      for (int v = 0; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          throw InvalidInput("graph is not bipartite");
        }
      }
    }
    comp_side0.push_back(std::move(a));
    comp_side1.push_back(std::move(b));
  }

  // Subset-sum over component orientations to reach |part1| = n/2.
  const std::size_t comps = comp_side0.size();
  const int half = n / 2;
  std::vector<std::vector<char>> reach(comps + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  reach[0][0] = 1;
  for (std::size_t c = 0; c < comps; ++c) {
    for (int s = 0; s <= n; ++s) {
      if (!reach[c][s]) continue;
      reach[c + 1][s + static_cast<int>(comp_side0[c].size())] = 1;
      reach[c + 1][s + static_cast<int>(comp_side1[c].size())] = 1;
    }
  }
  if (!reach[comps][half]) throw InvalidInput("unbalanced bipartition");

  std::vector<int> part1, part2;
  int target = half;
  for (std::size_t c = comps; c-- > 0;) {
    const int a = static_cast<int>(comp_side0[c].size());
    const bool keep = target - a >= 0 && reach[c][target - a];
    const auto& first = keep ? comp_side0[c] : comp_side1[c];
    const auto& second = keep ? comp_side1[c] : comp_side0[c];
    part1.insert(part1.end(), first.begin(), first.end());
    part2.insert(part2.end(), second.begin(), second.end());
    target -= static_cast<int>(first.size());
  }
  return make_bipartite_instance(g, std::move(part1), std::move(part2));
}

LccInstance build_bipartite_lcc(const BipartiteInstance& inst, const VariableAssignment& point) {
  const FieldContext& ctx = point.field();
  const Graph& g = inst.graph;
  const int n1 = static_cast<int>(inst.part1.size());
  if (inst.part1.size() != inst.part2.size()) throw InvalidInput("unbalanced bipartition");

  ArcSet base(n1);
  std::vector<std::pair<int, LabelSet>> entries;  // (arc, shared part2 neighbours)
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      if (i == j) continue;
      LabelSet common = 0;
      for (std::size_t w = 0; w < inst.part2.size(); ++w) {
        if (g.has_edge(inst.part1[i], inst.part2[w]) && g.has_edge(inst.part2[w], inst.part1[j]))
          common |= LabelSet{1} << w;
      }
      if (common != 0) entries.emplace_back(base.add_arc(i, j), common);
    }
  }

  LccInstance lcc(std::move(base), static_cast<int>(inst.part2.size()));
  for (auto [arc, common] : entries) {
    const int u = inst.part1[lcc.base().arc(arc).from];
    const int v = inst.part1[lcc.base().arc(arc).to];
    for (LabelSet rest = common; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      const int w = inst.part2[bit];
      lcc.set(arc, LabelSet{1} << bit, ctx.mul(point.edge(u, w), point.edge(w, v)));
    }
  }
  return lcc;
}

DetectionResult detect_bipartite(const BipartiteInstance& inst, const DetectionConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const int n = inst.graph.vertex_count();
  const int labels = static_cast<int>(inst.part2.size());
  const int base = static_cast<int>(inst.part1.size());

  DetectionResult result;
  result.seed = cfg.seed;
  result.engine = Engine::Table;
  result.m_max = 0;
  result.k = resolve_field_bits(cfg, n, labels, base);
  result.runs_planned = cfg.runs > 0 ? cfg.runs : std::min(std::max(1, n), cfg.max_runs);
  const FieldContext ctx(result.k);

  for (int i = 0; i < result.runs_planned && !result.hamiltonian; ++i) {
    const auto run_start = std::chrono::steady_clock::now();
    const VariableAssignment point(ctx, derive_seed(run_seed(cfg.seed, i), kAssignmentStream), inst.special);
    RunRecord rec;
    rec.index = i;
    rec.part1 = inst.part1;
    rec.part2 = inst.part2;
    rec.special = inst.special;
    const FieldElement value = base == 0 ? FieldElement::zero()
                                         : lambda(ctx, build_bipartite_lcc(inst, point), cfg.threads);
    rec.fingerprints.push_back({0, value});
    rec.elapsed_ms = ms_since(run_start);
    result.hamiltonian = rec.nonzero();
    result.runs.push_back(std::move(rec));
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace detsum
