#include "detsum/polyspace.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "detsum/parallel.hpp"

namespace detsum {

namespace {

// Scratch space reused across all Y of one evaluation; O(n^2) elements.
struct Workspace {
  std::vector<int> x1;
  std::vector<FieldElement> a;
  std::vector<FieldElement> walk;
  std::vector<FieldElement> next;
  std::vector<FieldElement> sum;
  std::vector<FieldElement> out;
  // r x_{uv,d} on edges of G[part1], one n1 x n1 block per extra label d.
  std::vector<FieldElement> extras;
};

void prepare_extras(const Graph& g, const Partition& part, int m, FieldElement r, const EdgeValues& values,
                    Workspace& ws) {
  const std::size_t n1 = part.part1.size();
  ws.extras.assign(static_cast<std::size_t>(m) * n1 * n1, FieldElement::zero());
  for (int d = 0; d < m; ++d)
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j)
        if (i != j && g.has_edge(part.part1[i], part.part1[j]))
          ws.extras[(static_cast<std::size_t>(d) * n1 + i) * n1 + j] =
              values.field().mul(r, values.extra(part.part1[i], part.part1[j], d));
}

int resolve_walk_limit(const Graph& g, int walk_limit) { return walk_limit > 0 ? walk_limit : g.vertex_count(); }

void fill_inner(const Partition& part, int m, LabelSet y, FieldElement r, const EdgeValues& values, int walk_limit,
                Workspace& ws) {
  const FieldContext& ctx = values.field();
  const std::size_t n1 = part.part1.size();
  const int n2 = static_cast<int>(part.part2.size());
  ws.out.assign(n1 * n1, FieldElement::zero());

  ws.x1.clear();
  for (LabelSet rest = y & ((LabelSet{1} << n2) - 1); rest != 0; rest &= rest - 1)
    ws.x1.push_back(part.part2[std::countr_zero(rest)]);
  const std::size_t t = ws.x1.size();

  if (t > 0) {
    ws.a.assign(t * t, FieldElement::zero());
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) ws.a[i * t + j] = values.edge(ws.x1[i], ws.x1[j]);
    // walk holds r^l B A^(l-1); sum accumulates it over l.
    ws.walk.assign(n1 * t, FieldElement::zero());
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < t; ++j) ws.walk[i * t + j] = ctx.mul(r, values.edge(part.part1[i], ws.x1[j]));
    ws.sum = ws.walk;
    ws.next.resize(n1 * t);
    for (int l = 2; l <= walk_limit; ++l) {
      bool any = false;
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
          FieldElement acc;
          for (std::size_t b = 0; b < t; ++b) acc += ctx.mul(ws.walk[i * t + b], ws.a[b * t + j]);
          acc = ctx.mul(acc, r);
          ws.next[i * t + j] = acc;
          ws.sum[i * t + j] += acc;
          any = any || !acc.is_zero();
        }
      }
      if (!any) break;
      ws.walk.swap(ws.next);
    }
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n1; ++j) {
        if (i == j) continue;
        FieldElement acc;
        for (std::size_t b = 0; b < t; ++b) acc += ctx.mul(ws.sum[i * t + b], values.edge(ws.x1[b], part.part1[j]));
        ws.out[i * n1 + j] = acc;
      }
    }
  }

  for (LabelSet rest = y >> n2; rest != 0; rest &= rest - 1) {
    const int d = std::countr_zero(rest);
    if (d >= m) break;
    const FieldElement* block = ws.extras.data() + static_cast<std::size_t>(d) * n1 * n1;
    for (std::size_t e = 0; e < n1 * n1; ++e) ws.out[e] += block[e];
  }
}

}  // namespace

WalkMatrixPair walk_matrices(const Partition& part, const EdgeValues& values, LabelSet x1) {
  std::vector<int> verts;
  for (LabelSet rest = x1; rest != 0; rest &= rest - 1) verts.push_back(part.part2[std::countr_zero(rest)]);
  const std::size_t t = verts.size();
  const std::size_t n1 = part.part1.size();
  WalkMatrixPair w{Matrix(t, t), Matrix(n1, t), Matrix(t, n1)};
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) w.a(i, j) = values.edge(verts[i], verts[j]);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      w.b(i, j) = values.edge(part.part1[i], verts[j]);
      w.c(j, i) = values.edge(verts[j], part.part1[i]);
    }
  }
  return w;
}

Matrix inner_sum_matrix(const Graph& g, const Partition& part, int m, LabelSet y, FieldElement r,
                        const EdgeValues& values, int walk_limit) {
  Workspace ws;
  prepare_extras(g, part, m, r, values, ws);
  fill_inner(part, m, y, r, values, resolve_walk_limit(g, walk_limit), ws);
  const std::size_t n1 = part.part1.size();
  Matrix out(n1, n1);
  std::copy(ws.out.begin(), ws.out.end(), out.data().begin());
  return out;
}

FieldElement eval_q_at(const Graph& g, const Partition& part, int m, FieldElement r, const EdgeValues& values,
                       int walk_limit) {
  const int labels = static_cast<int>(part.part2.size()) + m;
  if (labels > LccInstance::kMaxLabels) throw InstanceTooLarge("too many labels");
  const int limit = resolve_walk_limit(g, walk_limit);
  const std::size_t n1 = part.part1.size();
  const LabelSet end = static_cast<LabelSet>((std::uint64_t{1} << labels) - 1);
  Workspace ws;
  prepare_extras(g, part, m, r, values, ws);
  FieldElement acc;
  // Y = ∅ contributes det(0) = 0 on a nonempty base.
  for (LabelSet y = 1; y <= end; ++y) {
    fill_inner(part, m, y, r, values, limit, ws);
    acc += determinant_in_place(values.field(), ws.out, n1);
    if (y == end) break;
  }
  return acc;
}

FieldElement lambda_polyspace(const Graph& g, const Partition& part, int m, const EdgeValues& values,
                              unsigned threads, bool full_walks) {
  const int labels = static_cast<int>(part.part2.size()) + m;
  if (labels == 0 || part.part1.empty()) return FieldElement::zero();
  const FieldContext& ctx = values.field();
  const int n1 = static_cast<int>(part.part1.size());
  const int limit = full_walks ? g.vertex_count() : labels;
  require_interpolation_field(ctx, limit, n1);

  // Entries of the inner matrices have degree <= limit and no constant term.
  const std::size_t count = static_cast<std::size_t>(limit) * static_cast<std::size_t>(n1);
  EvaluationTable table;
  table.points.resize(count + 1);
  table.values.resize(count + 1);
  const FieldElement gen = ctx.generator();
  FieldElement point = FieldElement::one();
  for (std::size_t i = 0; i < count; ++i) {
    table.points[i] = point;
    point = ctx.mul(point, gen);
  }
  parallel_for(count, threads,
               [&](std::size_t i) { table.values[i] = eval_q_at(g, part, m, table.points[i], values, limit); });
  return lagrange_coefficient(ctx, table, labels);
}

}  // namespace detsum
