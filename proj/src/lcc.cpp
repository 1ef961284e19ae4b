#include "detsum/lcc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "detsum/parallel.hpp"

namespace detsum {

ArcSet::ArcSet(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 1 || vertex_count > 64)
    throw InvalidInput("base graph needs between 1 and 64 vertices");
  index_.assign(static_cast<std::size_t>(n_) * n_, -1);
}

ArcSet ArcSet::complete_bidirected(int vertex_count) {
  ArcSet out(vertex_count);
  for (int u = 0; u < vertex_count; ++u)
    for (int v = 0; v < vertex_count; ++v)
      if (u != v) out.add_arc(u, v);
  return out;
}

int ArcSet::add_arc(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw InvalidInput("arc endpoint out of range");
  if (from == to) throw InvalidInput("self-loop arcs are not allowed");
  auto& slot = index_[static_cast<std::size_t>(from) * n_ + to];
  if (slot >= 0) throw InvalidInput("duplicate arc");
  slot = static_cast<int>(arcs_.size());
  arcs_.push_back({from, to});
  return slot;
}

bool ArcSet::is_bidirected() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [this](const Arc& a) { return arc_index(a.to, a.from) >= 0; });
}

LccInstance::LccInstance(ArcSet base, int label_count) : base_(std::move(base)), labels_(label_count) {
  if (label_count < 0 || label_count > kMaxLabels)
    throw InstanceTooLarge("label count must be in [0, " + std::to_string(kMaxLabels) + "], got " +
                           std::to_string(label_count));
  stride_ = std::size_t{1} << label_count;
  values_.assign(base_.arc_count() * stride_, FieldElement::zero());
}

void LccInstance::set(int arc, LabelSet subset, FieldElement value) {
  if (arc < 0 || static_cast<std::size_t>(arc) >= base_.arc_count()) throw InvalidInput("arc index out of range");
  if (subset == 0) throw InvalidInput("f is not defined on the empty label set");
  if (subset & ~full_labels()) throw InvalidInput("label subset outside the label set");
  values_[static_cast<std::size_t>(arc) * stride_ + subset] = value;
}

Matrix build_mf(const LccInstance& inst, LabelSet subset) {
  if (subset == 0) throw InvalidInput("M_f is only defined for nonempty label sets");
  if (subset & ~inst.full_labels()) throw InvalidInput("label subset outside the label set");
  const auto n = static_cast<std::size_t>(inst.base().vertex_count());
  Matrix m(n, n);
  const auto arcs = inst.base().arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a)
    m(arcs[a].from, arcs[a].to) = inst.get(static_cast<int>(a), subset);
  return m;
}

void require_interpolation_field(const FieldContext& ctx, int label_count, int vertex_count) {
  const auto needed = static_cast<std::uint64_t>(label_count) * static_cast<std::uint64_t>(vertex_count);
  if (ctx.size() <= needed)
    throw FieldTooSmall("GF(2^" + std::to_string(ctx.bits()) + ") is too small: need 2^k > |L| n = " +
                        std::to_string(needed));
}

FieldElement eval_p_at(const FieldContext& ctx, const LccInstance& inst, FieldElement r) {
  require_interpolation_field(ctx, inst.label_count(), inst.base().vertex_count());
  const auto n = static_cast<std::size_t>(inst.base().vertex_count());
  const std::size_t nn = n * n;
  const int labels = inst.label_count();
  const std::size_t subsets = std::size_t{1} << labels;

  std::vector<FieldElement> rpow(static_cast<std::size_t>(labels) + 1);
  rpow[0] = FieldElement::one();
  for (std::size_t i = 1; i < rpow.size(); ++i) rpow[i] = ctx.mul(rpow[i - 1], r);

  // table[Y] starts as r^|Y| M_f(Y) and becomes T(Y) after the transform.
  thread_local std::vector<FieldElement> table;
  table.assign(subsets * nn, FieldElement::zero());
  const auto arcs = inst.base().arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t cell = static_cast<std::size_t>(arcs[a].from) * n + static_cast<std::size_t>(arcs[a].to);
    const auto f = inst.values(static_cast<int>(a));
    for (std::size_t y = 1; y < subsets; ++y) {
      if (!f[y].is_zero()) table[y * nn + cell] = ctx.mul(rpow[std::popcount(y)], f[y]);
    }
  }

  for (int b = 0; b < labels; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t y = 0; y < subsets; ++y) {
      if (!(y & bit)) continue;
      FieldElement* dst = &table[y * nn];
      const FieldElement* src = &table[(y ^ bit) * nn];
      for (std::size_t i = 0; i < nn; ++i) dst[i] += src[i];
    }
  }

  // T(empty) = 0 has determinant 0 for n >= 1.
  FieldElement sum;
  for (std::size_t y = 1; y < subsets; ++y)
    sum += determinant_in_place(ctx, std::span(table).subspan(y * nn, nn), n);
  return sum;
}

DegreeWindow degree_window(const LccInstance& inst) {
  DegreeWindow w;
  int s_min = inst.label_count() + 1;
  int s_max = 0;
  for (std::size_t a = 0; a < inst.base().arc_count(); ++a) {
    const auto f = inst.values(static_cast<int>(a));
    for (std::size_t y = 1; y < f.size(); ++y) {
      if (f[y].is_zero()) continue;
      s_min = std::min(s_min, std::popcount(y));
      s_max = std::max(s_max, std::popcount(y));
    }
  }
  if (s_max == 0) return w;
  const int n = inst.base().vertex_count();
  w.empty = false;
  w.low = n * s_min;
  w.high = n * s_max;
  return w;
}

FieldElement lambda(const FieldContext& ctx, const LccInstance& inst, unsigned threads, bool tight) {
  const int labels = inst.label_count();
  // No surjection from an empty label set onto a nonempty cycle cover.
  if (labels == 0) return FieldElement::zero();
  const int n = inst.base().vertex_count();
  require_interpolation_field(ctx, labels, n);
  const FieldElement g = ctx.generator();

  if (!tight) {
    // deg p <= |L| n; the extra point r = 0 is free because p(f, 0) = 0.
    const std::size_t count = static_cast<std::size_t>(labels) * static_cast<std::size_t>(n);
    EvaluationTable table;
    table.points.resize(count + 1);
    table.values.resize(count + 1);
    table.points[count] = FieldElement::zero();
    FieldElement point = FieldElement::one();
    for (std::size_t i = 0; i < count; ++i) {
      table.points[i] = point;
      point = ctx.mul(point, g);
    }
    parallel_for(count, threads, [&](std::size_t i) { table.values[i] = eval_p_at(ctx, inst, table.points[i]); });
    return lagrange_coefficient(ctx, table, labels);
  }

  // Every entry of Σ_{Z ⊆ Y} r^|Z| M_f(Z) lies in r^s_min .. r^s_max, so
  // p(f, r) / r^low is a polynomial of degree <= high - low.
  const DegreeWindow w = degree_window(inst);
  if (w.empty || labels < w.low || labels > w.high) return FieldElement::zero();
  const std::size_t count = static_cast<std::size_t>(w.high - w.low) + 1;
  EvaluationTable table;
  table.points.resize(count);
  table.values.resize(count);
  FieldElement point = FieldElement::one();
  for (std::size_t i = 0; i < count; ++i) {
    table.points[i] = point;
    point = ctx.mul(point, g);
  }
  parallel_for(count, threads, [&](std::size_t i) {
    const FieldElement r = table.points[i];
    table.values[i] = ctx.mul(eval_p_at(ctx, inst, r), ctx.pow(r, -static_cast<std::int64_t>(w.low)));
  });
  return lagrange_coefficient(ctx, table, labels - w.low);
}

FieldElement lambda_bruteforce(const FieldContext& ctx, const LccInstance& inst) {
  const ArcSet& base = inst.base();
  const int n = base.vertex_count();
  const int labels = inst.label_count();
  if (n > 6 || labels > 6) throw InstanceTooLarge("brute-force labeled cycle cover sum needs n, |L| <= 6");

  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> cover(static_cast<std::size_t>(n));
  std::vector<int> owner(static_cast<std::size_t>(labels));
  std::vector<LabelSet> label_of(static_cast<std::size_t>(n));
  FieldElement total;

  do {
    bool valid = true;
    for (int i = 0; i < n && valid; ++i) {
      cover[i] = sigma[i] == i ? -1 : base.arc_index(i, sigma[i]);
      valid = cover[i] >= 0;
    }
    if (!valid) continue;

    // Every map from labels to the n cover arcs; keep the surjective ones.
    std::fill(owner.begin(), owner.end(), 0);
    while (true) {
      std::fill(label_of.begin(), label_of.end(), 0);
      for (int l = 0; l < labels; ++l) label_of[owner[l]] |= LabelSet{1} << l;
      if (std::none_of(label_of.begin(), label_of.end(), [](LabelSet s) { return s == 0; })) {
        FieldElement term = FieldElement::one();
        for (int i = 0; i < n; ++i) term = ctx.mul(term, inst.get(cover[i], label_of[i]));
        total += term;
      }
      int l = 0;
      while (l < labels && ++owner[l] == n) owner[l++] = 0;
      if (l == labels) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace detsum
