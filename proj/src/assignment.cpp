#include "detsum/assignment.hpp"

#include <algorithm>

namespace detsum {

VariableId edge_variable(int u, int v, int special) {
  if (u == special || v == special) return {u, v};
  return {std::min(u, v), std::max(u, v)};
}

VariableId extra_variable(int u, int v, int d, int special) {
  VariableId id = edge_variable(u, v, special);
  id.extra = d;
  return id;
}

FieldElement VariableAssignment::value(const VariableId& id) const {
  std::uint64_t h = mix64(seed_);
  h = mix64(h ^ static_cast<std::uint64_t>(id.from));
  h = mix64(h ^ static_cast<std::uint64_t>(id.to));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(id.extra)));
  return field_.from_random_bits(h);
}

EdgeValues::EdgeValues(const Graph& g, const VariableAssignment& point)
    : point_(point),
      edge_(Matrix::square(static_cast<std::size_t>(g.vertex_count()))),
      extra_scale_(Matrix::square(static_cast<std::size_t>(g.vertex_count()))) {
  for (auto [u, v] : g.edges()) {
    edge_(u, v) = point.edge(u, v);
    edge_(v, u) = point.edge(v, u);
    extra_scale_(u, v) = FieldElement::one();
    extra_scale_(v, u) = FieldElement::one();
  }
}

EdgeValues EdgeValues::weighted(const WeightedGraph& wg, FieldElement y) const {
  EdgeValues out = *this;
  const FieldContext& ctx = field();
  for (auto [u, v] : wg.graph().edges()) {
    const FieldElement scale = ctx.pow(y, wg.weight(u, v));
    out.edge_(u, v) = ctx.mul(edge_(u, v), scale);
    out.edge_(v, u) = ctx.mul(edge_(v, u), scale);
    out.extra_scale_(u, v) = ctx.mul(extra_scale_(u, v), scale);
    out.extra_scale_(v, u) = ctx.mul(extra_scale_(v, u), scale);
  }
  return out;
}

FieldElement EdgeValues::extra(int u, int v, int d) const {
  const FieldElement scale = extra_scale_(u, v);
  if (scale.is_zero()) return FieldElement::zero();
  return field().mul(scale, point_.extra(u, v, d));
}

}  // namespace detsum
