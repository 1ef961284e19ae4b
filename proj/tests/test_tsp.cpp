#include <doctest.h>

#include <algorithm>
#include <random>

#include "detsum/errors.hpp"
#include "detsum/generators.hpp"
#include "detsum/oracle.hpp"
#include "detsum/tsp.hpp"
#include "support.hpp"

using namespace detsum;
using detsum::testing::random_element;

namespace {

std::vector<FieldElement> values_of(const FieldContext& f, const std::vector<FieldElement>& coeffs) {
  std::vector<FieldElement> out(f.group_order());
  FieldElement y = FieldElement::one();
  for (auto& v : out) {
    v = eval_poly(f, coeffs, y);
    y = f.mul(y, f.generator());
  }
  return out;
}

WeightedGraph triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
  WeightedGraph wg(3);
  wg.add_edge(0, 1, a);
  wg.add_edge(1, 2, b);
  wg.add_edge(0, 2, c);
  return wg;
}

}  // namespace

TEST_CASE("inverse transform examples") {
  const FieldContext f(4);
  const FieldElement c(0xb);
  const auto flat = inverse_transform(std::vector<FieldElement>(15, c), f);
  CHECK(flat[0] == c);
  for (std::size_t j = 1; j < 15; ++j) CHECK(flat[j].is_zero());

  std::vector<FieldElement> cube(4);
  cube[3] = FieldElement::one();
  const auto t = inverse_transform(values_of(f, cube), f);
  for (std::size_t j = 0; j < 15; ++j) CHECK(t[j] == (j == 3 ? FieldElement::one() : FieldElement::zero()));

  for (const auto& x : inverse_transform(std::vector<FieldElement>(15), f)) CHECK(x.is_zero());
  CHECK_THROWS_AS(inverse_transform(std::vector<FieldElement>(14), f), InvalidInput);
}

TEST_CASE("inverse transform round trip, k <= 10") {
  std::mt19937_64 rng(51);
  for (unsigned k = 2; k <= 10; ++k) {
    const FieldContext f(k);
    std::vector<FieldElement> coeffs(f.group_order());
    for (auto& c : coeffs) c = random_element(f, rng);
    CHECK(inverse_transform(values_of(f, coeffs), f) == coeffs);
  }
}

TEST_CASE("weighted instance at y = 1 is the plain instance") {
  const FieldContext f(16);
  std::mt19937_64 rng(52);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_gnp(7, 0.6, rng);
    const WeightedGraph wg = random_weights(g, 5, rng);
    const Partition p = random_balanced_partition(7, rng);
    const VariableAssignment pt(f, rng(), p.special());
    const EdgeValues x(g, pt);
    const LccInstance plain = build_general_lcc(g, p, 1, x, PathPolyTable(g, p, x));
    const LccInstance weighted = build_fy_lcc(wg, p, 1, FieldElement::one(), pt);
    for (int a = 0; a < static_cast<int>(plain.base().arc_count()); ++a)
      for (LabelSet z = 1; z <= plain.full_labels(); ++z) CHECK(plain.get(a, z) == weighted.get(a, z));
  }
}

TEST_CASE("weighted edge values carry y^w") {
  const FieldContext f(8);
  const WeightedGraph wg = triangle(1, 2, 3);
  const VariableAssignment pt(f, 4, 0);
  const FieldElement y(0x53);
  const EdgeValues plain(wg.graph(), pt);
  const EdgeValues w = plain.weighted(wg, y);
  CHECK(w.edge(1, 2) == f.mul(plain.edge(1, 2), f.pow(y, 2)));
  CHECK(w.edge(2, 0) == f.mul(plain.edge(2, 0), f.pow(y, 3)));
  CHECK(w.extra(0, 1, 0) == f.mul(plain.extra(0, 1, 0), y));
}

TEST_CASE("field sizing for the weight transform") {
  DetectionConfig cfg;
  CHECK(resolve_tsp_field_bits(cfg, 100, 3, 4) == 7);
  CHECK(resolve_tsp_field_bits(cfg, 5, 7, 5) == 6);
  cfg.k = 6;
  CHECK_THROWS_AS(resolve_tsp_field_bits(cfg, 100, 3, 4), FieldTooSmall);
  cfg.k = 0;
  CHECK_THROWS_AS(resolve_tsp_field_bits(cfg, 5'000'000, 3, 4), InstanceTooLarge);
}

TEST_CASE("small tours") {
  DetectionConfig cfg;
  const TspResult tri = solve_tsp(triangle(1, 2, 3), cfg);
  REQUIRE(tri.weight);
  CHECK(*tri.weight == 6);
  CHECK(tri.total_weight == 6);

  const TspResult k4 = solve_tsp(WeightedGraph::unit(complete_graph(4)), cfg);
  REQUIRE(k4.weight);
  CHECK(*k4.weight == 4);

  CHECK_FALSE(solve_tsp(WeightedGraph::unit(path_graph(5)), cfg).weight);
  CHECK_FALSE(solve_tsp(WeightedGraph::unit(complete_graph(2)), cfg).weight);

  // Square with a heavy diagonal pair: the perimeter wins.
  WeightedGraph sq(4);
  sq.add_edge(0, 1, 1);
  sq.add_edge(1, 2, 1);
  sq.add_edge(2, 3, 1);
  sq.add_edge(3, 0, 1);
  sq.add_edge(0, 2, 5);
  sq.add_edge(1, 3, 5);
  const TspResult s = solve_tsp(sq, cfg);
  REQUIRE(s.weight);
  CHECK(*s.weight == 4);
}

TEST_CASE("tsp agrees with Held-Karp") {
  std::mt19937_64 rng(53);
  DetectionConfig cfg;
  for (int t = 0; t < 25; ++t) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const WeightedGraph wg = random_weights(random_gnp(n, 0.6, rng), 5, rng);
    cfg.seed = rng();
    const auto expected = held_karp(wg);
    const TspResult got = solve_tsp(wg, cfg);
    if (got.weight) {
      REQUIRE(expected);
      CHECK(*got.weight == *expected);
    } else {
      CHECK_FALSE(expected);
    }
  }
}
