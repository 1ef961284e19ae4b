#include <doctest.h>

#include <algorithm>
#include <random>

#include "detsum/errors.hpp"
#include "detsum/lcc.hpp"
#include "support.hpp"

using namespace detsum;
using detsum::testing::random_element;
using detsum::testing::random_instance;

namespace {

// Σ_Y det(Σ_{Z ⊆ Y} r^|Z| M_f(Z)) by the double loop over Y and Z.
FieldElement naive_p(const FieldContext& f, const LccInstance& inst, FieldElement r) {
  const std::size_t n = static_cast<std::size_t>(inst.base().vertex_count());
  FieldElement sum;
  for (LabelSet y = 1; y <= inst.full_labels(); ++y) {
    Matrix t(n, n);
    for (LabelSet z = 1; z <= y; ++z)
      if ((z & y) == z) t = mat_add(t, mat_scale(f, build_mf(inst, z), f.pow(r, std::popcount(z))));
    sum += determinant(f, t);
  }
  return sum;
}

LccInstance two_vertex(int labels) { return LccInstance(ArcSet::complete_bidirected(2), labels); }

}  // namespace

TEST_CASE("arc sets") {
  ArcSet a(3);
  CHECK(a.add_arc(0, 1) == 0);
  CHECK(a.add_arc(1, 0) == 1);
  CHECK(a.arc_index(0, 1) == 0);
  CHECK(a.arc_index(1, 2) == -1);
  CHECK_THROWS(a.add_arc(0, 1));
  CHECK_THROWS(a.add_arc(2, 2));
  CHECK_THROWS(a.add_arc(0, 3));
  CHECK(ArcSet::complete_bidirected(4).arc_count() == 12);
  CHECK(ArcSet::complete_bidirected(4).is_bidirected());
  a.add_arc(1, 2);
  CHECK_FALSE(a.is_bidirected());
}

TEST_CASE("instances reject the empty label set") {
  LccInstance inst = two_vertex(2);
  CHECK_THROWS(inst.set(0, 0, FieldElement::one()));
  CHECK_THROWS(inst.set(0, 4, FieldElement::one()));
  CHECK_THROWS(build_mf(inst, 0));
  CHECK_THROWS_AS(LccInstance(ArcSet(2), 25), InstanceTooLarge);
}

TEST_CASE("M_f placement") {
  const FieldContext f(8);
  LccInstance zero = two_vertex(1);
  CHECK(build_mf(zero, 1).is_zero());
  LccInstance inst = two_vertex(1);
  const FieldElement x(0x1d), y(0x42);
  inst.set(inst.base().arc_index(0, 1), 1, x);
  inst.set(inst.base().arc_index(1, 0), 1, y);
  const Matrix m = build_mf(inst, 1);
  CHECK(m(0, 0).is_zero());
  CHECK(m(0, 1) == x);
  CHECK(m(1, 0) == y);
  CHECK(m(1, 1).is_zero());
}

TEST_CASE("p on the 2-vertex instance is r^2 x y") {
  const FieldContext f(8);
  LccInstance inst = two_vertex(1);
  const FieldElement x(0x1d), y(0x42);
  inst.set(inst.base().arc_index(0, 1), 1, x);
  inst.set(inst.base().arc_index(1, 0), 1, y);
  for (std::uint32_t r = 0; r < 256; r += 17) {
    const FieldElement rr(r);
    CHECK(eval_p_at(f, inst, rr) == f.mul(f.mul(rr, rr), f.mul(x, y)));
  }
  CHECK(eval_p_at(f, two_vertex(1), FieldElement(5)).is_zero());
}

TEST_CASE("zeta transform matches the naive double loop") {
  const FieldContext f(8);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int labels = 1 + static_cast<int>(rng() % 4);
    const LccInstance inst = random_instance(f, n, labels, rng);
    const FieldElement r = random_element(f, rng);
    CHECK(eval_p_at(f, inst, r) == naive_p(f, inst, r));
  }
}

TEST_CASE("lambda examples") {
  const FieldContext f(8);
  std::mt19937_64 rng(12);

  // Vertex 2 has no outgoing arc.
  ArcSet base(3);
  base.add_arc(0, 1);
  base.add_arc(1, 0);
  base.add_arc(0, 2);
  LccInstance stuck(base, 2);
  for (int a = 0; a < 3; ++a)
    for (LabelSet z = 1; z < 4; ++z) stuck.set(a, z, random_element(f, rng));
  CHECK(lambda(f, stuck).is_zero());

  // Two labels on a 2-cycle: the two surjections.
  LccInstance two = two_vertex(2);
  const int a01 = two.base().arc_index(0, 1), a10 = two.base().arc_index(1, 0);
  for (int a : {a01, a10})
    for (LabelSet z : {1u, 2u}) two.set(a, z, random_element(f, rng));
  const FieldElement expected = f.mul(two.get(a01, 1), two.get(a10, 2)) + f.mul(two.get(a01, 2), two.get(a10, 1));
  CHECK(lambda(f, two) == expected);
  CHECK(lambda_bruteforce(f, two) == expected);

  // Two disjoint bidirected edges with a mirror f (s = 0): no Hamiltonian
  // cover, so everything cancels.
  ArcSet pairs(4);
  for (auto [u, v] : {std::pair{0, 1}, {1, 0}, {2, 3}, {3, 2}}) pairs.add_arc(u, v);
  LccInstance mirror(pairs, 3);
  for (LabelSet z = 1; z < 8; ++z) {
    mirror.set(mirror.base().arc_index(0, 1), z, random_element(f, rng));
    mirror.set(mirror.base().arc_index(1, 0), z, random_element(f, rng));
    const FieldElement shared = random_element(f, rng);
    mirror.set(mirror.base().arc_index(2, 3), z, shared);
    mirror.set(mirror.base().arc_index(3, 2), z, shared);
  }
  CHECK(lambda(f, mirror).is_zero());
  CHECK(lambda_bruteforce(f, mirror).is_zero());
}

TEST_CASE("brute force examples") {
  const FieldContext f(8);
  std::mt19937_64 rng(13);
  LccInstance tri(ArcSet::complete_bidirected(3), 3);
  for (int a = 0; a < 6; ++a)
    for (LabelSet z : {1u, 2u, 4u}) tri.set(a, z, random_element(f, rng));
  // Two orientations times 3! bijections from labels to arcs.
  FieldElement expected;
  for (const std::vector<int>& cyc : {std::vector{0, 1, 2}, std::vector{0, 2, 1}}) {
    std::vector<int> arcs;
    for (int i = 0; i < 3; ++i) arcs.push_back(tri.base().arc_index(cyc[i], cyc[(i + 1) % 3]));
    std::vector<int> perm{0, 1, 2};
    do {
      FieldElement prod = FieldElement::one();
      for (int i = 0; i < 3; ++i) prod = f.mul(prod, tri.get(arcs[i], LabelSet{1} << perm[i]));
      expected += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK(lambda_bruteforce(f, tri) == expected);
  CHECK(lambda(f, tri) == expected);

  CHECK(lambda_bruteforce(f, LccInstance(ArcSet(3), 2)).is_zero());
  // Singletons only and |L| = 2 < 3 arcs in any cover of a triangle.
  LccInstance few(ArcSet::complete_bidirected(3), 2);
  for (int a = 0; a < 6; ++a)
    for (LabelSet z : {1u, 2u}) few.set(a, z, random_element(f, rng));
  CHECK(lambda_bruteforce(f, few).is_zero());
  CHECK(lambda(f, few).is_zero());
}

TEST_CASE("lambda equals the definitional sum on random instances") {
  std::mt19937_64 rng(14);
  for (unsigned k : {8u, 16u}) {
    const FieldContext f(k);
    for (int t = 0; t < 150; ++t) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const int labels = static_cast<int>(rng() % 4);
      const LccInstance inst = random_instance(f, n, labels, rng, t % 3 == 0);
      const FieldElement bf = lambda_bruteforce(f, inst);
      CHECK(lambda(f, inst) == bf);
      CHECK(lambda(f, inst, 1, false) == bf);
    }
  }
}

TEST_CASE("degree window") {
  const FieldContext f(8);
  std::mt19937_64 rng(15);
  const LccInstance singles = random_instance(f, 3, 3, rng, true);
  const DegreeWindow w = degree_window(singles);
  CHECK_FALSE(w.empty);
  CHECK(w.low == 3);
  CHECK(w.high == 3);
  CHECK(degree_window(LccInstance(ArcSet(3), 2)).empty);
}

TEST_CASE("field size requirement") {
  const FieldContext f(3);  // 8 elements
  std::mt19937_64 rng(16);
  const LccInstance inst = random_instance(FieldContext(3), 4, 2, rng);
  CHECK_THROWS_AS(lambda(f, inst), FieldTooSmall);
  CHECK_THROWS_AS(eval_p_at(f, inst, FieldElement(1)), FieldTooSmall);
  CHECK_NOTHROW(lambda(FieldContext(4), inst));
}

TEST_CASE("thread count does not change lambda") {
  const FieldContext f(12);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const LccInstance inst = random_instance(f, 4, 3, rng);
    CHECK(lambda(f, inst, 1) == lambda(f, inst, 3));
  }
}
