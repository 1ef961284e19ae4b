#include <doctest.h>

#include <functional>
#include <random>

#include "detsum/generators.hpp"
#include "detsum/lcc.hpp"
#include "detsum/polyspace.hpp"
#include "support.hpp"

using namespace detsum;
using detsum::testing::random_element;

namespace {

// Σ over u -> v walks with exactly `len` interior vertices, all in `inner`
// (repeats allowed), of the product of the arc values.
FieldElement walks_by_dfs(const EdgeValues& x, int u, int v, const std::vector<int>& inner, int len) {
  const FieldContext& f = x.field();
  FieldElement sum;
  std::function<void(int, int, FieldElement)> go = [&](int at, int left, FieldElement prod) {
    if (left == 0) {
      sum += f.mul(prod, x.edge(at, v));
      return;
    }
    for (int w : inner) go(w, left - 1, f.mul(prod, x.edge(at, w)));
  };
  go(u, len, FieldElement::one());
  return sum;
}

}  // namespace

TEST_CASE("walk matrices count walks through X1") {
  const FieldContext f(16);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_gnp(7, 0.7, rng);
    const Partition p = random_balanced_partition(7, rng);
    const EdgeValues x(g, VariableAssignment(f, rng(), p.special()));
    const LabelSet x1 = static_cast<LabelSet>(1 + rng() % 7);
    std::vector<int> inner;
    for (int b = 0; b < 3; ++b)
      if ((x1 >> b) & 1) inner.push_back(p.part2[b]);
    const WalkMatrixPair w = walk_matrices(p, x, x1);
    for (int l = 1; l <= 3; ++l) {
      const Matrix prod = mat_mul(f, mat_mul(f, w.b, mat_pow(f, w.a, l - 1)), w.c);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          CHECK(prod(i, j) == walks_by_dfs(x, p.part1[i], p.part1[j], inner, l));
    }
  }
}

TEST_CASE("inner matrices") {
  const FieldContext f(16);
  const Graph k5 = complete_graph(5);
  const Partition p = make_partition(5, {0, 1, 2});
  const EdgeValues x(k5, VariableAssignment(f, 9, p.special()));
  const FieldElement r(0x1234);
  CHECK(inner_sum_matrix(k5, p, 2, 0, r, x).is_zero());

  // Only the first extra label: r x_{uv,0} off the diagonal.
  const Matrix e = inner_sum_matrix(k5, p, 2, LabelSet{1} << 2, r, x);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(e(i, j) == (i == j ? FieldElement::zero() : f.mul(r, x.extra(p.part1[i], p.part1[j], 0))));

  // X1 = {3}: walks u -> 3 -> 3 -> ... need the loop 3-3, so only l = 1 counts.
  const Matrix one = inner_sum_matrix(k5, p, 0, 1, r, x);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(one(i, j) ==
            (i == j ? FieldElement::zero() : f.mul(r, f.mul(x.edge(p.part1[i], 3), x.edge(3, p.part1[j])))));
}

TEST_CASE("inner matrices sum walk terms up to the limit") {
  const FieldContext f(16);
  std::mt19937_64 rng(42);
  const Graph g = random_gnp(8, 0.8, rng);
  const Partition p = make_partition(8, {0, 2, 4, 6});
  const EdgeValues x(g, VariableAssignment(f, rng(), p.special()));
  const FieldElement r = random_element(f, rng);
  const LabelSet y = 0b1011;
  const WalkMatrixPair w = walk_matrices(p, x, y);
  for (int limit : {1, 2, 5, 8}) {
    Matrix expected(4, 4);
    for (int l = 1; l <= limit; ++l)
      expected = mat_add(expected,
                         mat_scale(f, mat_mul(f, mat_mul(f, w.b, mat_pow(f, w.a, l - 1)), w.c), f.pow(r, l)));
    for (std::size_t i = 0; i < 4; ++i) expected(i, i) = FieldElement::zero();
    CHECK(inner_sum_matrix(g, p, 0, y, r, x, limit) == expected);
  }
}

TEST_CASE("streaming lambda equals the table lambda") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const FieldContext f(16);
    const Graph g = t % 4 == 0 ? planted_hamiltonian(n, 0.3, rng) : random_gnp(n, 0.6, rng);
    const Partition p = random_balanced_partition(n, rng);
    const int m = static_cast<int>(rng() % 3);
    const EdgeValues x(g, VariableAssignment(f, rng(), p.special()));
    const FieldElement table = lambda(f, build_general_lcc(g, p, m, x, PathPolyTable(g, p, x)));
    CHECK(lambda_polyspace(g, p, m, x) == table);
    if (t % 4 == 0) CHECK(lambda_polyspace(g, p, m, x, 1, true) == table);
  }
}

TEST_CASE("thread count does not change the streaming lambda") {
  const FieldContext f(16);
  std::mt19937_64 rng(44);
  const Graph g = planted_hamiltonian(8, 0.4, rng);
  const Partition p = random_balanced_partition(8, rng);
  const EdgeValues x(g, VariableAssignment(f, 5, p.special()));
  CHECK(lambda_polyspace(g, p, 1, x, 1) == lambda_polyspace(g, p, 1, x, 4));
}
