#include <doctest.h>

#include <algorithm>
#include <random>

#include "detsum/errors.hpp"
#include "detsum/generators.hpp"
#include "detsum/oracle.hpp"
#include "support.hpp"

using namespace detsum;

namespace {

// Minimum over all cyclic orders fixing vertex 0.
std::optional<std::int64_t> tour_by_permutations(const WeightedGraph& wg) {
  const int n = wg.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::int64_t> best;
  do {
    std::int64_t w = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int u = order[i], v = order[(i + 1) % n];
      ok = wg.graph().has_edge(u, v);
      w += wg.weight(u, v);
    }
    if (ok && (!best || w < *best)) best = w;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace

TEST_CASE("brute force Hamiltonian counts") {
  CHECK(ham_bruteforce(cycle_graph(5)).oriented == 2);
  CHECK(ham_bruteforce(complete_graph(4)).oriented == 6);
  CHECK(ham_bruteforce(complete_graph(6)).oriented == 120);
  CHECK_FALSE(ham_bruteforce(petersen()).hamiltonian);
  CHECK_FALSE(ham_bruteforce(path_graph(5)).hamiltonian);
  CHECK(ham_bruteforce(hypercube(3)).hamiltonian);
  const auto c4 = ham_bruteforce(cycle_graph(4), true);
  REQUIRE(c4.cycles.size() == 2);
  CHECK(c4.cycles[0].front() == 0);
  CHECK_THROWS_AS(ham_bruteforce(Graph(12)), InstanceTooLarge);
}

TEST_CASE("Held-Karp against permutations") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const WeightedGraph wg = random_weights(random_gnp(n, 0.6, rng), 9, rng);
    CHECK(held_karp(wg) == tour_by_permutations(wg));
  }
  CHECK_FALSE(held_karp(WeightedGraph::unit(complete_graph(2))));
  CHECK_THROWS_AS(held_karp(WeightedGraph(21)), InstanceTooLarge);
}

TEST_CASE("walk counting by inclusion-exclusion") {
  CHECK(ie_walk_count(cycle_graph(4)) == 2);
  CHECK(ie_walk_count(complete_graph(3)) == 2);
  CHECK(ie_walk_count(Graph(4)) == 0);
  CHECK(ie_walk_count(complete_graph(5)) == 24);
  std::mt19937_64 rng(62);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_gnp(n, 0.5, rng);
    CHECK(ie_walk_count(g) == ham_bruteforce(g).oriented);
  }
}

TEST_CASE("permanent") {
  const FieldContext f(8);
  CHECK(permanent(f, Matrix::identity(4)) == FieldElement::one());
  Matrix ones(3, 3);
  for (auto& x : ones.data()) x = FieldElement::one();
  CHECK(permanent(f, ones).is_zero());  // 3! = 6 is even
  CHECK_THROWS_AS(permanent(f, Matrix(9, 9)), InstanceTooLarge);
}

TEST_CASE("symbolic polynomials over GF(2)") {
  const auto x = SymbolicPolynomial::variable({0, 1});
  const auto y = SymbolicPolynomial::variable({1, 2});
  CHECK((x + x).is_zero());
  const auto s = x + y;
  CHECK(s * s == x * x + y * y);
  CHECK((x * SymbolicPolynomial::one()) == x);
  CHECK((x * y) == (y * x));
  CHECK_FALSE(s.to_string().empty());
  CHECK(SymbolicPolynomial().to_string() == "0");
}

TEST_CASE("symbolic lambda on a 2-cycle") {
  SymbolicLccInstance inst(ArcSet::complete_bidirected(2), 2);
  const auto a = SymbolicPolynomial::variable({0, 1}), b = SymbolicPolynomial::variable({1, 0});
  const auto c = SymbolicPolynomial::variable({0, 1, 0}), d = SymbolicPolynomial::variable({1, 0, 0});
  inst.set(inst.base().arc_index(0, 1), 1, a);
  inst.set(inst.base().arc_index(1, 0), 2, b);
  inst.set(inst.base().arc_index(0, 1), 2, c);
  inst.set(inst.base().arc_index(1, 0), 1, d);
  CHECK(symbolic_lambda(inst) == a * b + c * d);
}

TEST_CASE("cycle bookkeeping") {
  CHECK(arcs_inside({0, 1, 2, 3}, {0, 1}) == 1);
  CHECK(arcs_inside({0, 1, 2, 3}, {0, 2}) == 0);
  CHECK(arcs_inside({0, 1, 2, 3}, {0, 1, 2, 3}) == 4);
  const Partition p = make_partition(4, {0, 1});
  const auto c4 = ham_bruteforce(complete_graph(4), true).cycles;
  // Each oriented cycle with one arc inside {0,1} contributes one monomial.
  const auto h = hamiltonian_polynomial(c4, p, 1);
  const auto n = std::count_if(c4.begin(), c4.end(), [&](const auto& c) { return arcs_inside(c, p.part1) == 1; });
  CHECK(h.size() == static_cast<std::size_t>(n));
}
