#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detsum/assignment.hpp"
#include "detsum/bipartite.hpp"
#include "detsum/general.hpp"
#include "detsum/graph.hpp"
#include "detsum/lcc.hpp"
#include "detsum/matrix.hpp"

namespace detsum {

struct HamiltonianCount {
  bool hamiltonian = false;
  // Directed Hamiltonian cycles; twice the undirected count.
  std::uint64_t oriented = 0;
  // Each oriented cycle as a vertex order starting at 0, if requested.
  std::vector<std::vector<int>> cycles;
};

// Depth-first enumeration of cyclic orders fixing vertex 0. n <= 11.
HamiltonianCount ham_bruteforce(const Graph& g, bool collect_cycles = false);

// Bitmask DP over (subset, endpoint) from vertex 0. n <= 20.
std::optional<std::int64_t> held_karp(const WeightedGraph& wg);

// Σ_{X ⊆ V \ {s}} (-1)^{|V \ (X ∪ {s})|} (A[X ∪ {s}]^n)_{s,s} with s = 0, in
// exact integers. For n >= 3 this is the number of directed Hamiltonian
// cycles (closed n-walks from s visiting every vertex). n <= 16.
boost::multiprecision::cpp_int ie_walk_count(const Graph& g);

// Σ over permutations; n <= 8.
FieldElement permanent(const FieldContext& ctx, const Matrix& m);

// A monomial is a sorted multiset of variables.
using Monomial = std::vector<VariableId>;

// Multivariate polynomial over GF(2): the set of monomials with coefficient 1.
class SymbolicPolynomial {
 public:
  SymbolicPolynomial() = default;
  static SymbolicPolynomial one();
  static SymbolicPolynomial variable(const VariableId& v);

  // Adds a monomial with coefficient 1 (removing it if present).
  void toggle(Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<Monomial>& terms() const { return terms_; }

  SymbolicPolynomial& operator+=(const SymbolicPolynomial& other);
  friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a += b; }
  friend SymbolicPolynomial operator*(const SymbolicPolynomial& a, const SymbolicPolynomial& b);
  friend bool operator==(const SymbolicPolynomial&, const SymbolicPolynomial&) = default;

  std::string to_string() const;

 private:
  std::set<Monomial> terms_;
};

// (D, L, f) with symbolic f values.
class SymbolicLccInstance {
 public:
  SymbolicLccInstance(ArcSet base, int label_count);

  const ArcSet& base() const { return base_; }
  int label_count() const { return labels_; }

  void set(int arc, LabelSet subset, SymbolicPolynomial value);
  const SymbolicPolynomial& get(int arc, LabelSet subset) const;

 private:
  ArcSet base_;
  int labels_;
  std::vector<SymbolicPolynomial> values_;
};

// Definitional sum over cycle covers and surjective labelings. n_base <= 4,
// |L| <= 4.
SymbolicPolynomial symbolic_lambda(const SymbolicLccInstance& inst);

// The bipartite reduction with formal variables.
SymbolicLccInstance symbolic_bipartite_instance(const BipartiteInstance& inst);

// The general reduction with formal variables; path sums by enumeration.
SymbolicLccInstance symbolic_general_instance(const Graph& g, const Partition& part, int m);

// Σ over the given oriented Hamiltonian cycles with exactly m arcs inside
// part1 of Π x over the cycle's arcs, each such arc carrying one of the m
// extra labels in every possible assignment. For a bipartition and m = 0
// this is the plain Σ_H Π_{uv ∈ H} x_uv.
SymbolicPolynomial hamiltonian_polynomial(const std::vector<std::vector<int>>& cycles, const Partition& part,
                                          int m);

// Number of arcs of the oriented cycle with both ends in part1.
int arcs_inside(const std::vector<int>& cycle, const std::vector<int>& part1);

}  // namespace detsum
