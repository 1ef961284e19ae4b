#pragma once

#include "detsum/assignment.hpp"
#include "detsum/general.hpp"
#include "detsum/graph.hpp"
#include "detsum/matrix.hpp"

namespace detsum {

// Walk matrices for X1 ⊆ part2: A is |X1| x |X1| with A(a, b) = x_{ab},
// B is |part1| x |X1| with B(u, a) = x_{ua}. C is |X1| x |part1| with
// C(a, v) = x_{av}; it equals B^T except on edges at the special vertex,
// where the two directions carry different variables.
struct WalkMatrixPair {
  Matrix a;
  Matrix b;
  Matrix c;
};

WalkMatrixPair walk_matrices(const Partition& part, const EdgeValues& values, LabelSet x1);

// Σ_{Z ⊆ Y} M_{g(.,.,r)}(Z) for Y over part2 ∪ L_m: the part2 half is
// Σ_{l=1}^{walk_limit} r^l B A^(l-1) C with the diagonal cleared, the L_m
// half is r x_{uv,d} on edges of G[part1]. walk_limit defaults to n.
Matrix inner_sum_matrix(const Graph& g, const Partition& part, int m, LabelSet y, FieldElement r,
                        const EdgeValues& values, int walk_limit = 0);

// q(g, r) streamed over all Y without storing per-subset tables.
FieldElement eval_q_at(const Graph& g, const Partition& part, int m, FieldElement r, const EdgeValues& values,
                       int walk_limit = 0);

// [r^|L|] q(g, r). Walks are cut at length |L|: with no constant terms in
// any entry, longer walks cannot reach the r^|L| coefficient of a
// determinant, and the cut keeps deg q <= |L| |part1|. full_walks keeps all
// walks up to n and interpolates through n |part1| points instead.
FieldElement lambda_polyspace(const Graph& g, const Partition& part, int m, const EdgeValues& values,
                              unsigned threads = 1, bool full_walks = false);

}  // namespace detsum
