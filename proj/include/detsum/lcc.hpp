#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "detsum/gf2k.hpp"
#include "detsum/matrix.hpp"

namespace detsum {

// Label subsets are bitmasks over labels 0..|L|-1.
using LabelSet = std::uint32_t;

struct Arc {
  int from;
  int to;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Loop-free directed graph D = (V, A) with indexed arcs.
class ArcSet {
 public:
  explicit ArcSet(int vertex_count);

  static ArcSet complete_bidirected(int vertex_count);

  // Returns the new arc's index.
  int add_arc(int from, int to);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_[static_cast<std::size_t>(index)]; }
  // -1 when the arc is absent.
  int arc_index(int from, int to) const { return index_[static_cast<std::size_t>(from) * n_ + to]; }
  bool is_bidirected() const;

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> index_;
};

// A labeled cycle cover instance (D, L, f). f is stored densely per arc,
// indexed by label bitmask; slot 0 (the empty set) is always zero.
class LccInstance {
 public:
  static constexpr int kMaxLabels = 24;

  LccInstance(ArcSet base, int label_count);

  const ArcSet& base() const { return base_; }
  int label_count() const { return labels_; }
  LabelSet full_labels() const { return static_cast<LabelSet>((std::uint64_t{1} << labels_) - 1); }

  void set(int arc, LabelSet subset, FieldElement value);
  FieldElement get(int arc, LabelSet subset) const {
    return values_[static_cast<std::size_t>(arc) * stride_ + subset];
  }
  // All 2^|L| values of f(arc, .), index 0 first.
  std::span<const FieldElement> values(int arc) const {
    return {values_.data() + static_cast<std::size_t>(arc) * stride_, stride_};
  }

 private:
  ArcSet base_;
  int labels_;
  std::size_t stride_;
  std::vector<FieldElement> values_;
};

// M_f(Z): entry (i, j) is f(ij, Z) on arcs, zero elsewhere. Z nonempty.
Matrix build_mf(const LccInstance& inst, LabelSet subset);

// Throws FieldTooSmall unless 2^k > |L| * n.
void require_interpolation_field(const FieldContext& ctx, int label_count, int vertex_count);

// p(f, r) = sum_{Y subset L} det( sum_{Z subset Y} r^|Z| M_f(Z) ), with the
// inner sums produced by an in-place zeta transform over the label lattice.
FieldElement eval_p_at(const FieldContext& ctx, const LccInstance& inst, FieldElement r);

// With s_min <= |Z| <= s_max over the nonzero f(a, Z), p(f, r) has all its
// terms in degrees low = n s_min .. high = n s_max.
struct DegreeWindow {
  bool empty = true;
  int low = 0;
  int high = 0;
};

DegreeWindow degree_window(const LccInstance& inst);

// The labeled cycle cover sum [r^|L|] p(f, r). The tight plan interpolates
// p / r^low through high - low + 1 points g^0, g^1, ...; the full plan uses
// r = g^0 .. g^(|L| n - 1) together with p(f, 0) = 0. Both are exact.
FieldElement lambda(const FieldContext& ctx, const LccInstance& inst, unsigned threads = 1, bool tight = true);

// Definitional sum over cycle covers and surjective labelings. n, |L| <= 6.
FieldElement lambda_bruteforce(const FieldContext& ctx, const LccInstance& inst);

}  // namespace detsum
