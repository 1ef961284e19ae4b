#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "detsum/errors.hpp"

namespace detsum {

// An element of GF(2^k): the bits of a polynomial over GF(2) reduced modulo
// the context's reduction polynomial. Addition needs no context.
struct FieldElement {
  std::uint32_t bits = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

  static constexpr FieldElement zero() { return FieldElement(0); }
  static constexpr FieldElement one() { return FieldElement(1); }

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.bits ^ b.bits);
  }
  constexpr FieldElement& operator+=(FieldElement other) {
    bits ^= other.bits;
    return *this;
  }
};

// Lexicographically smallest irreducible polynomial of degree k over GF(2),
// as a (k+1)-bit mask. 1 <= k <= 32.
std::uint64_t default_reduction_poly(unsigned k);

// Ben-Or irreducibility test for a polynomial of degree 1..32.
bool is_irreducible(std::uint64_t poly);

// Smallest k with 2^k > bound.
unsigned bits_exceeding(std::uint64_t bound);

// GF(2^k) for 1 <= k <= 32. Immutable after construction and cheap to copy;
// for k <= 16 multiplication goes through shared log/antilog tables.
class FieldContext {
 public:
  static constexpr unsigned kMaxBits = 32;
  static constexpr unsigned kMaxTableBits = 16;

  explicit FieldContext(unsigned k);
  FieldContext(unsigned k, std::uint64_t reduction_poly);

  unsigned bits() const { return k_; }
  std::uint64_t reduction_poly() const { return poly_; }
  FieldElement generator() const { return generator_; }
  // 2^k - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return (std::uint64_t{1} << k_) - 1; }
  std::uint64_t size() const { return std::uint64_t{1} << k_; }

  // Checked conversion from raw bits.
  FieldElement element(std::uint64_t bits) const;

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (tables_) {
      if (a.is_zero() || b.is_zero()) return FieldElement::zero();
      return tables_->exp[tables_->log[a.bits] + tables_->log[b.bits]];
    }
    return mul_carryless(a, b);
  }

  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  // Uniform element from 64 random bits.
  FieldElement from_random_bits(std::uint64_t random) const {
    return FieldElement(static_cast<std::uint32_t>(random >> (64 - k_)));
  }

  // Log-domain access for inner loops. Only valid when has_tables().
  bool has_tables() const { return tables_ != nullptr; }
  std::uint32_t log(FieldElement a) const { return tables_->log[a.bits]; }
  FieldElement exp(std::uint32_t i) const { return tables_->exp[i]; }

  FieldElement mul_carryless(FieldElement a, FieldElement b) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    // exp[i] = g^i for 0 <= i < 2(2^k - 1), so log a + log b never wraps.
    std::vector<FieldElement> exp;
  };

  unsigned k_;
  std::uint64_t poly_;
  FieldElement generator_;
  std::shared_ptr<const Tables> tables_;
};

// Smallest element (by bit pattern) of multiplicative order 2^k - 1.
FieldElement find_generator(const FieldContext& ctx);

// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldContext& ctx, FieldElement a);

}  // namespace detsum
