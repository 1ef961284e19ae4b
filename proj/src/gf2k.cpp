#include "detsum/gf2k.hpp"

#include <array>
#include <bit>
#include <string>

namespace detsum {
namespace {

// Smallest irreducible of each degree, found by exhaustive search in
// increasing order of the low-order bits and verified in the unit tests.
constexpr std::array<std::uint64_t, 32> kReductionPolys = {
    0x3,        0x7,        0xb,        0x13,       0x25,        0x43,
    0x83,       0x11b,      0x203,      0x409,      0x805,       0x1009,
    0x201b,     0x4021,     0x8003,     0x1002b,    0x20009,     0x40009,
    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,    0x100001b,
    0x2000009,  0x400001b,  0x8000027,  0x10000003, 0x20000005,  0x40000003,
    0x80000009, 0x10000008d,
};

int degree(std::uint64_t p) { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = degree(p);
  for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
  return a;
}

// Product of two polynomials of degree < 32 fits in 64 bits.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t default_reduction_poly(unsigned k) {
  if (k < 1 || k > FieldContext::kMaxBits)
    throw InvalidInput("field bits must be in [1, 32], got " + std::to_string(k));
  return kReductionPolys[k - 1];
}

bool is_irreducible(std::uint64_t poly) {
  const int d = degree(poly);
  if (d < 1 || d > 32) return false;
  if (d == 1) return true;
  const std::uint64_t x = 2;
  std::uint64_t t = x;
  // p is irreducible iff gcd(x^(2^i) - x, p) = 1 for all i <= d/2.
  for (int i = 1; i <= d / 2; ++i) {
    t = poly_mod(clmul(t, t), poly);
    if (poly_gcd(poly, t ^ x) != 1) return false;
  }
  return true;
}

unsigned bits_exceeding(std::uint64_t bound) {
  unsigned k = 1;
  while (k < 64 && (std::uint64_t{1} << k) <= bound) ++k;
  return k;
}

FieldContext::FieldContext(unsigned k) : FieldContext(k, default_reduction_poly(k)) {}

FieldContext::FieldContext(unsigned k, std::uint64_t reduction_poly)
    : k_(k), poly_(reduction_poly) {
  if (k < 1 || k > kMaxBits)
    throw InvalidInput("field bits must be in [1, 32], got " + std::to_string(k));
  if (degree(reduction_poly) != static_cast<int>(k) || !is_irreducible(reduction_poly))
    throw InvalidInput("reduction polynomial is not an irreducible of degree k");

  generator_ = find_generator(*this);

  if (k <= kMaxTableBits) {
    auto tables = std::make_shared<Tables>();
    const std::uint64_t order = group_order();
    tables->log.assign(size(), 0);
    tables->exp.resize(2 * order);
    FieldElement x = FieldElement::one();
    for (std::uint64_t i = 0; i < order; ++i) {
      tables->exp[i] = x;
      tables->exp[i + order] = x;
      tables->log[x.bits] = static_cast<std::uint32_t>(i);
      x = mul_carryless(x, generator_);
    }
    tables_ = std::move(tables);
  }
}

FieldElement FieldContext::element(std::uint64_t bits) const {
  if (bits >= size())
    throw InvalidInput("value " + std::to_string(bits) + " does not fit in GF(2^" +
                       std::to_string(k_) + ")");
  return FieldElement(static_cast<std::uint32_t>(bits));
}

FieldElement FieldContext::mul_carryless(FieldElement a, FieldElement b) const {
  std::uint64_t product = clmul(a.bits, b.bits);
  for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
    if ((product >> i) & 1) product ^= poly_ << (i - static_cast<int>(k_));
  }
  return FieldElement(static_cast<std::uint32_t>(product));
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero();
  if (tables_) {
    const std::uint32_t l = tables_->log[a.bits];
    return tables_->exp[static_cast<std::uint32_t>(group_order()) - l];
  }
  // a^(2^k - 2) = a^-1 in the multiplicative group.
  return pow(a, static_cast<std::int64_t>(group_order()) - 1);
}

FieldElement FieldContext::pow(FieldElement a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw DivisionByZero();
    return e == 0 ? FieldElement::one() : FieldElement::zero();
  }
  const auto order = static_cast<std::int64_t>(group_order());
  std::int64_t reduced = e % order;
  if (reduced < 0) reduced += order;
  if (tables_) {
    const std::uint64_t l = (std::uint64_t{tables_->log[a.bits]} * static_cast<std::uint64_t>(reduced)) %
                            group_order();
    return tables_->exp[l];
  }
  FieldElement result = FieldElement::one();
  FieldElement base = a;
  for (auto n = static_cast<std::uint64_t>(reduced); n != 0; n >>= 1) {
    if (n & 1) result = mul_carryless(result, base);
    base = mul_carryless(base, base);
  }
  return result;
}

std::uint64_t multiplicative_order(const FieldContext& ctx, FieldElement a) {
  if (a.is_zero()) throw DivisionByZero();
  std::uint64_t order = ctx.group_order();
  for (std::uint64_t p : prime_factors(ctx.group_order())) {
    while (order % p == 0 && ctx.pow(a, static_cast<std::int64_t>(order / p)) == FieldElement::one())
      order /= p;
  }
  return order;
}

FieldElement find_generator(const FieldContext& ctx) {
  const std::uint64_t order = ctx.group_order();
  const auto factors = prime_factors(order);
  for (std::uint64_t candidate = 1; candidate < ctx.size(); ++candidate) {
    const FieldElement g(static_cast<std::uint32_t>(candidate));
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (ctx.pow(g, static_cast<std::int64_t>(order / p)) == FieldElement::one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  // Unreachable: the multiplicative group of a finite field is cyclic.
  throw Error("no generator found");
}

}  // namespace detsum
