#include <doctest.h>

#include <random>
#include <set>

#include "detsum/errors.hpp"
#include "detsum/gf2k.hpp"
#include "support.hpp"

using namespace detsum;
using detsum::testing::random_element;

TEST_CASE("reduction polynomials are irreducible of the right degree") {
  for (unsigned k = 1; k <= 32; ++k) {
    const std::uint64_t poly = default_reduction_poly(k);
    CHECK(std::bit_width(poly) == static_cast<int>(k) + 1);
    CHECK(is_irreducible(poly));
  }
  CHECK(default_reduction_poly(4) == 0x13);
  CHECK(default_reduction_poly(8) == 0x11b);
  CHECK_FALSE(is_irreducible(0x15));  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
}

TEST_CASE("lexicographically smallest irreducible, checked by trial division for small k") {
  auto reducible = [](std::uint64_t p) {
    const int deg = static_cast<int>(std::bit_width(p)) - 1;
    for (std::uint64_t d = 2; static_cast<int>(std::bit_width(d)) - 1 <= deg / 2; ++d) {
      // Polynomial remainder of p by d over GF(2).
      std::uint64_t r = p;
      const int dd = static_cast<int>(std::bit_width(d)) - 1;
      while (static_cast<int>(std::bit_width(r)) - 1 >= dd) r ^= d << (static_cast<int>(std::bit_width(r)) - 1 - dd);
      if (r == 0) return true;
    }
    return false;
  };
  CHECK(default_reduction_poly(1) == 0x3);
  for (unsigned k = 2; k <= 12; ++k) {
    std::uint64_t first = 0;
    for (std::uint64_t p = std::uint64_t{1} << k; p < (std::uint64_t{2} << k); ++p)
      if (!reducible(p)) {
        first = p;
        break;
      }
    CHECK(default_reduction_poly(k) == first);
  }
}

TEST_CASE("addition is xor") {
  const FieldContext f(4);
  CHECK(f.add(FieldElement(0x5), FieldElement(0x5)) == FieldElement(0x0));
  CHECK(f.add(FieldElement(0x3), FieldElement(0x0)) == FieldElement(0x3));
  CHECK(f.add(FieldElement(0x6), FieldElement(0x3)) == FieldElement(0x5));
}

TEST_CASE("multiplication examples over x^4 + x + 1") {
  const FieldContext f(4, 0x13);
  CHECK(f.mul(FieldElement(0x2), FieldElement(0x9)) == FieldElement(0x1));
  for (std::uint32_t a = 0; a < 16; ++a) {
    CHECK(f.mul(FieldElement(a), FieldElement::one()) == FieldElement(a));
    CHECK(f.mul(FieldElement::zero(), FieldElement(a)) == FieldElement::zero());
  }
}

TEST_CASE("table and carryless multiplication agree") {
  for (unsigned k : {3u, 8u, 12u, 16u}) {
    const FieldContext f(k);
    REQUIRE(f.has_tables());
    std::mt19937_64 rng(k);
    for (int i = 0; i < 20000; ++i) {
      const FieldElement a = random_element(f, rng), b = random_element(f, rng);
      CHECK(f.mul(a, b) == f.mul_carryless(a, b));
    }
  }
}

TEST_CASE("inverse") {
  const FieldContext f(4, 0x13);
  CHECK(f.inv(FieldElement(0x2)) == FieldElement(0x9));
  CHECK(f.inv(FieldElement(0x1)) == FieldElement(0x1));
  CHECK_THROWS_AS(f.inv(FieldElement(0x0)), DivisionByZero);
  for (unsigned k : {1u, 5u, 17u, 32u}) {
    const FieldContext g(k);
    std::mt19937_64 rng(k);
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = testing::random_nonzero(g, rng);
      CHECK(g.mul(a, g.inv(a)) == FieldElement::one());
    }
  }
}

TEST_CASE("powers") {
  const FieldContext f(4, 0x13);
  CHECK(f.pow(FieldElement(0x2), 15) == FieldElement(0x1));
  CHECK(f.pow(FieldElement(0x2), 1) == FieldElement(0x2));
  for (std::uint32_t a = 1; a < 16; ++a) CHECK(f.pow(FieldElement(a), 0) == FieldElement::one());
  CHECK(f.pow(FieldElement(0x2), -1) == FieldElement(0x9));
  CHECK(f.pow(FieldElement::zero(), 3) == FieldElement::zero());
  CHECK_THROWS_AS(f.pow(FieldElement::zero(), -1), DivisionByZero);
  const FieldContext big(29);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = testing::random_nonzero(big, rng);
    const std::int64_t e = static_cast<std::int64_t>(rng() % 1000);
    FieldElement naive = FieldElement::one();
    for (std::int64_t j = 0; j < e; ++j) naive = big.mul(naive, a);
    CHECK(big.pow(a, e) == naive);
    CHECK(big.mul(big.pow(a, e), big.pow(a, -e)) == FieldElement::one());
  }
}

TEST_CASE("generators") {
  CHECK(FieldContext(4, 0x13).generator() == FieldElement(0x2));
  CHECK(FieldContext(1).generator() == FieldElement(0x1));
  const FieldContext f8(8, 0x11b);
  CHECK(multiplicative_order(f8, f8.generator()) == 255);
  for (unsigned k = 1; k <= 32; ++k) {
    const FieldContext f(k);
    CHECK(multiplicative_order(f, f.generator()) == f.group_order());
  }
}

TEST_CASE("powers of the generator enumerate every nonzero element, k <= 12") {
  for (unsigned k = 1; k <= 12; ++k) {
    const FieldContext f(k);
    std::vector<char> seen(f.size(), 0);
    FieldElement x = FieldElement::one();
    for (std::uint64_t l = 0; l < f.group_order(); ++l) {
      CHECK_FALSE(seen[x.bits]);
      seen[x.bits] = 1;
      x = f.mul(x, f.generator());
    }
    CHECK(x == FieldElement::one());
    CHECK(seen[0] == 0);
  }
}

TEST_CASE("field sizing") {
  CHECK(bits_exceeding(0) == 1);
  CHECK(bits_exceeding(1) == 1);
  CHECK(bits_exceeding(2) == 2);
  CHECK(bits_exceeding(255) == 8);
  CHECK(bits_exceeding(256) == 9);
  CHECK_THROWS(FieldContext(0));
  CHECK_THROWS(FieldContext(33));
  CHECK_THROWS(FieldContext(4, 0x15));
  CHECK_THROWS(FieldContext(4).element(16));
}
