#include <gtest/gtest.h>

#include "gl2lab/error.hpp"
#include "gl2lab/quad_ext.hpp"
#include "gl2lab/residue.hpp"
#include "oracle.hpp"

using namespace gl2lab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gl2lab::Error thrown";
  return ErrorCode::Internal;
}

}  // namespace

TEST(Residue, InverseExamples) {
  EXPECT_EQ(inv_mod(1, 9), 1u);
  EXPECT_EQ(inv_mod(2, 5), 3u);
  EXPECT_EQ(code_of([] { inv_mod(2, 4); }), ErrorCode::NotAUnit);
}

TEST(Residue, InverseMatchesScan) {
  for (std::uint32_t n = 2; n <= 60; ++n) {
    for (Residue x = 1; x < n; ++x) {
      if (!oracle::is_unit(x, n)) continue;
      EXPECT_EQ(inv_mod(x, n), static_cast<Residue>(oracle::inv(x, n))) << x << " mod " << n;
    }
  }
}

TEST(Residue, LeastGenerator) {
  EXPECT_EQ(least_generator(5), 2u);
  EXPECT_EQ(least_generator(7), 3u);
  EXPECT_EQ(least_generator(13), 2u);
  for (std::uint32_t l = 3; l < 400; ++l) {
    if (!oracle::prime(l)) continue;
    const Residue g = least_generator(l);
    // Brute force: g has order l - 1 and nothing smaller does.
    for (Residue h = 2; h <= g; ++h) {
      std::set<std::int64_t> powers;
      std::int64_t p = 1;
      for (std::uint32_t i = 0; i < l - 1; ++i) powers.insert(p = p * h % l);
      EXPECT_EQ(powers.size() == l - 1, h == g) << "l=" << l << " h=" << h;
    }
  }
}

TEST(Residue, SquareRoots) {
  EXPECT_EQ(sqrt_mod(0, 7), (std::vector<Residue>{0}));
  EXPECT_EQ(sqrt_mod(4, 7), (std::vector<Residue>{2, 5}));
  EXPECT_TRUE(sqrt_mod(3, 7).empty());
  for (std::uint32_t l : {3u, 5u, 11u, 13u, 17u, 101u}) {
    for (Residue x = 0; x < l; ++x) {
      std::vector<Residue> brute;
      for (Residue y = 0; y < l; ++y)
        if (std::uint64_t{y} * y % l == x) brute.push_back(y);
      EXPECT_EQ(sqrt_mod(x, l), brute) << x << " mod " << l;
    }
  }
}

TEST(Residue, EthPowers) {
  EXPECT_TRUE(is_eth_power(12, 2, 13));
  EXPECT_FALSE(is_eth_power(6, 2, 7));
  for (Residue x = 1; x < 11; ++x) EXPECT_TRUE(is_eth_power(x, 1, 11));
}

TEST(Residue, PrimeProducts) {
  EXPECT_EQ(product_of_primes(std::span<const std::uint64_t>{}), BigInt(1));
  const std::vector<std::uint64_t> orbit_primes{2, 3, 5, 7, 11, 13, 17, 37};
  EXPECT_EQ(product_of_primes(orbit_primes), BigInt(18888870));
  EXPECT_EQ(product_of_primes_up_to(7), BigInt(210));
  // Large enough to need more than 64 bits.
  EXPECT_EQ(product_of_primes_up_to(60).str(), "1922760350154212639070");
}

TEST(Residue, NumberTheoryHelpers) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(36), 12u);
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(as_prime_power(25).prime, 5u);
  EXPECT_EQ(as_prime_power(25).exponent, 2u);
  EXPECT_EQ(as_prime_power(12).prime, 0u);
  EXPECT_EQ(code_of([] { Modulus m(0); }), ErrorCode::InvalidModulus);
}

TEST(QuadExt, DefiningRelationAndFrobenius) {
  for (std::uint32_t l : {3u, 5u, 7u, 11u, 13u}) {
    const auto s = QuadExtElem::sqrt_eps(l);
    const auto sq = s * s;
    EXPECT_TRUE(sq.in_base_field());
    EXPECT_EQ(sq.a(), least_generator(l));
    const auto a = QuadExtElem::base(2, l);
    EXPECT_EQ(frobenius(a), a);
  }
  EXPECT_EQ(norm(QuadExtElem::make(1, 1, 5)), 4u);
}

TEST(QuadExt, FieldAxiomsExhaustive) {
  const std::uint32_t l = 7;
  for (std::int64_t a = 0; a < l; ++a) {
    for (std::int64_t b = 0; b < l; ++b) {
      const auto x = QuadExtElem::make(a, b, l);
      if (x.is_zero()) {
        EXPECT_EQ(code_of([&] { inverse(x); }), ErrorCode::ZeroInverse);
        continue;
      }
      const auto one = x * inverse(x);
      EXPECT_EQ(one, QuadExtElem::base(1, l));
      // Frobenius is x -> x^l.
      auto p = QuadExtElem::base(1, l);
      for (std::uint32_t i = 0; i < l; ++i) p = p * x;
      EXPECT_EQ(frobenius(x), p);
      EXPECT_EQ(norm(x), (x * frobenius(x)).a());
    }
  }
}
