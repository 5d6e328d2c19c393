#pragma once

// Arithmetic over Z/nZ and the number-theoretic helpers used by the
// group-level checks. Moduli are desk-scale (well below 2^16 in practice);
// all intermediate products are taken in 64 bits.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gl2lab {

using Residue = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n) noexcept;

// A modulus n >= 2 together with its primality, fixed at construction.
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);

  std::uint32_t value() const noexcept { return n_; }
  bool is_prime() const noexcept { return prime_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t n_;
  bool prime_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
Residue reduce(std::int64_t x, std::uint32_t n) noexcept;
Residue mul_mod(Residue x, Residue y, std::uint32_t n) noexcept;
Residue pow_mod(Residue x, std::uint64_t e, std::uint32_t n) noexcept;

/// Inverse of x modulo n. Throws NotAUnit when gcd(x, n) > 1.
Residue inv_mod(Residue x, std::uint32_t n);

/// Least k >= 1 with x^k = 1 mod n. Throws NotAUnit for non-units.
std::uint64_t multiplicative_order(Residue x, std::uint32_t n);

/// Smallest g >= 2 of multiplicative order l - 1. This is the epsilon that
/// fixes the nonsplit Cartan subgroup, so every caller recomputes it from l.
Residue least_generator(std::uint32_t l);

/// All square roots of x modulo the prime l, ascending (brute-force scan).
std::vector<Residue> sqrt_mod(Residue x, std::uint32_t l);

/// True iff x is an e'th power modulo the prime l.
bool is_eth_power(Residue x, std::uint64_t e, std::uint32_t l);

/// Closed-form answer for x = -1 and e in {1,2,3,4,6}: -1 is an e'th power
/// unless e in {2,4,6} and l = 3 mod 4, or e = 4 and l = 5 mod 8.
bool minus_one_is_eth_power_closed_form(std::uint64_t e, std::uint32_t l);

std::uint64_t euler_phi(std::uint64_t n) noexcept;

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Exact product of the given primes; throws NotPrime on composite input.
BigInt product_of_primes(std::span<const std::uint64_t> primes);

/// Product of every prime p <= bound.
BigInt product_of_primes_up_to(std::uint64_t bound);

/// If n = p^k with p prime and k >= 1, returns {p, k}; otherwise {0, 0}.
struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
};
PrimePower as_prime_power(std::uint64_t n) noexcept;

}  // namespace gl2lab
