#include "gl2lab/residue.hpp"

#include <limits>
#include <string>

#include "gl2lab/error.hpp"

namespace gl2lab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t n) {
  if (n < 2 || n > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidModulus, "modulus must lie in [2, 65535], got " + std::to_string(n));
  }
  n_ = static_cast<std::uint32_t>(n);
  prime_ = gl2lab::is_prime(n);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Residue reduce(std::int64_t x, std::uint32_t n) noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  return static_cast<Residue>(r);
}

Residue mul_mod(Residue x, Residue y, std::uint32_t n) noexcept {
  return static_cast<Residue>((static_cast<std::uint64_t>(x) * y) % n);
}

Residue pow_mod(Residue x, std::uint64_t e, std::uint32_t n) noexcept {
  std::uint64_t result = 1 % n;
  std::uint64_t base = x % n;
  while (e > 0) {
    if (e & 1U) result = (result * base) % n;
    base = (base * base) % n;
    e >>= 1U;
  }
  return static_cast<Residue>(result);
}

Residue inv_mod(Residue x, std::uint32_t n) {
  std::int64_t old_r = x % n, r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && n != 1) {
    throw Error(ErrorCode::NotAUnit, std::to_string(x) + " is not a unit mod " + std::to_string(n));
  }
  return reduce(old_s, n);
}

std::uint64_t multiplicative_order(Residue x, std::uint32_t n) {
  if (gcd(x % n, n) != 1) {
    throw Error(ErrorCode::NotAUnit, std::to_string(x) + " is not a unit mod " + std::to_string(n));
  }
  std::uint64_t k = 1;
  Residue y = x % n;
  while (y != 1 % n) {
    y = mul_mod(y, x, n);
    ++k;
  }
  return k;
}

Residue least_generator(std::uint32_t l) {
  if (l < 3 || !is_prime(l)) {
    throw Error(ErrorCode::InvalidModulus, "least_generator needs a prime >= 3, got " + std::to_string(l));
  }
  const auto factors = prime_factors(l - 1);
  for (Residue g = 2; g < l; ++g) {
    bool generates = true;
    for (const auto p : factors) {
      if (pow_mod(g, (l - 1) / p, l) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw Error(ErrorCode::Internal, "no generator found mod " + std::to_string(l));
}

std::vector<Residue> sqrt_mod(Residue x, std::uint32_t l) {
  std::vector<Residue> roots;
  const Residue target = x % l;
  for (Residue y = 0; y < l; ++y) {
    if (mul_mod(y, y, l) == target) roots.push_back(y);
  }
  return roots;
}

bool is_eth_power(Residue x, std::uint64_t e, std::uint32_t l) {
  if (x % l == 0) {
    throw Error(ErrorCode::NotAUnit, "is_eth_power needs a unit mod " + std::to_string(l));
  }
  if (e == 0) return x % l == 1;
  const std::uint64_t g = gcd(e, l - 1);
  return pow_mod(x, (l - 1) / g, l) == 1;
}

bool minus_one_is_eth_power_closed_form(std::uint64_t e, std::uint32_t l) {
  if (l == 2) return true;
  const bool l3mod4 = l % 4 == 3;
  const bool l5mod8 = l % 8 == 5;
  if ((e == 2 || e == 4 || e == 6) && l3mod4) return false;
  if (e == 4 && l5mod8) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) noexcept {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
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

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return primes;
}

BigInt product_of_primes(std::span<const std::uint64_t> primes) {
  BigInt product = 1;
  for (const auto p : primes) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    product *= p;
  }
  return product;
}

BigInt product_of_primes_up_to(std::uint64_t bound) {
  const auto primes = primes_up_to(bound);
  return product_of_primes(primes);
}

PrimePower as_prime_power(std::uint64_t n) noexcept {
  const auto factors = prime_factors(n);
  if (factors.size() != 1) return {};
  PrimePower pp{static_cast<std::uint32_t>(factors.front()), 0};
  while (n > 1) {
    n /= factors.front();
    ++pp.exponent;
  }
  return pp;
}

}  // namespace gl2lab
