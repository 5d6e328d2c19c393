#include "gl2lab/torsion.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

TorsionVector apply(const Mat2& m, const TorsionVector& v) {
  if (m.n != v.n) {
    throw Error(ErrorCode::MismatchedModulus, fmt::format("matrix mod {} on vector mod {}", m.n, v.n));
  }
  const std::uint64_t n = m.n;
  return TorsionVector{m.n, static_cast<Residue>((static_cast<std::uint64_t>(m.a) * v.x + static_cast<std::uint64_t>(m.b) * v.y) % n),
                       static_cast<Residue>((static_cast<std::uint64_t>(m.c) * v.x + static_cast<std::uint64_t>(m.d) * v.y) % n)};
}

std::uint64_t vector_order(const TorsionVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "the zero vector has no cyclic order");
  return v.n / gcd(gcd(v.x, v.y), v.n);
}

CyclicSubmodule canonical_cyclic(const TorsionVector& v) {
  const std::uint64_t order = vector_order(v);
  TorsionVector best = v;
  for (std::uint64_t k = 2; k < order; ++k) {
    if (gcd(k, order) != 1) continue;
    const TorsionVector w = v.scaled(k);
    if (canonical_less(w, best)) best = w;
  }
  return CyclicSubmodule{best, order};
}

namespace {

// Canonical generators of the cyclic subgroups of order exactly d in
// (Z/dZ)^2, i.e. of the points of P^1(Z/dZ).
std::vector<TorsionVector> canonical_primitive_forms(std::uint32_t d) {
  std::vector<TorsionVector> forms;
  forms.push_back(TorsionVector{d, 1 % d, 0});
  for (const auto g64 : divisors(d)) {
    const auto g = static_cast<std::uint32_t>(g64);
    if (g == d) continue;
    // Generators keeping y = g are u*v with u a unit, u = 1 mod d/g.
    std::vector<std::uint32_t> stabilizer;
    for (std::uint32_t t = 0; t < g; ++t) {
      const std::uint32_t u = 1 + t * (d / g);
      if (gcd(u, d) == 1) stabilizer.push_back(u % d);
    }
    for (std::uint32_t x = 0; x < d; ++x) {
      if (gcd(x, g) != 1) continue;
      const bool minimal = std::all_of(stabilizer.begin(), stabilizer.end(), [&](std::uint32_t u) {
        return static_cast<std::uint64_t>(u) * x % d >= x;
      });
      if (minimal) forms.push_back(TorsionVector{d, x, g});
    }
  }
  return forms;
}

}  // namespace

std::vector<CyclicSubmodule> enumerate_cyclic(std::uint32_t n, std::optional<std::uint32_t> order) {
  if (n < 2) throw Error(ErrorCode::InvalidModulus, "modulus must be >= 2");
  std::vector<std::uint32_t> orders;
  if (order) {
    if (*order == 0 || n % *order != 0) {
      throw Error(ErrorCode::InvalidDivisor, fmt::format("{} does not divide {}", *order, n));
    }
    if (*order >= 2) orders.push_back(*order);
  } else {
    for (const auto d : divisors(n)) {
      if (d >= 2) orders.push_back(static_cast<std::uint32_t>(d));
    }
  }
  std::vector<CyclicSubmodule> result;
  for (const auto d : orders) {
    const std::uint32_t scale = n / d;
    for (const auto& f : canonical_primitive_forms(d)) {
      result.push_back(CyclicSubmodule{TorsionVector{n, f.x * scale, f.y * scale}, d});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

CyclicSubmodule act_on_cyclic(const Mat2& m, const CyclicSubmodule& c) {
  if (m.n != c.modulus()) {
    throw Error(ErrorCode::MismatchedModulus, fmt::format("matrix mod {} on submodule mod {}", m.n, c.modulus()));
  }
  if (!m.is_invertible()) throw Error(ErrorCode::SingularMatrix, to_string(m) + " is not invertible");
  return canonical_cyclic(apply(m, c.generator));
}

std::string to_string(const TorsionVector& v) { return fmt::format("({},{})", v.x, v.y); }

std::string to_string(const CyclicSubmodule& c) {
  return fmt::format("<{}> mod {}", to_string(c.generator), c.modulus());
}

std::string display_name(const CyclicSubmodule& c) {
  const auto& g = c.generator;
  if (is_prime(g.n)) {
    if (g.y == 1) return fmt::format("C_{}", g.x);
    if (g.y == 0 && g.x == 1) return "C_inf";
  }
  return to_string(c);
}

}  // namespace gl2lab
