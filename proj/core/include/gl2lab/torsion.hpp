#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2lab/mat2.hpp"
#include "gl2lab/residue.hpp"

namespace gl2lab {

/// A point x*e1 + y*e2 of (Z/nZ)^2.
struct TorsionVector {
  std::uint32_t n = 2;
  Residue x = 0;
  Residue y = 0;

  static TorsionVector make(std::uint32_t n, std::int64_t x, std::int64_t y) noexcept {
    return TorsionVector{n, reduce(x, n), reduce(y, n)};
  }
  static TorsionVector e1(std::uint32_t n) noexcept { return make(n, 1, 0); }
  static TorsionVector e2(std::uint32_t n) noexcept { return make(n, 0, 1); }

  bool is_zero() const noexcept { return x == 0 && y == 0; }
  TorsionVector scaled(std::uint64_t k) const noexcept {
    return TorsionVector{n, static_cast<Residue>(x * k % n), static_cast<Residue>(y * k % n)};
  }

  friend bool operator==(const TorsionVector&, const TorsionVector&) = default;
  friend auto operator<=>(const TorsionVector&, const TorsionVector&) = default;
};

/// m * v for a column vector v.
TorsionVector apply(const Mat2& m, const TorsionVector& v);

/// Least k >= 1 with k*v = 0, i.e. n / gcd(x, y, n). Throws ZeroVector.
std::uint64_t vector_order(const TorsionVector& v);

/// Ordering on generators used for canonicalization: by y, then by x. At a
/// prime level this makes <e1> = (1,0) and C_k = (k,1) the canonical forms.
inline bool canonical_less(const TorsionVector& u, const TorsionVector& v) noexcept {
  return u.y != v.y ? u.y < v.y : u.x < v.x;
}

/// A nontrivial cyclic submodule <g> of (Z/nZ)^2, held by its canonical
/// generator: the canonical_less-least element that generates it. Two values
/// are equal iff they are the same submodule.
struct CyclicSubmodule {
  TorsionVector generator;
  std::uint64_t order = 0;

  std::uint32_t modulus() const noexcept { return generator.n; }

  friend bool operator==(const CyclicSubmodule& p, const CyclicSubmodule& q) noexcept {
    return p.generator == q.generator;
  }
  friend bool operator<(const CyclicSubmodule& p, const CyclicSubmodule& q) noexcept {
    return canonical_less(p.generator, q.generator);
  }
};

/// Throws ZeroVector.
CyclicSubmodule canonical_cyclic(const TorsionVector& v);

/// All nontrivial cyclic submodules, or those of order d, sorted by
/// canonical generator. Throws InvalidDivisor if d does not divide n.
std::vector<CyclicSubmodule> enumerate_cyclic(std::uint32_t n, std::optional<std::uint32_t> order = std::nullopt);

/// Canonical form of <m*g>. Throws SingularMatrix or MismatchedModulus.
CyclicSubmodule act_on_cyclic(const Mat2& m, const CyclicSubmodule& c);

/// "(x,y)".
std::string to_string(const TorsionVector& v);

/// "<(x,y)> mod n".
std::string to_string(const CyclicSubmodule& c);

/// Prime-level alias: "C_k" for <(k,1)>, "C_inf" for <e1>; falls back to
/// to_string for other moduli or shapes.
std::string display_name(const CyclicSubmodule& c);

}  // namespace gl2lab
