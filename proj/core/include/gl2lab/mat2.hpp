#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "gl2lab/quad_ext.hpp"
#include "gl2lab/residue.hpp"

namespace gl2lab {

/// A 2x2 matrix over Z/nZ, row-major: [[a, b], [c, d]]. Entries are always
/// stored reduced into [0, n), so equality and ordering are field-wise.
struct Mat2 {
  std::uint32_t n = 2;
  Residue a = 1;
  Residue b = 0;
  Residue c = 0;
  Residue d = 1;

  static Mat2 make(std::uint32_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) noexcept {
    return Mat2{n, reduce(a, n), reduce(b, n), reduce(c, n), reduce(d, n)};
  }
  static Mat2 identity(std::uint32_t n) noexcept { return Mat2{n, 1 % n, 0, 0, 1 % n}; }
  static Mat2 diag(std::uint32_t n, std::int64_t a, std::int64_t d) noexcept { return make(n, a, 0, 0, d); }
  static Mat2 scalar(std::uint32_t n, std::int64_t a) noexcept { return make(n, a, 0, 0, a); }

  Residue det() const noexcept {
    const std::uint64_t ad = static_cast<std::uint64_t>(a) * d % n;
    const std::uint64_t bc = static_cast<std::uint64_t>(b) * c % n;
    return static_cast<Residue>((ad + n - bc) % n);
  }
  Residue trace() const noexcept { return static_cast<Residue>((static_cast<std::uint64_t>(a) + d) % n); }
  bool is_invertible() const noexcept { return gcd(det(), n) == 1; }
  bool is_identity() const noexcept { return *this == identity(n); }
  bool is_upper_triangular() const noexcept { return c == 0; }
  bool is_diagonal() const noexcept { return b == 0 && c == 0; }
  bool is_antidiagonal() const noexcept { return a == 0 && d == 0; }

  /// Mixed-radix index ((a*n + b)*n + c)*n + d; ordering by code equals the
  /// lexicographic ordering of (a, b, c, d).
  std::uint64_t code() const noexcept {
    const std::uint64_t m = n;
    return ((static_cast<std::uint64_t>(a) * m + b) * m + c) * m + d;
  }
  static Mat2 from_code(std::uint32_t n, std::uint64_t code) noexcept {
    Mat2 m{n, 0, 0, 0, 0};
    m.d = static_cast<Residue>(code % n);
    code /= n;
    m.c = static_cast<Residue>(code % n);
    code /= n;
    m.b = static_cast<Residue>(code % n);
    m.a = static_cast<Residue>(code / n);
    return m;
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// [[1,1],[0,1]], the generator of the full shear group.
inline Mat2 shear(std::uint32_t n) noexcept { return Mat2::make(n, 1, 1, 0, 1); }
/// [[1,0],[0,-1]].
inline Mat2 reflection(std::uint32_t n) noexcept { return Mat2::make(n, 1, 0, 0, -1); }
/// [[0,1],[1,0]].
inline Mat2 coordinate_swap(std::uint32_t n) noexcept { return Mat2::make(n, 0, 1, 1, 0); }

/// Product without the modulus check; hot loops only.
inline Mat2 mul_same_modulus(const Mat2& x, const Mat2& y) noexcept {
  const std::uint64_t n = x.n;
  const auto dot = [n](std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
    return static_cast<Residue>((p * q + r * s) % n);
  };
  return Mat2{x.n, dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c),
              dot(x.c, y.b, x.d, y.d)};
}

/// Throws MismatchedModulus.
Mat2 mat_mul(const Mat2& x, const Mat2& y);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }

/// Throws SingularMatrix when det is not a unit.
Mat2 mat_inv(const Mat2& m);

Mat2 mat_pow(const Mat2& m, std::uint64_t e);

/// m^-1 * x * m.
Mat2 conjugate_by(const Mat2& x, const Mat2& m);

/// |GL_2(Z/nZ)|.
std::uint64_t gl2_order(std::uint32_t n);

/// Least k >= 1 with m^k = I. Throws SingularMatrix.
std::uint64_t element_order(const Mat2& m);

/// Roots of x^2 - tr(m) x + det(m) in F_l[sqrt eps], for an odd prime l.
/// Base-field roots come back ascending; a conjugate pair comes back as
/// (a + b sqrt eps, a - b sqrt eps) with 0 < b <= (l-1)/2.
std::array<QuadExtElem, 2> eigenvalues(const Mat2& m);

/// "[[a,b],[c,d]]".
std::string to_string(const Mat2& m);

/// Parses the "[[a,b],[c,d]]" literal (whitespace and negative entries
/// allowed). Throws ParseError.
Mat2 parse_mat2(std::string_view text, std::uint32_t n);

}  // namespace gl2lab

template <>
struct std::hash<gl2lab::Mat2> {
  std::size_t operator()(const gl2lab::Mat2& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.code() * 0x9E3779B97F4A7C15ULL + m.n);
  }
};
