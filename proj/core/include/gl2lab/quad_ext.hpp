#pragma once

#include <cstdint>
#include <string>

#include "gl2lab/residue.hpp"

namespace gl2lab {

/// An element a + b*sqrt(eps) of F_l[sqrt(eps)], where eps is always the
/// least generator of F_l^x. Elements with b = 0 are the embedded base field.
class QuadExtElem {
 public:
  /// Builds a + b*sqrt(eps) over F_l, recomputing eps = least_generator(l).
  static QuadExtElem make(std::int64_t a, std::int64_t b, std::uint32_t l);
  static QuadExtElem base(std::int64_t a, std::uint32_t l) { return make(a, 0, l); }
  static QuadExtElem sqrt_eps(std::uint32_t l) { return make(0, 1, l); }

  Residue a() const noexcept { return a_; }
  Residue b() const noexcept { return b_; }
  Residue epsilon() const noexcept { return eps_; }
  std::uint32_t prime() const noexcept { return l_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool in_base_field() const noexcept { return b_ == 0; }

  friend bool operator==(const QuadExtElem&, const QuadExtElem&) = default;

  /// Ordering used for deterministic output: (a, b).
  friend bool operator<(const QuadExtElem& x, const QuadExtElem& y) noexcept {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

 private:
  QuadExtElem(Residue a, Residue b, Residue eps, std::uint32_t l) : a_(a), b_(b), eps_(eps), l_(l) {}

  friend QuadExtElem add(const QuadExtElem&, const QuadExtElem&);
  friend QuadExtElem sub(const QuadExtElem&, const QuadExtElem&);
  friend QuadExtElem mul(const QuadExtElem&, const QuadExtElem&);
  friend QuadExtElem inverse(const QuadExtElem&);
  friend QuadExtElem frobenius(const QuadExtElem&);

  Residue a_;
  Residue b_;
  Residue eps_;
  std::uint32_t l_;
};

QuadExtElem add(const QuadExtElem& x, const QuadExtElem& y);
QuadExtElem sub(const QuadExtElem& x, const QuadExtElem& y);
QuadExtElem mul(const QuadExtElem& x, const QuadExtElem& y);
/// Throws ZeroInverse for x = 0.
QuadExtElem inverse(const QuadExtElem& x);
/// a + b*sqrt(eps) -> a - b*sqrt(eps).
QuadExtElem frobenius(const QuadExtElem& x);
/// a^2 - eps*b^2, an element of F_l.
Residue norm(const QuadExtElem& x);

inline QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) { return add(x, y); }
inline QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) { return sub(x, y); }
inline QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) { return mul(x, y); }

/// "a", "b*sqrt(eps)" or "a+b*sqrt(eps)" with eps written numerically.
std::string to_string(const QuadExtElem& x);

}  // namespace gl2lab
