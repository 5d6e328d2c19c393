#pragma once

#include <cstdint>
#include <string>

#include "gl2lab/mat2.hpp"
#include "gl2lab/matrix_group.hpp"

namespace gl2lab {

/// The named subgroups of GL_2(F_l).
class FamilyTag {
 public:
  enum class Kind {
    GL2,
    Borel,
    SplitCartan,
    SplitNormalizer,
    NonsplitCartan,
    NonsplitNormalizer,
    Gell,
    Scalars,
    SplitCartanPower,
  };

  constexpr FamilyTag(Kind kind) noexcept : kind_(kind) {}  // NOLINT(google-explicit-constructor)
  /// C_s(l)^e; throws UnsupportedFamily for e = 0.
  static FamilyTag split_cartan_power(std::uint32_t e);

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint32_t exponent() const noexcept { return exponent_; }

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

 private:
  constexpr FamilyTag(Kind kind, std::uint32_t e) noexcept : kind_(kind), exponent_(e) {}

  Kind kind_;
  std::uint32_t exponent_ = 1;
};

/// Short name used by the group-spec language: GL2, B, Cs, Ns, Cns, Nns,
/// Gell, Z, CsPow(e).
std::string family_name(const FamilyTag& tag);

/// The standard representative over F_l (l prime >= 3; l >= 5 for Gell).
/// C_ns(l) and everything built from it use eps = least_generator(l).
/// Throws InvalidModulus or UnsupportedFamily.
MatrixGroup standard_group(const FamilyTag& tag, std::uint32_t l);

/// Membership in the standard representative without building it.
bool family_contains(const FamilyTag& tag, const Mat2& m);

/// A generator of F_{l^2}^x as a C_ns(l) matrix [[a, b eps], [b, a]].
Mat2 nonsplit_cartan_generator(std::uint32_t l);

}  // namespace gl2lab
