#include "gl2lab/families.hpp"

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

namespace {

void require_prime(std::uint32_t l) {
  if (l < 3 || !is_prime(l)) {
    throw Error(ErrorCode::InvalidModulus, fmt::format("standard families need a prime l >= 3, got {}", l));
  }
}

bool in_nonsplit_cartan(const Mat2& m, Residue eps) {
  return m.a == m.d && m.b == mul_mod(m.c, eps, m.n) && m.is_invertible();
}

bool is_cube_in_nonsplit_cartan(const Mat2& m) {
  const std::uint64_t l = m.n;
  const std::uint64_t group_order = l * l - 1;
  return mat_pow(m, group_order / gcd(3, group_order)).is_identity();
}

}  // namespace

FamilyTag FamilyTag::split_cartan_power(std::uint32_t e) {
  if (e == 0) throw Error(ErrorCode::UnsupportedFamily, "CsPow needs e >= 1");
  return FamilyTag(Kind::SplitCartanPower, e);
}

std::string family_name(const FamilyTag& tag) {
  switch (tag.kind()) {
    case FamilyTag::Kind::GL2: return "GL2";
    case FamilyTag::Kind::Borel: return "B";
    case FamilyTag::Kind::SplitCartan: return "Cs";
    case FamilyTag::Kind::SplitNormalizer: return "Ns";
    case FamilyTag::Kind::NonsplitCartan: return "Cns";
    case FamilyTag::Kind::NonsplitNormalizer: return "Nns";
    case FamilyTag::Kind::Gell: return "Gell";
    case FamilyTag::Kind::Scalars: return "Z";
    case FamilyTag::Kind::SplitCartanPower: return fmt::format("CsPow(e={})", tag.exponent());
  }
  return "?";
}

Mat2 nonsplit_cartan_generator(std::uint32_t l) {
  require_prime(l);
  const Residue eps = least_generator(l);
  const std::uint64_t group_order = static_cast<std::uint64_t>(l) * l - 1;
  const auto factors = prime_factors(group_order);
  for (Residue a = 0; a < l; ++a) {
    for (Residue b = 1; b < l; ++b) {
      const Mat2 z = Mat2::make(l, a, static_cast<std::int64_t>(b) * eps, b, a);
      bool primitive = true;
      for (const auto p : factors) {
        if (mat_pow(z, group_order / p).is_identity()) {
          primitive = false;
          break;
        }
      }
      if (primitive) return z;
    }
  }
  throw Error(ErrorCode::Internal, fmt::format("no generator of F_{}^2 found", l));
}

MatrixGroup standard_group(const FamilyTag& tag, std::uint32_t l) {
  require_prime(l);
  const Residue g = least_generator(l);
  const Mat2 left = Mat2::diag(l, g, 1);
  const Mat2 right = Mat2::diag(l, 1, g);
  switch (tag.kind()) {
    case FamilyTag::Kind::GL2:
      return MatrixGroup::generate(l, {left, shear(l), coordinate_swap(l)});
    case FamilyTag::Kind::Borel:
      return MatrixGroup::generate(l, {left, right, shear(l)});
    case FamilyTag::Kind::SplitCartan:
      return MatrixGroup::generate(l, {left, right});
    case FamilyTag::Kind::SplitNormalizer:
      return MatrixGroup::generate(l, {left, right, coordinate_swap(l)});
    case FamilyTag::Kind::NonsplitCartan:
      return MatrixGroup::generate(l, {nonsplit_cartan_generator(l)});
    case FamilyTag::Kind::NonsplitNormalizer:
      return MatrixGroup::generate(l, {nonsplit_cartan_generator(l), reflection(l)});
    case FamilyTag::Kind::Gell: {
      if (l < 5) throw Error(ErrorCode::UnsupportedFamily, fmt::format("G(l) needs l >= 5, got {}", l));
      const Mat2 z = nonsplit_cartan_generator(l);
      return MatrixGroup::generate(l, {reflection(l), mat_pow(z, 3)});
    }
    case FamilyTag::Kind::Scalars:
      return MatrixGroup::generate(l, {Mat2::scalar(l, g)});
    case FamilyTag::Kind::SplitCartanPower:
      return MatrixGroup::generate(l, split_cartan_power_generators(l, tag.exponent()));
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown family");
}

bool family_contains(const FamilyTag& tag, const Mat2& m) {
  const std::uint32_t l = m.n;
  require_prime(l);
  if (!m.is_invertible()) return false;
  switch (tag.kind()) {
    case FamilyTag::Kind::GL2: return true;
    case FamilyTag::Kind::Borel: return m.is_upper_triangular();
    case FamilyTag::Kind::SplitCartan: return m.is_diagonal();
    case FamilyTag::Kind::SplitNormalizer: return m.is_diagonal() || m.is_antidiagonal();
    case FamilyTag::Kind::NonsplitCartan: return in_nonsplit_cartan(m, least_generator(l));
    case FamilyTag::Kind::NonsplitNormalizer: {
      const Residue eps = least_generator(l);
      return in_nonsplit_cartan(m, eps) || in_nonsplit_cartan(mul_same_modulus(reflection(l), m), eps);
    }
    case FamilyTag::Kind::Gell: {
      if (l < 5) throw Error(ErrorCode::UnsupportedFamily, fmt::format("G(l) needs l >= 5, got {}", l));
      const Residue eps = least_generator(l);
      if (in_nonsplit_cartan(m, eps)) return is_cube_in_nonsplit_cartan(m);
      const Mat2 r = mul_same_modulus(reflection(l), m);
      return in_nonsplit_cartan(r, eps) && is_cube_in_nonsplit_cartan(r);
    }
    case FamilyTag::Kind::Scalars: return m.is_diagonal() && m.a == m.d;
    case FamilyTag::Kind::SplitCartanPower:
      return m.is_diagonal() && is_eth_power(m.a, tag.exponent(), l) && is_eth_power(m.d, tag.exponent(), l);
  }
  return false;
}

}  // namespace gl2lab
