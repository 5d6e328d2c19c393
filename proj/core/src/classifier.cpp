#include "gl2lab/classifier.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "gl2lab/error.hpp"
#include "gl2lab/quad_ext.hpp"
#include "gl2lab/torsion.hpp"

namespace gl2lab {

namespace {

// Points of a projective line held as indices, with a generator acting as a
// permutation. Orbits of size 1 and 2 under the generated group are read off
// a union-find over generator images.
struct PointOrbits {
  std::vector<std::size_t> root;
  std::vector<std::size_t> size;

  explicit PointOrbits(const std::vector<std::vector<std::size_t>>& perms, std::size_t points)
      : root(points), size(points, 0) {
    std::iota(root.begin(), root.end(), 0);
    for (const auto& perm : perms) {
      for (std::size_t i = 0; i < points; ++i) unite(i, perm[i]);
    }
    for (std::size_t i = 0; i < points; ++i) ++size[find(i)];
  }

  std::size_t find(std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) root[std::max(x, y)] = std::min(x, y);
  }
  std::size_t orbit_size(std::size_t x) { return size[find(x)]; }
};

// P^1(F_l): index x < l is [x : 1], index l is [1 : 0].
std::size_t rational_index(Residue x, Residue y, std::uint32_t l) {
  return y == 0 ? l : mul_mod(x, inv_mod(y, l), l);
}

TorsionVector rational_point(std::size_t i, std::uint32_t l) {
  return i == l ? TorsionVector{l, 1, 0} : TorsionVector{l, static_cast<Residue>(i), 1};
}

// Non-rational points [z : 1], z = x + y sqrt(eps) with y != 0.
std::size_t nonsplit_index(const QuadExtElem& z, std::uint32_t l) {
  return std::size_t{z.a()} * (l - 1) + (z.b() - 1);
}

QuadExtElem nonsplit_point(std::size_t i, std::uint32_t l) {
  return QuadExtElem::make(static_cast<Residue>(i / (l - 1)), static_cast<Residue>(i % (l - 1) + 1), l);
}

QuadExtElem mobius(const Mat2& m, const QuadExtElem& z) {
  const std::uint32_t l = m.n;
  const auto num = QuadExtElem::base(m.a, l) * z + QuadExtElem::base(m.b, l);
  const auto den = QuadExtElem::base(m.c, l) * z + QuadExtElem::base(m.d, l);
  return num * inverse(den);
}

Mat2 columns(const TorsionVector& u, const TorsionVector& v) { return Mat2::make(u.n, u.x, v.x, u.y, v.y); }

// A second column completing v to a basis.
TorsionVector complement(const TorsionVector& v) {
  return v.y == 0 ? TorsionVector{v.n, 0, 1} : TorsionVector{v.n, 1, 0};
}

// [[y, x], [0, 1]] sends sqrt(eps) to z = x + y sqrt(eps).
Mat2 nonsplit_conjugator(const QuadExtElem& z) { return Mat2::make(z.prime(), z.b(), z.a(), 0, 1); }

}  // namespace

std::string to_token(ImageLabel label) {
  switch (label) {
    case ImageLabel::Borel: return "borel";
    case ImageLabel::SplitCartan: return "split-cartan";
    case ImageLabel::SplitNormalizer: return "split-normalizer";
    case ImageLabel::NonsplitCartan: return "nonsplit-cartan";
    case ImageLabel::NonsplitNormalizer: return "nonsplit-normalizer";
    case ImageLabel::Full: return "full";
  }
  return "?";
}

FamilyTag family_of(ImageLabel label) {
  switch (label) {
    case ImageLabel::Borel: return FamilyTag::Kind::Borel;
    case ImageLabel::SplitCartan: return FamilyTag::Kind::SplitCartan;
    case ImageLabel::SplitNormalizer: return FamilyTag::Kind::SplitNormalizer;
    case ImageLabel::NonsplitCartan: return FamilyTag::Kind::NonsplitCartan;
    case ImageLabel::NonsplitNormalizer: return FamilyTag::Kind::NonsplitNormalizer;
    case ImageLabel::Full: return FamilyTag::Kind::GL2;
  }
  return FamilyTag::Kind::GL2;
}

bool Classification::has(ImageLabel label) const noexcept {
  return std::any_of(labels.begin(), labels.end(), [&](const LabelWitness& w) { return w.label == label; });
}

std::optional<Mat2> Classification::conjugator(ImageLabel label) const {
  for (const auto& w : labels) {
    if (w.label == label) return w.conjugator;
  }
  return std::nullopt;
}

std::vector<std::string> Classification::tokens() const {
  std::vector<std::string> out;
  for (const auto& w : labels) out.push_back(to_token(w.label));
  return out;
}

Classification classify(const MatrixGroup& g) {
  const std::uint32_t l = g.modulus();
  if (l < 3 || !is_prime(l)) {
    throw Error(ErrorCode::InvalidModulus, fmt::format("classification needs an odd prime modulus, got {}", l));
  }
  const auto& gens = g.generators();

  std::vector<std::vector<std::size_t>> rational_perms;
  std::vector<std::vector<std::size_t>> nonsplit_perms;
  const std::size_t rational_count = l + 1;
  const std::size_t nonsplit_count = std::size_t{l} * (l - 1);
  for (const auto& m : gens) {
    std::vector<std::size_t> perm(rational_count);
    for (std::size_t i = 0; i < rational_count; ++i) {
      const auto image = apply(m, rational_point(i, l));
      perm[i] = rational_index(image.x, image.y, l);
    }
    rational_perms.push_back(std::move(perm));
    std::vector<std::size_t> nperm(nonsplit_count);
    for (std::size_t i = 0; i < nonsplit_count; ++i) nperm[i] = nonsplit_index(mobius(m, nonsplit_point(i, l)), l);
    nonsplit_perms.push_back(std::move(nperm));
  }
  PointOrbits rational(rational_perms, rational_count);
  PointOrbits nonsplit(nonsplit_perms, nonsplit_count);

  std::vector<LabelWitness> found;
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < rational_count; ++i) {
    if (rational.orbit_size(i) == 1) fixed.push_back(i);
  }
  if (!fixed.empty()) {
    const auto v = rational_point(fixed[0], l);
    found.push_back({ImageLabel::Borel, columns(v, complement(v))});
  }
  if (fixed.size() >= 2) {
    found.push_back({ImageLabel::SplitCartan, columns(rational_point(fixed[0], l), rational_point(fixed[1], l))});
  }
  // Least stabilized pair: two fixed points, or an orbit of size 2.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < rational_count && !pair; ++i) {
    for (std::size_t j = i + 1; j < rational_count; ++j) {
      const bool both_fixed = rational.orbit_size(i) == 1 && rational.orbit_size(j) == 1;
      const bool swapped = rational.orbit_size(i) == 2 && rational.find(i) == rational.find(j);
      if (both_fixed || swapped) {
        pair.emplace(i, j);
        break;
      }
    }
  }
  if (pair) {
    found.push_back(
        {ImageLabel::SplitNormalizer, columns(rational_point(pair->first, l), rational_point(pair->second, l))});
  }

  std::optional<QuadExtElem> nonsplit_fixed;
  std::optional<QuadExtElem> conjugate_pair;
  for (std::size_t i = 0; i < nonsplit_count; ++i) {
    const auto size = nonsplit.orbit_size(i);
    const auto z = nonsplit_point(i, l);
    if (size == 1 && !nonsplit_fixed) nonsplit_fixed = z;
    if (!conjugate_pair && (size == 1 || (size == 2 && nonsplit.find(i) == nonsplit.find(nonsplit_index(frobenius(z), l))))) {
      conjugate_pair = z;
    }
  }
  if (nonsplit_fixed) found.push_back({ImageLabel::NonsplitCartan, nonsplit_conjugator(*nonsplit_fixed)});
  if (conjugate_pair) found.push_back({ImageLabel::NonsplitNormalizer, nonsplit_conjugator(*conjugate_pair)});
  if (g.order() == gl2_order(l)) found.push_back({ImageLabel::Full, Mat2::identity(l)});

  for (const auto& w : found) {
    const auto tag = family_of(w.label);
    for (const auto& m : gens) {
      if (!family_contains(tag, conjugate_by(m, w.conjugator))) {
        throw Error(ErrorCode::Internal, fmt::format("conjugator {} for label {} failed re-containment",
                                                     to_string(w.conjugator), to_token(w.label)));
      }
    }
  }
  return Classification{std::move(found)};
}

}  // namespace gl2lab
