#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2lab/families.hpp"
#include "gl2lab/matrix_group.hpp"

namespace gl2lab {

enum class ImageLabel { Borel, SplitCartan, SplitNormalizer, NonsplitCartan, NonsplitNormalizer, Full };

inline constexpr ImageLabel kAllImageLabels[] = {ImageLabel::Borel,          ImageLabel::SplitCartan,
                                                 ImageLabel::SplitNormalizer, ImageLabel::NonsplitCartan,
                                                 ImageLabel::NonsplitNormalizer, ImageLabel::Full};

/// "borel", "split-cartan", "split-normalizer", "nonsplit-cartan",
/// "nonsplit-normalizer", "full".
std::string to_token(ImageLabel label);

/// The standard family a label refers to (Full maps to GL2).
FamilyTag family_of(ImageLabel label);

struct LabelWitness {
  ImageLabel label;
  /// m with m^-1 G m inside standard_group(family_of(label), l).
  Mat2 conjugator;
};

struct Classification {
  std::vector<LabelWitness> labels;  // in kAllImageLabels order

  bool has(ImageLabel label) const noexcept;
  std::optional<Mat2> conjugator(ImageLabel label) const;
  std::vector<std::string> tokens() const;
};

/// Labels G by its fixed and stabilized points on the projective line over
/// F_l and over F_{l^2}:
///   Borel              a common fixed F_l-point
///   SplitCartan        two distinct fixed F_l-points
///   SplitNormalizer    a stabilized pair of distinct F_l-points
///   NonsplitCartan     a fixed point outside P^1(F_l)
///   NonsplitNormalizer a stabilized Frobenius-conjugate pair of such points
///   Full               G = GL_2(l)
/// Every returned conjugator is checked by re-containment before returning.
/// Throws InvalidModulus unless l is an odd prime.
Classification classify(const MatrixGroup& g);

}  // namespace gl2lab
