#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gl2lab/mat2.hpp"

namespace gl2lab {

/// {det(g) : g in G} as a sorted list of units, and whether it is all of
/// (Z/nZ)^x.
struct DetImage {
  std::vector<Residue> values;
  bool surjective = false;

  friend bool operator==(const DetImage&, const DetImage&) = default;
};

/// A finite subgroup of GL_2(Z/nZ), stored with its generators and the full
/// element set sorted by (a, b, c, d). Immutable after construction; the
/// order, determinant image and minimal Cartan power are computed eagerly.
class MatrixGroup {
 public:
  /// Breadth-first closure of the generators. An empty list gives {I}.
  /// Throws SingularMatrix, MismatchedModulus, ClosureOverflow.
  static MatrixGroup generate(std::uint32_t n, std::span<const Mat2> generators);
  static MatrixGroup generate(std::uint32_t n, std::initializer_list<Mat2> generators) {
    return generate(n, std::span<const Mat2>(generators.begin(), generators.size()));
  }

  /// Wraps a set the caller already knows to be a subgroup, choosing a small
  /// generating set greedily. The input need not be sorted.
  static MatrixGroup from_subgroup_elements(std::uint32_t n, std::vector<Mat2> elements);

  std::uint32_t modulus() const noexcept { return n_; }
  const std::vector<Mat2>& generators() const noexcept { return generators_; }
  const std::vector<Mat2>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }

  bool contains(const Mat2& m) const noexcept;
  /// H is a subset of this group (checked on H's generators).
  bool contains_group(const MatrixGroup& h) const noexcept;

  const DetImage& det_image() const noexcept { return det_image_; }
  /// Least e in {1,2,3,4,6} with C_s(l)^e inside the group (prime l >= 3 only).
  std::optional<std::uint32_t> minimal_cartan_power() const noexcept { return minimal_e_; }

  /// Hash of the sorted element list; equal groups have equal fingerprints.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const MatrixGroup& g, const MatrixGroup& h) noexcept {
    return g.n_ == h.n_ && g.elements_ == h.elements_;
  }

 private:
  MatrixGroup(std::uint32_t n, std::vector<Mat2> generators, std::vector<Mat2> sorted_elements);

  friend MatrixGroup semisimplify_borel(const MatrixGroup& g);
  friend MatrixGroup conjugate(const MatrixGroup& g, const Mat2& m);

  std::uint32_t n_;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
  DetImage det_image_;
  std::optional<std::uint32_t> minimal_e_;
  std::uint64_t fingerprint_ = 0;
};

/// Same as MatrixGroup::generate.
MatrixGroup closure(std::uint32_t n, std::span<const Mat2> generators);

/// [G : H]. Throws MismatchedModulus or NotASubgroup.
std::uint64_t index(const MatrixGroup& g, const MatrixGroup& h);

DetImage det_image(const MatrixGroup& g);

/// {diag(a, d) : [[a, b], [0, d]] in G}. Throws NotInBorel.
MatrixGroup semisimplify_borel(const MatrixGroup& g);

std::optional<std::uint32_t> minimal_cartan_power(const MatrixGroup& g);

/// <G, H>.
MatrixGroup join(const MatrixGroup& g, const MatrixGroup& h);

/// m^-1 G m.
MatrixGroup conjugate(const MatrixGroup& g, const Mat2& m);

/// The subgroup generated by {g^k : g in G}; for abelian G this is the set of
/// k'th powers itself.
MatrixGroup power_subgroup(const MatrixGroup& g, std::uint64_t k);

MatrixGroup intersect(const MatrixGroup& g, const MatrixGroup& h);

/// The generators of C_s(l)^e = {diag(a^e, d^e)}: diag(g^e, 1), diag(1, g^e)
/// with g the least generator mod l.
std::vector<Mat2> split_cartan_power_generators(std::uint32_t l, std::uint32_t e);

}  // namespace gl2lab
