#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gl2lab/matrix_group.hpp"

namespace gl2lab {

/// Group-level hypotheses a census can be filtered by. Each flag is
/// independent.
struct CensusConstraints {
  bool require_scalars = false;        // Z(l) inside G
  bool require_full_det = false;       // det(G ∩ C_s(l)) = F_l^x
  bool require_not_in_cartan = false;  // G not inside C_s(l)
  bool require_cartan_power = false;   // C_s(l)^e inside G for some e in {1,2,3,4,6}

  static CensusConstraints all() noexcept { return {true, true, true, true}; }

  /// Comma-separated flags: scalars, full-det, not-in-cartan, cartan-power,
  /// or the shorthands "all" and "none". Throws ParseError.
  static CensusConstraints parse(std::string_view text);

  /// Flags in the fixed order above, "none" when empty.
  std::string to_string() const;

  friend bool operator==(const CensusConstraints&, const CensusConstraints&) = default;
};

bool satisfies(const MatrixGroup& g, const CensusConstraints& constraints);

/// The subgroup of Z_m x Z_m with rows (a, b), (0, d) in Hermite normal form:
/// a | m, d | m, 0 <= b < d, and d | (m/a) b. Every subgroup has exactly one
/// such form.
struct LatticeForm {
  std::uint32_t m = 1;
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  std::uint32_t d = 1;

  bool contains(std::uint64_t i, std::uint64_t j) const noexcept;
  std::uint64_t order() const noexcept { return std::uint64_t{m / a} * (m / d); }

  friend bool operator==(const LatticeForm&, const LatticeForm&) = default;
};

/// All subgroups of Z_m x Z_m, sorted by (a, d, b).
std::vector<LatticeForm> subgroups_of_zm_squared(std::uint32_t m);

/// {diag(g^i, g^j) : (i, j) in L} with g = least_generator(l) and m = l - 1.
MatrixGroup split_cartan_subgroup(std::uint32_t l, const LatticeForm& form);

/// Every subgroup of C_s(l), one per lattice form, in form order.
std::vector<MatrixGroup> split_cartan_subgroups(std::uint32_t l);

/// Every subgroup of N_s(l) satisfying the constraints, each once, sorted by
/// (order, elements). Subgroups not inside C_s are <H, w t> with H = G ∩ C_s
/// swap-stable, w the coordinate swap and t a coset representative of C_s/H
/// with (w t)^2 in H. Throws InvalidModulus unless l is a prime >= 5.
std::vector<MatrixGroup> enumerate_ns_subgroups(std::uint32_t l, const CensusConstraints& constraints = {},
                                                unsigned jobs = 1);

/// Every non-diagonalizable subgroup of B(l): the closures of U and S for S
/// running over the subgroups of C_s(l), in lattice-form order. Throws
/// InvalidModulus unless l is a prime >= 3.
std::vector<MatrixGroup> enumerate_borel_nondiag(std::uint32_t l, unsigned jobs = 1);

}  // namespace gl2lab
