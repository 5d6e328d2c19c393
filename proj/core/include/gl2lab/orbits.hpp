#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2lab/matrix_group.hpp"
#include "gl2lab/torsion.hpp"

namespace gl2lab {

/// Which set a group acts on: nonzero vectors of (Z/nZ)^2 or nontrivial cyclic
/// submodules, optionally restricted to one order d | n.
struct ActionSpace {
  enum class Kind { Vectors, Cyclic };

  Kind kind = Kind::Cyclic;
  std::uint32_t n = 2;
  std::optional<std::uint32_t> order;

  static ActionSpace vectors(std::uint32_t n, std::optional<std::uint32_t> order = std::nullopt) {
    return {Kind::Vectors, n, order};
  }
  static ActionSpace cyclic(std::uint32_t n, std::optional<std::uint32_t> order = std::nullopt) {
    return {Kind::Cyclic, n, order};
  }

  /// Points of the space in canonical_less order. Cyclic submodules are
  /// represented by their canonical generators. Throws InvalidDivisor.
  std::vector<TorsionVector> points() const;

  friend bool operator==(const ActionSpace&, const ActionSpace&) = default;
};

/// "cyc(n=7)", "vec(n=9,order=3)".
std::string to_string(const ActionSpace& space);

struct Orbit {
  std::uint64_t size = 0;
  TorsionVector representative;  // first member in space order
  std::vector<TorsionVector> members;
};

struct OrbitDecomposition {
  ActionSpace space;
  std::uint64_t group_order = 0;
  std::vector<Orbit> orbits;  // sorted by (size, representative)

  std::vector<std::uint64_t> sizes() const;
};

/// Orbits of G on the space. Throws MismatchedModulus, InvalidDivisor.
OrbitDecomposition orbit_decomposition(const MatrixGroup& g, const ActionSpace& space);

/// Size of the G-orbit of one point, by breadth-first search over generator
/// images.
std::uint64_t orbit_size(const MatrixGroup& g, const TorsionVector& v);
std::uint64_t orbit_size(const MatrixGroup& g, const CyclicSubmodule& c);

/// {g in G : g x = x}. Throws MismatchedModulus.
MatrixGroup stabilizer(const MatrixGroup& g, const TorsionVector& v);
MatrixGroup stabilizer(const MatrixGroup& g, const CyclicSubmodule& c);

/// [Stab_G <P> : Stab_G P] for any nonzero P, at any modulus.
std::uint64_t point_over_submodule_degree(const MatrixGroup& g, const TorsionVector& p);

/// One level of the field tower above a point P of order l^k, written as
/// stabilizer indices inside G, with C = <P>:
///   deg_P_over_C    = [Stab C : Stab P],   bounded by phi(l^k)
///   deg_P_over_lP   = [Stab lP : Stab P],  bounded by l^2 (l - 1)
///   deg_C_over_lC   = [Stab lC : Stab C],  bounded by l^k (l - 1)^2
///   deg_lP_over_lC  = [Stab lC : Stab lP]
/// For k = 1, lP = 0 and lC = 0 are fixed by all of G; the two l-level bounds
/// only apply when k >= 2 and are reported as passing otherwise.
struct TowerIndices {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
  std::uint64_t deg_P_over_C = 1;
  std::uint64_t deg_P_over_lP = 1;
  std::uint64_t deg_C_over_lC = 1;
  std::uint64_t deg_lP_over_lC = 1;
  std::uint64_t bound_P_over_C = 1;
  std::uint64_t bound_P_over_lP = 1;
  std::uint64_t bound_C_over_lC = 1;
  bool pass_P_over_C = true;
  bool pass_P_over_lP = true;
  bool pass_C_over_lC = true;
  /// deg_C_over_lC * deg_P_over_C == deg_P_over_lP * deg_lP_over_lC.
  bool multiplicative = true;

  bool pass() const noexcept { return pass_P_over_C && pass_P_over_lP && pass_C_over_lC && multiplicative; }
};

/// Throws InvalidModulus unless n is a prime power, WrongOrder unless P has
/// order n, MismatchedModulus.
TowerIndices tower_indices(const MatrixGroup& g, const TorsionVector& p);

}  // namespace gl2lab
