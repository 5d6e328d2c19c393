#pragma once

#include <array>
#include <cstdint>

#include "gl2lab/residue.hpp"

namespace gl2lab::constants {

/// Every degree of a Q-rational cyclic isogeny: [1, 19] together with
/// {21, 25, 27, 37, 43, 67, 163}.
inline constexpr std::array<std::uint32_t, 26> kKenkuCyclicIsogenyDegrees = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13,
    14, 15, 16, 17, 18, 19, 21, 25, 27, 37, 43, 67, 163};

/// Primes that can divide a nontrivial orbit of a cyclic subgroup under the
/// mod-n image of a non-CM curve over Q.
inline constexpr std::array<std::uint64_t, 8> kNonCmOrbitPrimesOverQ = {2, 3, 5, 7, 11, 13, 17, 37};

/// Product of kNonCmOrbitPrimesOverQ (= 18888870).
BigInt non_cm_orbit_prime_product();

/// B(c): product of all primes p <= c.
BigInt base_change_constant(std::uint64_t c);

/// Lower bound max{74, 15*degree + 2} that every prime above the implicit
/// constant must satisfy, for a base field of the given degree over Q.
std::uint64_t prime_lower_bound_for_degree(std::uint64_t degree);

}  // namespace gl2lab::constants
