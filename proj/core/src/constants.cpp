#include "gl2lab/constants.hpp"

#include <algorithm>

namespace gl2lab::constants {

BigInt non_cm_orbit_prime_product() { return product_of_primes(kNonCmOrbitPrimesOverQ); }

BigInt base_change_constant(std::uint64_t c) { return product_of_primes_up_to(c); }

std::uint64_t prime_lower_bound_for_degree(std::uint64_t degree) {
  return std::max<std::uint64_t>(74, 15 * degree + 2);
}

}  // namespace gl2lab::constants
