#pragma once

#include <cstdint>
#include <vector>

#include "gl2lab/matrix_group.hpp"

namespace gl2lab {

/// Every subgroup of a small ambient group that contains `base`, found by
/// repeatedly joining known subgroups with cyclic subgroups of the ambient
/// group. Results are deduplicated by element set and sorted by (order,
/// elements). Intended for ambient groups of at most a few thousand
/// elements; throws RangeTooLarge above 8192.
std::vector<MatrixGroup> subgroups_containing(const MatrixGroup& ambient, const MatrixGroup& base);

/// subgroups_containing(ambient, {I}).
std::vector<MatrixGroup> all_subgroups(const MatrixGroup& ambient);

}  // namespace gl2lab
