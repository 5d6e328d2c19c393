#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gl2lab/matrix_group.hpp"
#include "gl2lab/report.hpp"

namespace gl2lab {

struct CheckInfo {
  std::string id;
  std::string claim;
  std::uint32_t default_min = 0;
  std::uint32_t default_max = 0;
  std::uint32_t cap_min = 0;  // smallest accepted l_min
  std::uint32_t cap_max = 0;  // largest accepted l_max
  bool sampled = false;       // uses the seeded generator; seed goes in the report
  bool report_only = false;
};

const std::vector<CheckInfo>& check_catalog();

/// Throws UnknownCheck.
const CheckInfo& find_check(std::string_view id);

enum class CensusFamily { Ns, Borel };

/// "ns" or "borel".
std::string to_string(CensusFamily family);

/// Supplies the unconstrained census of a family at l. The runner installs a
/// caching source; the default computes it.
using CensusSource = std::function<std::vector<MatrixGroup>(CensusFamily, std::uint32_t)>;

std::vector<MatrixGroup> compute_census(CensusFamily family, std::uint32_t l, unsigned jobs = 1);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunOptions {
  std::optional<std::uint32_t> l_min;  // defaults from the catalog
  std::optional<std::uint32_t> l_max;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> c_bound;  // constants: B(c)
  std::optional<std::uint64_t> degree;   // constants: max{74, 15 D + 2}
  CensusSource census;                   // empty: compute_census
};

/// Runs one catalog check. Reports are deterministic for fixed options,
/// independent of `jobs`; duration_ms is left at 0 for the caller to fill.
/// Throws UnknownCheck, RangeTooLarge.
VerificationReport run_check(std::string_view id, const RunOptions& options);

}  // namespace gl2lab
