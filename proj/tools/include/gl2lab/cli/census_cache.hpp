#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "gl2lab/matrix_group.hpp"
#include "gl2lab/verifiers.hpp"

namespace gl2lab::cli {

/// Census files are consulted for l at or above this bound; smaller
/// censuses are cheaper to recompute than to read back.
inline constexpr std::uint32_t kCacheFromL = 17;

/// "#gl2lab-census v1 <family> <l>" followed by one line per group,
/// "v1;<n>;<gen>;...;<order>" with generators sorted.
std::string serialize_census(CensusFamily family, std::uint32_t l, const std::vector<MatrixGroup>& groups);

/// Re-closes every line and checks its order. Throws CacheCorrupt.
std::vector<MatrixGroup> parse_census(std::string_view text, CensusFamily family, std::uint32_t l);

/// One file per (family, l) under a directory. Safe to share between the
/// worker threads of one run: files are distinct per key and the log is
/// serialized.
class CensusCache {
 public:
  CensusCache(std::filesystem::path dir, std::ostream& log) : dir_(std::move(dir)), log_(log) {}

  std::filesystem::path path_for(CensusFamily family, std::uint32_t l) const;

  /// Cached census, computed and stored on a miss or a corrupt file. Below
  /// kCacheFromL the cache is bypassed.
  std::vector<MatrixGroup> get(CensusFamily family, std::uint32_t l, unsigned jobs = 1);

  /// Throws IoError.
  void write(CensusFamily family, std::uint32_t l, const std::vector<MatrixGroup>& groups) const;

 private:
  void note(const std::string& line);

  std::filesystem::path dir_;
  std::ostream& log_;
  std::mutex log_mutex_;
};

}  // namespace gl2lab::cli
