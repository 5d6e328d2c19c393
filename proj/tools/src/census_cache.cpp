#include "gl2lab/cli/census_cache.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab::cli {

namespace {

std::string header(CensusFamily family, std::uint32_t l) {
  return fmt::format("#gl2lab-census v1 {} {}", to_string(family), l);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

std::uint64_t parse_number(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::CacheCorrupt, fmt::format("bad number '{}'", text));
  }
  return std::stoull(std::string(text));
}

}  // namespace

std::string serialize_census(CensusFamily family, std::uint32_t l, const std::vector<MatrixGroup>& groups) {
  std::string out = header(family, l) + "\n";
  for (const auto& g : groups) {
    std::vector<Mat2> gens = g.generators();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const Mat2 one = Mat2::identity(l);
    if (gens.size() > 1) gens.erase(std::remove(gens.begin(), gens.end(), one), gens.end());
    out += fmt::format("v1;{}", g.modulus());
    for (const auto& m : gens) out += ";" + to_string(m);
    out += fmt::format(";{}\n", g.order());
  }
  return out;
}

std::vector<MatrixGroup> parse_census(std::string_view text, CensusFamily family, std::uint32_t l) {
  const auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != header(family, l)) {
    throw Error(ErrorCode::CacheCorrupt, "missing or mismatched census header");
  }
  std::vector<MatrixGroup> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split(lines[i], ';');
    if (fields.size() < 3 || fields.front() != "v1") {
      throw Error(ErrorCode::CacheCorrupt, fmt::format("line {}: malformed record", i + 1));
    }
    const auto n = parse_number(fields[1]);
    if (n != l) throw Error(ErrorCode::CacheCorrupt, fmt::format("line {}: modulus {} != {}", i + 1, n, l));
    const auto order = parse_number(fields.back());
    std::vector<Mat2> gens;
    try {
      for (std::size_t f = 2; f + 1 < fields.size(); ++f) gens.push_back(parse_mat2(fields[f], l));
      MatrixGroup g = MatrixGroup::generate(l, gens);
      if (g.order() != order) {
        throw Error(ErrorCode::CacheCorrupt,
                    fmt::format("line {}: re-closure has order {}, recorded {}", i + 1, g.order(), order));
      }
      out.push_back(std::move(g));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CacheCorrupt) throw;
      throw Error(ErrorCode::CacheCorrupt, fmt::format("line {}: {}", i + 1, e.what()));
    }
  }
  return out;
}

std::filesystem::path CensusCache::path_for(CensusFamily family, std::uint32_t l) const {
  return dir_ / fmt::format("census-{}-{}.txt", to_string(family), l);
}

void CensusCache::write(CensusFamily family, std::uint32_t l, const std::vector<MatrixGroup>& groups) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(family, l);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + tmp);
    file << serialize_census(family, l, groups);
    if (!file) throw Error(ErrorCode::IoError, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, fmt::format("cannot move {} into place: {}", tmp, ec.message()));
}

void CensusCache::note(const std::string& line) {
  std::lock_guard lock(log_mutex_);
  log_ << line << '\n';
}

std::vector<MatrixGroup> CensusCache::get(CensusFamily family, std::uint32_t l, unsigned jobs) {
  if (l < kCacheFromL) return compute_census(family, l, jobs);
  const auto path = path_for(family, l);
  std::ifstream file(path, std::ios::binary);
  if (file) {
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
      auto groups = parse_census(buffer.str(), family, l);
      note(fmt::format("cache hit: {} ({} groups)", path.string(), groups.size()));
      return groups;
    } catch (const Error& e) {
      note(fmt::format("cache corrupt, recomputing: {}", e.what()));
    }
  }
  // Round-trip through the file format so a miss returns exactly what a
  // later hit will: same element sets and the same sorted generators.
  auto groups = parse_census(serialize_census(family, l, compute_census(family, l, jobs)), family, l);
  try {
    write(family, l, groups);
    note(fmt::format("cache write: {} ({} groups)", path.string(), groups.size()));
  } catch (const Error& e) {
    note(fmt::format("cache not written: {}", e.what()));
  }
  return groups;
}

}  // namespace gl2lab::cli
