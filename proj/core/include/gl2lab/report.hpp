#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gl2lab {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, ReportOnly };

/// "pass", "fail", "report-only".
std::string to_string(CheckStatus status);

struct Counterexample {
  std::uint32_t l = 0;
  std::string group_spec;  // replayable through the group-spec parser
  Json witness = Json::object();
};

struct VerificationReport {
  std::string check;
  Json params = Json::object();
  CheckStatus status = CheckStatus::Pass;
  std::vector<Counterexample> counterexamples;
  Json stats = Json::object();
  std::int64_t duration_ms = 0;
  std::optional<std::uint64_t> seed;
  std::string version;
};

/// Keys in the order check, params, status, counterexamples, stats,
/// duration_ms, seed, version.
Json to_json(const VerificationReport& report);

/// Pretty-printed JSON with a trailing newline.
std::string serialize(const VerificationReport& report);

/// Inverse of to_json. Throws ParseError.
VerificationReport report_from_json(const Json& json);

}  // namespace gl2lab
