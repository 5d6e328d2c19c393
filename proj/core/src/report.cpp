#include "gl2lab/report.hpp"

#include "gl2lab/error.hpp"

namespace gl2lab {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportOnly: return "report-only";
  }
  return "fail";
}

Json to_json(const VerificationReport& report) {
  Json out = Json::object();
  out["check"] = report.check;
  out["params"] = report.params;
  out["status"] = to_string(report.status);
  Json examples = Json::array();
  for (const auto& c : report.counterexamples) {
    Json item = Json::object();
    item["l"] = c.l;
    item["group_spec"] = c.group_spec;
    item["witness"] = c.witness;
    examples.push_back(std::move(item));
  }
  out["counterexamples"] = std::move(examples);
  out["stats"] = report.stats;
  out["duration_ms"] = report.duration_ms;
  out["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  out["version"] = report.version;
  return out;
}

std::string serialize(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

VerificationReport report_from_json(const Json& json) {
  try {
    VerificationReport r;
    r.check = json.at("check").get<std::string>();
    r.params = json.at("params");
    const auto status = json.at("status").get<std::string>();
    if (status == "pass") {
      r.status = CheckStatus::Pass;
    } else if (status == "fail") {
      r.status = CheckStatus::Fail;
    } else if (status == "report-only") {
      r.status = CheckStatus::ReportOnly;
    } else {
      throw Error(ErrorCode::ParseError, "unknown report status '" + status + "'");
    }
    for (const auto& item : json.at("counterexamples")) {
      r.counterexamples.push_back(
          {item.at("l").get<std::uint32_t>(), item.at("group_spec").get<std::string>(), item.at("witness")});
    }
    r.stats = json.at("stats");
    r.duration_ms = json.at("duration_ms").get<std::int64_t>();
    if (!json.at("seed").is_null()) r.seed = json.at("seed").get<std::uint64_t>();
    r.version = json.at("version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace gl2lab
