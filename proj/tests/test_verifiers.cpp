#include <gtest/gtest.h>

#include "gl2lab/error.hpp"
#include "gl2lab/report.hpp"
#include "gl2lab/verifiers.hpp"

using namespace gl2lab;

namespace {

RunOptions range(std::uint32_t lo, std::uint32_t hi, unsigned jobs = 1) {
  RunOptions o;
  o.l_min = lo;
  o.l_max = hi;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST(Catalog, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : check_catalog()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_TRUE(find_check("ns-index-survey").report_only);
  EXPECT_TRUE(find_check("tower-divisibility").sampled);
  try {
    find_check("no-such-check");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCheck);
  }
}

// Every check on a small slice of its range: passes and reports sanely.
TEST(Checks, SmallRangesPass) {
  for (const auto& info : check_catalog()) {
    RunOptions o;
    if (info.default_max != 0) {
      o.l_min = info.default_min;
      o.l_max = std::min(info.default_max, info.default_min + 6);
    }
    const auto report = run_check(info.id, o);
    EXPECT_EQ(report.check, info.id);
    EXPECT_EQ(report.status, info.report_only ? CheckStatus::ReportOnly : CheckStatus::Pass) << info.id;
    EXPECT_TRUE(report.counterexamples.empty()) << info.id;
    EXPECT_EQ(report.seed.has_value(), info.sampled) << info.id;
    EXPECT_EQ(report.duration_ms, 0);
  }
}

TEST(Checks, RangeCapsAreEnforced) {
  try {
    run_check("transitivity", range(5, 1000));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RangeTooLarge);
  }
  try {
    run_check("cyc-count", range(50, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RangeTooLarge);
  }
}

TEST(Checks, ReportOnlySurveyCarriesHistogram) {
  const auto report = run_check("ns-index-survey", range(5, 13));
  EXPECT_EQ(report.status, CheckStatus::ReportOnly);
  ASSERT_TRUE(report.stats.contains("histogram"));
  EXPECT_FALSE(report.stats["histogram"].empty());
}

TEST(Checks, ReportsIndependentOfJobs) {
  for (const char* id : {"orbit-divisibility", "prop-even-degree", "classifier-roundtrip"}) {
    const auto& info = find_check(id);
    const auto one = serialize(run_check(id, range(info.default_min, info.default_min + 4, 1)));
    const auto three = serialize(run_check(id, range(info.default_min, info.default_min + 4, 3)));
    EXPECT_EQ(one, three) << id;
  }
}

TEST(Checks, SeedChangesSampledReports) {
  auto o = range(2, 6);
  const auto a = run_check("tower-divisibility", o);
  o.seed = 7;
  const auto b = run_check("tower-divisibility", o);
  EXPECT_EQ(*a.seed, kDefaultSeed);
  EXPECT_EQ(*b.seed, 7u);
  EXPECT_EQ(a.status, CheckStatus::Pass);
  EXPECT_EQ(b.status, CheckStatus::Pass);
}

TEST(Checks, ConstantsEchoInputs) {
  RunOptions o;
  o.c_bound = 7;
  o.degree = 10;
  const auto r = run_check("constants", o);
  EXPECT_EQ(r.stats["orbit_prime_product"], "18888870");
  EXPECT_EQ(r.stats["B"], "210");
  EXPECT_EQ(r.stats["prime_lower_bound"], 152);
}

TEST(Report, KeyOrderAndRoundTrip) {
  VerificationReport r;
  r.check = "demo";
  r.params = Json{{"l_min", 3}, {"l_max", 5}};
  r.status = CheckStatus::Fail;
  r.counterexamples.push_back({5, "B(5)", Json{{"orbit_sizes", {1, 5}}}});
  r.stats = Json{{"items", 2}};
  r.seed = 11;
  r.version = "0.0.0";
  const auto json = to_json(r);
  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "params", "status", "counterexamples", "stats", "duration_ms",
                                            "seed", "version"}));
  const auto back = report_from_json(json);
  EXPECT_EQ(serialize(back), serialize(r));

  VerificationReport pass;
  EXPECT_NE(serialize(pass).find("\"counterexamples\": []"), std::string::npos);
  EXPECT_NE(serialize(pass).find("\"seed\": null"), std::string::npos);
  try {
    report_from_json(Json{{"check", 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}
