#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gl2lab/cli/census_cache.hpp"
#include "gl2lab/cli/cli.hpp"
#include "gl2lab/error.hpp"
#include "gl2lab/group_spec.hpp"
#include "gl2lab/orbits.hpp"
#include "gl2lab/verifiers.hpp"

using namespace gl2lab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("gl2lab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, BorelOrbitsExample) {
  const auto r = run({"orbits", "B(7)", "--space", "cyc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("orbit sizes: [1, 7]"), std::string::npos) << r.out;
}

TEST(Cli, Constants) {
  const auto r = run({"constants", "--c", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("B(7) = 210"), std::string::npos);
  EXPECT_NE(r.out.find("18888870"), std::string::npos);
  EXPECT_NE(r.out.find("[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 25, 27, 37, 43, 67, 163]"),
            std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  TempDir dir;
  auto r = run({"verify", "cyc-count", "--l-min", "3", "--l-max", "101", "--cache-dir", dir.str()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"status\": \"pass\""), std::string::npos);
  r = run({"verify", "ns-index-survey", "--l-min", "5", "--l-max", "7", "--cache-dir", dir.str()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"report-only\""), std::string::npos);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "transitivity", "--l-min", "5", "--l-max", "999"}).code, 2);
  EXPECT_EQ(run({"verify", "cyc-count", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"orbits", "B(7", "--space", "cyc"}).code, 2);
  EXPECT_EQ(run({"orbits", "B(7)", "--space", "lines"}).code, 2);
}

TEST(Cli, VerifyWritesReportFile) {
  TempDir dir;
  const auto path = (dir.path() / "r.json").string();
  const auto r = run({"verify", "borel-orbits", "--l-min", "3", "--l-max", "13", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const auto json = Json::parse(slurp(path));
  EXPECT_EQ(json["check"], "borel-orbits");
  EXPECT_TRUE(json["counterexamples"].empty());
  EXPECT_EQ(run({"verify", "borel-orbits", "--out", (dir.path() / "missing" / "r.json").string()}).code, 2);
}

TEST(Cli, DescribeGroup) {
  const auto r = run({"group", "describe", "Nns(7)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 96"), std::string::npos);
  EXPECT_NE(r.out.find("labels: nonsplit-normalizer"), std::string::npos);
  EXPECT_NE(r.out.find("(surjective)"), std::string::npos);
}

TEST(Cli, OutputIndependentOfJobs) {
  TempDir dir;
  for (const char* id : {"tower-divisibility", "antidiag-action"}) {
    const auto& info = find_check(id);
    const auto lo = std::to_string(info.default_min);
    const auto hi = std::to_string(info.default_min + 6);
    const auto a = run({"verify", id, "--l-min", lo, "--l-max", hi, "--jobs", "1", "--cache-dir", dir.str()});
    const auto b = run({"verify", id, "--l-min", lo, "--l-max", hi, "--jobs", "4", "--cache-dir", dir.str()});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << id;
  }
}

TEST(CensusCache, SecondInvocationHitsCache) {
  TempDir dir;
  auto timed = [&] {
    const auto start = std::chrono::steady_clock::now();
    auto r = run({"census", "ns", "--l", "17", "--cache-dir", dir.str()});
    return std::pair{r, std::chrono::steady_clock::now() - start};
  };
  const auto [first, t1] = timed();
  const auto [second, t2] = timed();
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.err.find("cache hit"), std::string::npos);
  EXPECT_NE(second.err.find("cache hit"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir.path() / "census-ns-17.txt"));
  // Logged as a hit; reading back should not be slower than enumerating.
  EXPECT_LE(t2, t1 * 2);
}

TEST(CensusCache, RoundTripAndCorruption) {
  TempDir dir;
  std::ostringstream log;
  cli::CensusCache cache(dir.path(), log);
  const auto groups = compute_census(CensusFamily::Borel, 19);
  cache.write(CensusFamily::Borel, 19, groups);
  const auto path = cache.path_for(CensusFamily::Borel, 19);
  const auto text = slurp(path);
  EXPECT_EQ(text.rfind("#gl2lab-census v1 borel 19\n", 0), 0u);
  const auto back = cli::parse_census(text, CensusFamily::Borel, 19);
  ASSERT_EQ(back.size(), groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) EXPECT_EQ(back[i].elements(), groups[i].elements());

  // Change one generator digit so that re-closure gives a different order.
  std::string bad = text;
  const auto pos = bad.find("[[1,1],[0,1]];[[");
  ASSERT_NE(pos, std::string::npos);
  bad[pos + 17] = bad[pos + 17] == '2' ? '3' : '2';
  bool corrupt = false;
  try {
    cli::parse_census(bad, CensusFamily::Borel, 19);
  } catch (const Error& e) {
    corrupt = e.code() == ErrorCode::CacheCorrupt;
  }
  EXPECT_TRUE(corrupt);

  // A corrupt file is a miss: recomputed and rewritten.
  std::ofstream(path, std::ios::trunc) << bad;
  const auto again = cache.get(CensusFamily::Borel, 19);
  EXPECT_EQ(again.size(), groups.size());
  EXPECT_NE(log.str().find("cache corrupt"), std::string::npos);
  EXPECT_EQ(slurp(path), text);

  for (const char* header : {"", "#gl2lab-census v1 ns 19\n", "#gl2lab-census v2 borel 19\n"}) {
    try {
      cli::parse_census(header, CensusFamily::Borel, 19);
      ADD_FAILURE() << header;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CacheCorrupt);
    }
  }
}

// A failure report names its group by spec; feeding that spec back through
// `orbits` reproduces the recorded witness.
TEST(Report, CounterexampleReplays) {
  TempDir dir;
  const auto g = parse_group_spec("gen(7;[[0,1],[1,0]],[[3,0],[0,3]])");
  const auto d = orbit_decomposition(g, ActionSpace::cyclic(7));
  VerificationReport report;
  report.check = "replay-demo";
  report.status = CheckStatus::Fail;
  report.counterexamples.push_back({7, format_group_spec(g), Json{{"orbit_sizes", d.sizes()}}});
  const auto path = (dir.path() / "fail.json").string();
  cli::write_report(report, path);

  const auto json = Json::parse(slurp(path));
  const auto& ce = json["counterexamples"][0];
  const auto replay = run({"orbits", ce["group_spec"].get<std::string>(), "--space", "cyc"});
  EXPECT_EQ(replay.code, 0);
  std::string sizes;
  for (const auto& s : ce["witness"]["orbit_sizes"]) sizes += (sizes.empty() ? "" : ", ") + std::to_string(s.get<int>());
  EXPECT_NE(replay.out.find("orbit sizes: [" + sizes + "]"), std::string::npos) << replay.out;
}
