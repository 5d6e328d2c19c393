#include "gl2lab/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gl2lab/census.hpp"
#include "gl2lab/classifier.hpp"
#include "gl2lab/cli/census_cache.hpp"
#include "gl2lab/constants.hpp"
#include "gl2lab/error.hpp"
#include "gl2lab/group_spec.hpp"
#include "gl2lab/orbits.hpp"
#include "gl2lab/residue.hpp"
#include "gl2lab/verifiers.hpp"
#include "gl2lab/version.hpp"

namespace gl2lab::cli {

namespace {

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("GL2LAB_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "gl2lab";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "gl2lab";
  return std::filesystem::temp_directory_path() / "gl2lab";
}

std::string join_matrices(const std::vector<Mat2>& ms) {
  std::vector<std::string> parts;
  for (const auto& m : ms) parts.push_back(to_string(m));
  return fmt::format("{}", fmt::join(parts, ", "));
}

void describe(const std::string& spec, std::ostream& out) {
  const MatrixGroup g = parse_group_spec(spec);
  const auto& det = g.det_image();
  out << "spec: " << spec << '\n';
  out << "modulus: " << g.modulus() << '\n';
  out << "order: " << g.order() << '\n';
  out << "generators: " << join_matrices(g.generators()) << '\n';
  out << fmt::format("det image: [{}] ({})\n", fmt::join(det.values, ", "),
                     det.surjective ? "surjective" : "not surjective");
  const std::uint32_t n = g.modulus();
  if (n >= 3 && is_prime(n)) {
    const auto tokens = classify(g).tokens();
    out << "labels: " << (tokens.empty() ? std::string("none") : fmt::format("{}", fmt::join(tokens, ", "))) << '\n';
    const auto e = g.minimal_cartan_power();
    out << "minimal e: " << (e ? std::to_string(*e) : std::string("none")) << '\n';
  } else {
    out << "labels: n/a (modulus is not an odd prime)\n";
    out << "minimal e: n/a\n";
  }
}

void orbits(const std::string& spec, const std::string& space_name, std::optional<std::uint32_t> order,
            std::ostream& out) {
  const MatrixGroup g = parse_group_spec(spec);
  const ActionSpace space = space_name == "vec" ? ActionSpace::vectors(g.modulus(), order)
                                                : ActionSpace::cyclic(g.modulus(), order);
  const auto d = orbit_decomposition(g, space);
  auto name = [&](const TorsionVector& p) {
    return space.kind == ActionSpace::Kind::Cyclic ? display_name(canonical_cyclic(p)) : to_string(p);
  };
  out << "space: " << to_string(space) << '\n';
  out << "group order: " << d.group_order << '\n';
  out << fmt::format("orbit sizes: [{}]\n", fmt::join(d.sizes(), ", "));
  for (const auto& o : d.orbits) {
    std::vector<std::string> members;
    for (const auto& m : o.members) members.push_back(name(m));
    out << fmt::format("  {}: {{{}}}\n", o.size, fmt::join(members, ", "));
  }
}

void constants_cmd(std::optional<std::uint64_t> c, std::optional<std::uint64_t> degree, std::ostream& out) {
  out << fmt::format("orbit primes: [{}]\n", fmt::join(constants::kNonCmOrbitPrimesOverQ, ", "));
  out << "orbit prime product: " << constants::non_cm_orbit_prime_product().str() << '\n';
  out << fmt::format("kenku cyclic isogeny degrees: [{}]\n", fmt::join(constants::kKenkuCyclicIsogenyDegrees, ", "));
  if (c) out << fmt::format("B({}) = {}\n", *c, constants::base_change_constant(*c).str());
  if (degree) {
    out << fmt::format("prime lower bound for degree {}: {}\n", *degree,
                       constants::prime_lower_bound_for_degree(*degree));
  }
}

}  // namespace

void write_report(const VerificationReport& report, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  file << serialize(report);
  file.flush();
  if (!file) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational laboratory for subgroups of GL_2(Z/nZ)", "gl2lab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // group describe <spec>
  auto* group = app.add_subcommand("group", "Inspect one group");
  group->require_subcommand(1);
  std::string describe_spec;
  auto* describe_cmd = group->add_subcommand("describe", "Order, det image, labels and minimal e");
  describe_cmd->add_option("spec", describe_spec, "Group spec, e.g. \"Ns(7)\"")->required();

  // orbits <spec> --space cyc|vec [--order d]
  std::string orbit_spec;
  std::string space = "cyc";
  std::optional<std::uint32_t> orbit_order;
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit decomposition on vectors or cyclic submodules");
  orbits_cmd->add_option("spec", orbit_spec, "Group spec")->required();
  orbits_cmd->add_option("--space", space, "cyc or vec")->check(CLI::IsMember({"cyc", "vec"}));
  orbits_cmd->add_option("--order", orbit_order, "Restrict to points of this order")->check(CLI::PositiveNumber);

  // verify <id> ...
  std::string check_id;
  std::optional<std::uint32_t> l_min;
  std::optional<std::uint32_t> l_max;
  unsigned jobs = 1;
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
  std::string cache_dir;
  bool no_cache = false;
  std::optional<std::uint64_t> c_bound;
  std::optional<std::uint64_t> degree;
  auto* verify_cmd = app.add_subcommand("verify", "Run one catalog check and emit its report");
  verify_cmd->add_option("check", check_id, "Check id (see `gl2lab checks`)")->required();
  verify_cmd->add_option("--l-min", l_min, "Smallest l (or n)");
  verify_cmd->add_option("--l-max", l_max, "Largest l (or n)");
  verify_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  verify_cmd->add_option("--out,-o", out_path, "Write the report here instead of stdout");
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks");
  verify_cmd->add_flag("--timing", timing, "Record wall time in duration_ms (breaks byte-stability)");
  verify_cmd->add_option("--cache-dir", cache_dir, "Census cache directory");
  verify_cmd->add_flag("--no-cache", no_cache, "Always recompute censuses");
  verify_cmd->add_option("--c", c_bound, "constants: bound c for B(c)");
  verify_cmd->add_option("--degree", degree, "constants: degree of the base field");

  // census ns|borel --l L
  std::string family_name;
  std::uint32_t census_l = 0;
  std::string constraint_text = "none";
  auto* census_cmd = app.add_subcommand("census", "List the census of subgroups of N_s(l) or non-diagonal B(l)");
  census_cmd->add_option("family", family_name, "ns or borel")->required()->check(CLI::IsMember({"ns", "borel"}));
  census_cmd->add_option("--l", census_l, "Prime l")->required();
  census_cmd->add_option("--constraints", constraint_text,
                         "Comma list of scalars, full-det, not-in-cartan, cartan-power, all, none");
  census_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  census_cmd->add_option("--cache-dir", cache_dir, "Census cache directory");
  census_cmd->add_flag("--no-cache", no_cache, "Always recompute");

  // constants [--c C] [--degree D]
  auto* constants_sub = app.add_subcommand("constants", "Named constants and B(c)");
  constants_sub->add_option("--c", c_bound, "Bound c for B(c)");
  constants_sub->add_option("--degree", degree, "Degree of the base field for the prime lower bound");

  auto* checks_cmd = app.add_subcommand("checks", "List catalog checks with their default ranges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "gl2lab: " << e.what() << '\n';
    err << "run `gl2lab --help` for usage\n";
    return kUsageError;
  }

  auto cache_path = [&] { return cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir); };

  try {
    if (describe_cmd->parsed()) {
      describe(describe_spec, out);
      return kSuccess;
    }
    if (orbits_cmd->parsed()) {
      orbits(orbit_spec, space, orbit_order, out);
      return kSuccess;
    }
    if (constants_sub->parsed()) {
      constants_cmd(c_bound, degree, out);
      return kSuccess;
    }
    if (checks_cmd->parsed()) {
      for (const auto& info : check_catalog()) {
        const std::string range =
            info.default_max == 0 ? "-" : fmt::format("{}..{}", info.default_min, info.default_max);
        out << fmt::format("{:<22} {:<10} {}{}\n", info.id, range, info.claim,
                           info.report_only ? " [report-only]" : (info.sampled ? " [sampled]" : ""));
      }
      return kSuccess;
    }
    if (census_cmd->parsed()) {
      const auto family = family_name == "ns" ? CensusFamily::Ns : CensusFamily::Borel;
      const auto constraints = CensusConstraints::parse(constraint_text);
      std::vector<MatrixGroup> groups;
      if (no_cache) {
        groups = compute_census(family, census_l, jobs);
      } else {
        CensusCache cache(cache_path(), err);
        groups = cache.get(family, census_l, jobs);
      }
      std::vector<const MatrixGroup*> kept;
      for (const auto& g : groups) {
        if (satisfies(g, constraints)) kept.push_back(&g);
      }
      out << fmt::format("# census {} l={} constraints={}: {} of {} groups\n", family_name, census_l,
                         constraints.to_string(), kept.size(), groups.size());
      for (const auto* g : kept) out << g->order() << '\t' << format_group_spec(*g) << '\n';
      return kSuccess;
    }
    if (verify_cmd->parsed()) {
      RunOptions options;
      options.l_min = l_min;
      options.l_max = l_max;
      options.jobs = jobs;
      options.seed = seed;
      options.c_bound = c_bound;
      options.degree = degree;
      std::optional<CensusCache> cache;
      if (!no_cache) {
        cache.emplace(cache_path(), err);
        // Called from inside the check's own workers, so one thread each.
        options.census = [&cache](CensusFamily family, std::uint32_t l) { return cache->get(family, l, 1); };
      }
      const auto start = std::chrono::steady_clock::now();
      VerificationReport report = run_check(check_id, options);
      if (timing) {
        report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      }
      if (out_path.empty()) {
        out << serialize(report);
      } else {
        write_report(report, out_path);
        err << fmt::format("{}: {} -> {}\n", report.check, to_string(report.status), out_path);
      }
      return report.status == CheckStatus::Fail ? kCheckFailed : kSuccess;
    }
  } catch (const Error& e) {
    err << "gl2lab: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "gl2lab: internal error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gl2lab::cli
