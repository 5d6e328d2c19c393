#include "gl2lab/verifiers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

#include "gl2lab/census.hpp"
#include "gl2lab/classifier.hpp"
#include "gl2lab/constants.hpp"
#include "gl2lab/error.hpp"
#include "gl2lab/families.hpp"
#include "gl2lab/group_spec.hpp"
#include "gl2lab/orbits.hpp"
#include "gl2lab/parallel.hpp"
#include "gl2lab/subgroup_lattice.hpp"
#include "gl2lab/version.hpp"

namespace gl2lab {

namespace {

using K = FamilyTag::Kind;

constexpr std::size_t kMaxCounterexamples = 25;
// Census oracles and brute-force conjugator searches run up to this prime.
constexpr std::uint32_t kOracleBound = 13;

// Outcome of one work item (usually one l).
struct Item {
  std::vector<Counterexample> failures;
  Json stats = Json::object();

  void fail(std::uint32_t l, std::string spec, Json witness) {
    failures.push_back({l, std::move(spec), std::move(witness)});
  }
};

struct Context {
  const CheckInfo& info;
  const RunOptions& options;
  std::uint32_t l_min;
  std::uint32_t l_max;

  std::vector<MatrixGroup> census(CensusFamily family, std::uint32_t l) const {
    if (options.census) return options.census(family, l);
    return compute_census(family, l);
  }
};

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 2); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string spec_of(const MatrixGroup& g) { return format_group_spec(g); }

std::string family_spec(const char* name, std::uint32_t l) { return fmt::format("{}({})", name, l); }

Json sizes_json(const OrbitDecomposition& d) { return Json(d.sizes()); }

// A deterministic stream per (seed, work item), independent of scheduling.
std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t item) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(item), static_cast<std::uint32_t>(item >> 32)};
  return std::mt19937_64(seq);
}

Mat2 random_invertible(std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> entry(0, n - 1);
  for (;;) {
    const Mat2 m = Mat2::make(n, entry(rng), entry(rng), entry(rng), entry(rng));
    if (m.is_invertible()) return m;
  }
}

MatrixGroup random_subgroup(std::uint32_t n, std::mt19937_64& rng) {
  const int count = std::uniform_int_distribution<int>(1, 2)(rng);
  std::vector<Mat2> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_invertible(n, rng));
  return MatrixGroup::generate(n, gens);
}

// Orbit size of every point, keyed by the point's canonical vector.
std::map<TorsionVector, std::uint64_t> orbit_size_map(const OrbitDecomposition& d) {
  std::map<TorsionVector, std::uint64_t> out;
  for (const auto& o : d.orbits) {
    for (const auto& p : o.members) out.emplace(p, o.size);
  }
  return out;
}

// Sorted slots x*n + y of all multiples of (x, y), including 0.
std::vector<std::uint32_t> span_of(Residue x, Residue y, std::uint32_t n) {
  std::vector<std::uint32_t> span;
  for (std::uint32_t t = 0; t < n; ++t) span.push_back((x * t % n) * n + (y * t % n));
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return span;
}

// Number of distinct nontrivial cyclic submodules, by brute force over spans.
std::size_t brute_force_cyc_count(std::uint32_t n) {
  std::set<std::vector<std::uint32_t>> spans;
  for (Residue x = 0; x < n; ++x) {
    for (Residue y = 0; y < n; ++y) {
      if (x != 0 || y != 0) spans.insert(span_of(x, y, n));
    }
  }
  return spans.size();
}

// ---------------------------------------------------------------- checks

Item cyc_count(std::uint32_t l) {
  Item item;
  const auto all = enumerate_cyclic(l);
  const auto order_l = enumerate_cyclic(l, l);
  const auto brute = brute_force_cyc_count(l);
  if (all.size() != l + 1 || order_l.size() != l + 1 || brute != l + 1) {
    item.fail(l, family_spec("GL2", l), Json{{"expected", l + 1}, {"enumerated", all.size()}, {"brute_force", brute}});
  }
  item.stats = Json{{"cyc", all.size()}};
  return item;
}

Item distinct_ck(std::uint32_t n) {
  Item item;
  const std::string trivial = spec_of(MatrixGroup::generate(n, {}));
  std::vector<CyclicSubmodule> ck;
  for (std::uint32_t k = 0; k < n; ++k) ck.push_back(canonical_cyclic(TorsionVector::make(n, k, 1)));
  // Oracle: compare the submodules as sets.
  std::vector<std::vector<std::uint32_t>> spans;
  for (std::uint32_t k = 0; k < n; ++k) spans.push_back(span_of(k, 1, n));
  std::uint64_t pairs = 0;
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t m = k + 1; m < n; ++m) {
      ++pairs;
      const bool same_canonical = ck[k] == ck[m];
      const bool same_span = spans[k] == spans[m];
      if (same_canonical || same_span) {
        item.fail(n, trivial, Json{{"k", k}, {"m", m}, {"same_canonical", same_canonical}, {"same_span", same_span}});
      }
    }
  }
  const auto enumerated = enumerate_cyclic(n).size();
  const auto brute = brute_force_cyc_count(n);
  if (enumerated != brute) item.fail(n, trivial, Json{{"enumerated", enumerated}, {"brute_force", brute}});
  item.stats = Json{{"pairs", pairs}, {"cyc", enumerated}};
  return item;
}

Item orbit_divisibility(std::uint32_t l, std::uint64_t seed) {
  constexpr int kPairs = 200;
  Item item;
  auto rng = item_rng(seed, l);
  std::uint64_t points_checked = 0;
  for (int t = 0; t < kPairs; ++t) {
    const MatrixGroup g = random_subgroup(l, rng);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    const MatrixGroup h = MatrixGroup::generate(l, {g.elements()[pick(rng)]});
    const auto idx = index(g, h);
    for (const auto& space : {ActionSpace::vectors(l), ActionSpace::cyclic(l)}) {
      const auto on_g = orbit_size_map(orbit_decomposition(g, space));
      const auto on_h = orbit_size_map(orbit_decomposition(h, space));
      for (const auto& [point, size_g] : on_g) {
        ++points_checked;
        const auto size_h = on_h.at(point);
        if ((idx * size_h) % size_g != 0) {
          item.fail(l, spec_of(g),
                    Json{{"subgroup", spec_of(h)}, {"space", to_string(space)}, {"point", to_string(point)},
                         {"orbit_g", size_g}, {"orbit_h", size_h}, {"index", idx}});
        }
      }
    }
  }
  item.stats = Json{{"pairs", kPairs}, {"points", points_checked}};
  return item;
}

Item transitivity(std::uint32_t l) {
  Item item;
  Json sizes = Json::object();
  for (const auto& [name, kind] : {std::pair{"GL2", K::GL2}, std::pair{"Nns", K::NonsplitNormalizer}}) {
    const auto g = standard_group(kind, l);
    const auto d = orbit_decomposition(g, ActionSpace::cyclic(l));
    const auto bfs = orbit_size(g, canonical_cyclic(TorsionVector::e1(l)));
    if (d.sizes() != std::vector<std::uint64_t>{l + 1} || bfs != l + 1) {
      item.fail(l, family_spec(name, l), Json{{"space", "cyc"}, {"orbit_sizes", sizes_json(d)}, {"bfs_orbit", bfs}});
    }
    sizes[name] = sizes_json(d);
  }
  item.stats = sizes;
  return item;
}

Item gell_orbits(std::uint32_t l) {
  Item item;
  const auto nns = standard_group(K::NonsplitNormalizer, l);
  const auto gell = standard_group(K::Gell, l);
  const auto idx = index(nns, gell);
  const auto d = orbit_decomposition(gell, ActionSpace::cyclic(l));
  bool ok = idx == 3;
  for (const auto& o : d.orbits) {
    ok = ok && o.size % 2 == 0 && (3 * o.size) % (l + 1) == 0 && orbit_size(gell, canonical_cyclic(o.representative)) == o.size;
  }
  if (!ok) item.fail(l, family_spec("Gell", l), Json{{"index", idx}, {"space", "cyc"}, {"orbit_sizes", sizes_json(d)}});
  item.stats = Json{{"index", idx}, {"orbit_sizes", sizes_json(d)}};
  return item;
}

bool sorted_equal(std::vector<MatrixGroup> a, std::vector<MatrixGroup> b) {
  auto less = [](const MatrixGroup& x, const MatrixGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

Item prop_even_degree(const Context& ctx, std::uint32_t l) {
  Item item;
  const auto census = ctx.census(CensusFamily::Ns, l);
  const auto constraints = CensusConstraints::all();
  CensusConstraints weak = constraints;
  weak.require_full_det = false;
  std::uint64_t qualifying = 0;
  std::uint64_t weak_det = 0;
  std::uint64_t weak_det_odd = 0;
  for (const auto& g : census) {
    const bool strong = satisfies(g, constraints);
    const bool weak_ok = satisfies(g, weak) && g.det_image().surjective;
    if (!strong && !weak_ok) continue;
    const auto d = orbit_decomposition(g, ActionSpace::cyclic(l));
    const bool all_even = std::all_of(d.orbits.begin(), d.orbits.end(), [](const Orbit& o) { return o.size % 2 == 0; });
    if (weak_ok) {
      ++weak_det;
      weak_det_odd += !all_even;
    }
    if (!strong) continue;
    ++qualifying;
    // Parity oracle: orbit sizes recomputed by direct search.
    bool bfs_even = true;
    for (const auto& o : d.orbits) {
      const auto size = orbit_size(g, canonical_cyclic(o.representative));
      bfs_even = bfs_even && size == o.size && size % 2 == 0;
    }
    if (!all_even || !bfs_even) {
      const auto odd = std::find_if(d.orbits.begin(), d.orbits.end(), [](const Orbit& o) { return o.size % 2 != 0; });
      item.fail(l, spec_of(g),
                Json{{"space", "cyc"},
                     {"orbit_sizes", sizes_json(d)},
                     {"odd_orbit_representative", odd == d.orbits.end() ? "" : to_string(odd->representative)}});
    }
  }
  item.stats = Json{{"census", census.size()}, {"qualifying", qualifying}};
  if (l <= kOracleBound) {
    const bool agrees = sorted_equal(census, all_subgroups(standard_group(K::SplitNormalizer, l)));
    if (!agrees) item.fail(l, family_spec("Ns", l), Json{{"oracle", "census differs from brute-force subgroup search"}});
    item.stats["oracle_agrees"] = agrees;
  }
  item.stats["weak_det_groups"] = weak_det;
  item.stats["weak_det_groups_with_odd_orbit"] = weak_det_odd;
  return item;
}

Item antidiag_action(const Context& ctx, std::uint32_t l) {
  Item item;
  const std::string ns = family_spec("Ns", l);
  auto ck = [l](std::uint64_t k) { return canonical_cyclic(TorsionVector::make(l, static_cast<std::int64_t>(k % l), 1)); };
  // act([[0,b],[c,0]], C_k) = C_{b c^-1 k^-1}
  std::uint64_t formula_cases = 0;
  for (Residue b = 1; b < l; ++b) {
    for (Residue c = 1; c < l; ++c) {
      const Mat2 m = Mat2::make(l, 0, b, c, 0);
      for (Residue k = 1; k < l; ++k) {
        ++formula_cases;
        const auto expected = ck(mul_mod(mul_mod(b, inv_mod(c, l), l), inv_mod(k, l), l));
        const auto got = act_on_cyclic(m, ck(k));
        if (!(got == expected)) {
          item.fail(l, ns,
                    Json{{"formula", "image"}, {"matrix", to_string(m)}, {"k", k}, {"expected", display_name(expected)},
                         {"got", display_name(got)}});
        }
      }
    }
  }
  // C_k = C_{b^2 k^-1} iff k = +-b
  for (Residue b = 1; b < l; ++b) {
    for (Residue k = 1; k < l; ++k) {
      const bool equal = ck(k) == ck(mul_mod(mul_mod(b, b, l), inv_mod(k, l), l));
      const bool plus_minus = k == b || k == l - b;
      if (equal != plus_minus) {
        item.fail(l, ns, Json{{"formula", "fixed-point"}, {"b", b}, {"k", k}, {"equal", equal}});
      }
    }
  }
  // C_b, C_{-b} share a G-orbit iff gamma_0 or [[0,b],[-b^-1,0]] lies in G.
  const Mat2 gamma0 = reflection(l);
  const auto census = ctx.census(CensusFamily::Ns, l);
  const auto constraints = CensusConstraints::all();
  std::uint64_t groups = 0;
  for (const auto& g : census) {
    if (!satisfies(g, constraints)) continue;
    ++groups;
    const auto d = orbit_decomposition(g, ActionSpace::cyclic(l));
    std::map<TorsionVector, std::size_t> orbit_id;
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
      for (const auto& p : d.orbits[i].members) orbit_id[p] = i;
    }
    for (Residue b = 1; b < l; ++b) {
      if (b == l - b) continue;
      const bool same = orbit_id.at(ck(b).generator) == orbit_id.at(ck(l - b).generator);
      const Mat2 twist = Mat2::make(l, 0, b, -static_cast<std::int64_t>(inv_mod(b, l)), 0);
      const bool criterion = g.contains(gamma0) || g.contains(twist);
      if (same != criterion) {
        item.fail(l, spec_of(g),
                  Json{{"formula", "orbit-criterion"}, {"b", b}, {"same_orbit", same}, {"criterion", criterion}});
      }
    }
  }
  item.stats = Json{{"image_cases", formula_cases}, {"census_groups", groups}};
  return item;
}

Item eth_power_minus_one(std::uint32_t l) {
  Item item;
  const Residue minus_one = l - 1;
  Json closed_form_mismatches = Json::array();
  for (std::uint64_t e = 1; e <= 8; ++e) {
    bool brute = false;
    for (Residue y = 1; y < l && !brute; ++y) brute = pow_mod(y, e, l) == minus_one % l;
    const bool euler = is_eth_power(minus_one, e, l);
    const std::uint64_t k = (l - 1) / gcd(e, l - 1);
    const bool parity = l == 2 || k % 2 == 0;
    const bool closed = minus_one_is_eth_power_closed_form(e, l);
    const bool closed_applies = e == 1 || e == 2 || e == 3 || e == 4 || e == 6;
    if (brute != euler || brute != parity || (closed_applies && brute != closed)) {
      item.fail(l, family_spec("Z", std::max<std::uint32_t>(l, 3)),
                Json{{"e", e}, {"brute_force", brute}, {"euler", euler}, {"parity", parity}, {"closed_form", closed}});
    }
    if (!closed_applies && brute != closed) closed_form_mismatches.push_back(e);
  }
  item.stats = Json{{"closed_form_mismatch_outside_cartan_exponents", closed_form_mismatches}};
  return item;
}

Item borel_orbits(std::uint32_t l) {
  Item item;
  const auto b = standard_group(K::Borel, l);
  const auto d = orbit_decomposition(b, ActionSpace::cyclic(l));
  const auto fixed = orbit_size(b, canonical_cyclic(TorsionVector::e1(l)));
  const auto moved = orbit_size(b, canonical_cyclic(TorsionVector::e2(l)));
  if (d.sizes() != std::vector<std::uint64_t>{1, l} || fixed != 1 || moved != l) {
    item.fail(l, family_spec("B", l), Json{{"space", "cyc"}, {"orbit_sizes", sizes_json(d)}});
  }
  item.stats = Json{{"orbit_sizes", sizes_json(d)}};
  return item;
}

Item borel_ss(const Context& ctx, std::uint32_t l) {
  Item item;
  const auto census = ctx.census(CensusFamily::Borel, l);
  const auto borel = standard_group(K::Borel, l);
  const auto cartan = standard_group(K::SplitCartan, l);
  const Mat2 gamma = shear(l);
  for (const auto& g : census) {
    const auto ss = semisimplify_borel(g);
    const bool has_gamma = g.contains(gamma);
    const bool contains_ss = g.contains_group(ss);
    const auto lhs = index(borel, g);
    const auto rhs = index(cartan, ss);
    const bool diagonalizable = classify(g).has(ImageLabel::SplitCartan);
    if (!has_gamma || !contains_ss || lhs != rhs || diagonalizable) {
      item.fail(l, spec_of(g),
                Json{{"gamma_in_G", has_gamma},
                     {"ss_in_G", contains_ss},
                     {"index_B_G", lhs},
                     {"index_Cs_Gss", rhs},
                     {"classified_split_cartan", diagonalizable}});
    }
  }
  const auto expected = subgroups_of_zm_squared(l - 1).size();
  if (census.size() != expected) {
    item.fail(l, family_spec("B", l), Json{{"census", census.size()}, {"subgroups_of_cartan", expected}});
  }
  item.stats = Json{{"census", census.size()}};
  if (l <= kOracleBound) {
    const auto oracle = subgroups_containing(borel, MatrixGroup::generate(l, {gamma}));
    const bool agrees = sorted_equal(census, oracle);
    if (!agrees) item.fail(l, family_spec("B", l), Json{{"oracle", "census differs from brute-force subgroup search"}});
    item.stats["oracle_agrees"] = agrees;
  }
  return item;
}

Item twelfth_power_index(std::uint32_t l) {
  Item item;
  std::map<std::uint64_t, std::uint64_t> histogram;
  const auto subgroups = split_cartan_subgroups(l);
  for (const auto& g : subgroups) {
    const auto idx = index(g, power_subgroup(g, 12));
    ++histogram[idx];
    if (144 % idx != 0) item.fail(l, spec_of(g), Json{{"index", idx}});
  }
  Json hist = Json::object();
  for (const auto& [idx, count] : histogram) hist[std::to_string(idx)] = count;
  item.stats = Json{{"subgroups", subgroups.size()}, {"index_histogram", hist}};
  return item;
}

bool is_tower_exhaustive(std::uint32_t n) { return n == 2 || n == 3 || n == 4 || n == 9; }

// Divisibility data for one subgroup over every orbit of points of order n.
void tower_for_group(const MatrixGroup& g, Item& item, std::uint64_t& pairs) {
  const std::uint32_t n = g.modulus();
  const bool prime_power = as_prime_power(n).prime != 0;
  const auto d = orbit_decomposition(g, ActionSpace::vectors(n, n));
  for (const auto& o : d.orbits) {
    ++pairs;
    const auto& p = o.representative;
    if (!prime_power) {
      const auto deg = point_over_submodule_degree(g, p);
      if (euler_phi(n) % deg != 0) {
        item.fail(n, spec_of(g), Json{{"point", to_string(p)}, {"deg_P_over_C", deg}, {"bound", euler_phi(n)}});
      }
      continue;
    }
    const auto t = tower_indices(g, p);
    if (!t.pass()) {
      item.fail(n, spec_of(g),
                Json{{"point", to_string(p)},
                     {"deg_P_over_C", t.deg_P_over_C},
                     {"deg_P_over_lP", t.deg_P_over_lP},
                     {"deg_C_over_lC", t.deg_C_over_lC},
                     {"deg_lP_over_lC", t.deg_lP_over_lC},
                     {"bound_P_over_C", t.bound_P_over_C},
                     {"bound_P_over_lP", t.bound_P_over_lP},
                     {"bound_C_over_lC", t.bound_C_over_lC},
                     {"multiplicative", t.multiplicative}});
    }
  }
}

Item tower_divisibility(std::uint32_t n, std::uint64_t seed) {
  constexpr int kSamples = 500;
  Item item;
  std::uint64_t pairs = 0;
  std::uint64_t exhaustive = 0;
  if (is_tower_exhaustive(n)) {
    std::vector<Mat2> gens{shear(n), coordinate_swap(n)};
    for (std::uint32_t u = 2; u < n; ++u) {
      if (gcd(u, n) == 1) gens.push_back(Mat2::diag(n, u, 1));
    }
    const auto subgroups = all_subgroups(MatrixGroup::generate(n, gens));
    exhaustive = subgroups.size();
    for (const auto& g : subgroups) tower_for_group(g, item, pairs);
  }
  std::uint64_t sampled = 0;
  if (n >= 5) {
    auto rng = item_rng(seed, n);
    for (int t = 0; t < kSamples; ++t, ++sampled) tower_for_group(random_subgroup(n, rng), item, pairs);
  }
  item.stats = Json{{"exhaustive_subgroups", exhaustive}, {"sampled_subgroups", sampled}, {"point_orbits", pairs}};
  return item;
}

Item cns_eigenpairs(std::uint32_t l) {
  Item item;
  const auto cns = standard_group(K::NonsplitCartan, l);
  const std::string spec = family_spec("Cns", l);
  for (const auto& m : cns.elements()) {
    const auto ev = eigenvalues(m);
    const bool paired = ev[1] == frobenius(ev[0]);
    const bool product = ev[0] * ev[1] == QuadExtElem::base(m.det(), l);
    const bool sum = ev[0] + ev[1] == QuadExtElem::base(m.trace(), l);
    if (!paired || !product || !sum) {
      item.fail(l, spec,
                Json{{"element", to_string(m)}, {"eigenvalues", {to_string(ev[0]), to_string(ev[1])}},
                     {"frobenius_pair", paired}});
    }
  }
  const auto d = orbit_decomposition(cns, ActionSpace::vectors(l));
  const std::uint64_t expected = std::uint64_t{l} * l - 1;
  if (d.sizes() != std::vector<std::uint64_t>{expected}) {
    item.fail(l, spec, Json{{"space", "vec"}, {"orbit_sizes", sizes_json(d)}});
  }
  item.stats = Json{{"elements", cns.order()}, {"vector_orbit_sizes", sizes_json(d)}};
  return item;
}

Item ns_index_survey(const Context& ctx, std::uint32_t l) {
  Item item;
  const auto census = ctx.census(CensusFamily::Ns, l);
  const auto constraints = CensusConstraints::all();
  const auto ns_order = 2 * std::uint64_t{l - 1} * (l - 1);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> histogram;
  std::uint64_t divides = 0;
  std::uint64_t total = 0;
  for (const auto& g : census) {
    if (!satisfies(g, constraints)) continue;
    ++total;
    const auto idx = ns_order / g.order();
    const auto bound = gcd(l - 1, *g.minimal_cartan_power());
    ++histogram[{idx, bound}];
    divides += bound % idx == 0;
  }
  Json hist = Json::object();
  for (const auto& [key, count] : histogram) hist[fmt::format("index={},gcd={}", key.first, key.second)] = count;
  item.stats = Json{{"groups", total}, {"index_divides_gcd", divides}, {"histogram", hist}};
  return item;
}

Item classifier_roundtrip(std::uint32_t l, std::uint64_t seed) {
  constexpr int kConjugators = 50;
  Item item;
  auto rng = item_rng(seed, l);
  const std::pair<K, ImageLabel> families[] = {
      {K::Borel, ImageLabel::Borel},
      {K::SplitCartan, ImageLabel::SplitCartan},
      {K::SplitNormalizer, ImageLabel::SplitNormalizer},
      {K::NonsplitCartan, ImageLabel::NonsplitCartan},
      {K::NonsplitNormalizer, ImageLabel::NonsplitNormalizer},
      {K::GL2, ImageLabel::Full},
  };
  const bool oracle = l <= kOracleBound;
  std::vector<Mat2> gl2_elements;
  if (oracle) gl2_elements = standard_group(K::GL2, l).elements();
  std::uint64_t oracle_groups = 0;
  for (const auto& [kind, label] : families) {
    const auto standard = standard_group(kind, l);
    for (int t = 0; t < kConjugators; ++t) {
      const auto g = conjugate(standard, random_invertible(l, rng));
      const auto cls = classify(g);
      const auto m = cls.conjugator(label);
      bool ok = m.has_value();
      if (ok) {
        for (const auto& x : g.generators()) ok = ok && family_contains(kind, conjugate_by(x, *m));
      }
      if (kind == K::NonsplitCartan) {
        ok = ok && cls.has(ImageLabel::NonsplitNormalizer) && !cls.has(ImageLabel::Borel) &&
             !cls.has(ImageLabel::SplitNormalizer);
      }
      if (!ok) {
        item.fail(l, spec_of(g), Json{{"expected", to_token(label)}, {"labels", cls.tokens()}});
        continue;
      }
      if (!oracle) continue;
      ++oracle_groups;
      // Brute-force conjugator search for every label.
      for (const auto candidate : kAllImageLabels) {
        bool exists = false;
        if (candidate == ImageLabel::Full) {
          exists = g.order() == gl2_elements.size();
        } else {
          const auto tag = family_of(candidate);
          for (const auto& c : gl2_elements) {
            exists = std::all_of(g.generators().begin(), g.generators().end(),
                                 [&](const Mat2& x) { return family_contains(tag, conjugate_by(x, c)); });
            if (exists) break;
          }
        }
        if (exists != cls.has(candidate)) {
          item.fail(l, spec_of(g),
                    Json{{"label", to_token(candidate)}, {"brute_force", exists}, {"labels", cls.tokens()}});
        }
      }
    }
  }
  item.stats = Json{{"groups", std::size(families) * kConjugators}, {"oracle_groups", oracle_groups}};
  return item;
}

// ---------------------------------------------------------------- catalog

const std::vector<CheckInfo> kCatalog = {
    {"cyc-count", "|Cyc| = l + 1 for every prime l", 3, 101, 2, 2000, false, false},
    {"distinct-ck", "<k e1 + e2> = <m e1 + e2> iff k = m, for every modulus n", 2, 60, 2, 200, false, false},
    {"orbit-divisibility", "#O_G(x) | [G:H] #O_H(x) on sampled pairs H <= G", 3, 13, 2, 31, true, false},
    {"transitivity", "GL2(l) and Nns(l) act transitively on Cyc", 5, 47, 3, 47, false, false},
    {"gell-orbits", "[Nns : G(l)] = 3 and every G(l) Cyc-orbit s is even with (l+1) | 3s", 5, 47, 5, 101, false,
     false},
    {"prop-even-degree", "census subgroups of Ns(l) meeting all constraints have only even Cyc-orbits", 5, 31, 5,
     43, false, false},
    {"antidiag-action", "antidiagonal action formulas and the C_b ~ C_-b orbit criterion", 5, 31, 5, 43, false,
     false},
    {"eth-power-minus-one", "-1 is an e'th power mod l: brute force vs Euler, parity and mod 4/8 criteria", 2, 9999,
     2, 100000, false, false},
    {"borel-orbits", "B(l) Cyc-orbit sizes are exactly {1, l}", 3, 31, 3, 101, false, false},
    {"borel-ss", "non-diagonalizable G <= B(l): gamma in G, G^ss <= G, [B:G] = [Cs:G^ss]", 3, 31, 3, 43, false,
     false},
    {"twelfth-power-index", "[G':(G')^12] | 144 for every G' <= Cs(l)", 5, 31, 3, 101, false, false},
    {"tower-divisibility", "stabilizer-index tower bounds phi(n), l^2(l-1), l^k(l-1)^2", 2, 25, 2, 25, true, false},
    {"cns-eigenpairs", "Cns(l) eigenvalues are Frobenius pairs; Cns(l) is transitive on nonzero vectors", 5, 31, 3,
     101, false, false},
    {"ns-index-survey", "histogram of [Ns(l):G] against gcd(l-1, e) over the constrained census", 5, 31, 5, 43,
     false, true},
    {"constants", "2*3*5*7*11*13*17*37 = 18888870; B(c); isogeny-degree set; max{74, 15D+2}", 0, 0, 0, 0, false,
     false},
    {"classifier-roundtrip", "random conjugates of each standard family are re-identified with valid conjugators",
     3, 31, 3, 31, true, false},
};

std::vector<std::uint32_t> tower_moduli(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) {
    if (n <= 12 || n == 25) out.push_back(n);
  }
  return out;
}

Json constants_stats(const RunOptions& options, Item& item) {
  const auto product = constants::non_cm_orbit_prime_product();
  const BigInt expected = 18888870;
  Json stats = Json::object();
  stats["orbit_primes"] = Json(std::vector<std::uint64_t>(constants::kNonCmOrbitPrimesOverQ.begin(),
                                                          constants::kNonCmOrbitPrimesOverQ.end()));
  stats["orbit_prime_product"] = product.str();
  if (product != expected) item.fail(0, "Z(3)", Json{{"product", product.str()}, {"expected", expected.str()}});
  if (options.c_bound) {
    const auto primes = primes_up_to(*options.c_bound);
    stats["c"] = *options.c_bound;
    stats["primes_up_to_c"] = primes;
    stats["B"] = constants::base_change_constant(*options.c_bound).str();
  }
  stats["kenku_degrees"] = Json(std::vector<std::uint32_t>(constants::kKenkuCyclicIsogenyDegrees.begin(),
                                                           constants::kKenkuCyclicIsogenyDegrees.end()));
  if (options.degree) {
    stats["degree"] = *options.degree;
    stats["prime_lower_bound"] = constants::prime_lower_bound_for_degree(*options.degree);
  }
  return stats;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() { return kCatalog; }

const CheckInfo& find_check(std::string_view id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCode::UnknownCheck, fmt::format("unknown check '{}'", id));
}

std::string to_string(CensusFamily family) { return family == CensusFamily::Ns ? "ns" : "borel"; }

std::vector<MatrixGroup> compute_census(CensusFamily family, std::uint32_t l, unsigned jobs) {
  return family == CensusFamily::Ns ? enumerate_ns_subgroups(l, {}, jobs) : enumerate_borel_nondiag(l, jobs);
}

VerificationReport run_check(std::string_view id, const RunOptions& options) {
  const CheckInfo& info = find_check(id);
  VerificationReport report;
  report.check = info.id;
  report.version = kVersion;
  if (info.sampled) report.seed = options.seed;

  if (info.id == "constants") {
    Item item;
    report.params = Json::object();
    report.params["c"] = options.c_bound ? Json(*options.c_bound) : Json(nullptr);
    report.params["degree"] = options.degree ? Json(*options.degree) : Json(nullptr);
    report.stats = constants_stats(options, item);
    report.counterexamples = std::move(item.failures);
    report.status = report.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    return report;
  }

  const std::uint32_t lo = options.l_min.value_or(info.default_min);
  const std::uint32_t hi = options.l_max.value_or(info.default_max);
  if (lo > hi) throw Error(ErrorCode::RangeTooLarge, fmt::format("{}: empty range {}..{}", info.id, lo, hi));
  if (lo < info.cap_min || hi > info.cap_max) {
    throw Error(ErrorCode::RangeTooLarge, fmt::format("{}: range {}..{} outside the supported {}..{}", info.id, lo, hi,
                                                      info.cap_min, info.cap_max));
  }
  const Context ctx{info, options, lo, hi};

  std::vector<std::uint32_t> items;
  std::string quantifier;
  std::function<Item(std::uint32_t)> run;
  const auto seed = options.seed;
  if (info.id == "cyc-count") {
    items = primes_in(lo, hi);
    quantifier = "every prime l in range";
    run = cyc_count;
  } else if (info.id == "distinct-ck") {
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) items.push_back(n);
    quantifier = "every modulus n in range, all pairs 0 <= k < m < n";
    run = distinct_ck;
  } else if (info.id == "orbit-divisibility") {
    items = primes_in(lo, hi);
    quantifier = "200 seeded random pairs H <= G per prime l; every point of vec and cyc";
    run = [seed](std::uint32_t l) { return orbit_divisibility(l, seed); };
  } else if (info.id == "transitivity") {
    items = primes_in(std::max<std::uint32_t>(lo, 3), hi);
    quantifier = "every prime l in range";
    run = transitivity;
  } else if (info.id == "gell-orbits") {
    items = primes_in(lo, hi);
    quantifier = "every prime l in range";
    run = gell_orbits;
  } else if (info.id == "prop-even-degree") {
    items = primes_in(lo, hi);
    quantifier = "exhaustive census of subgroups of Ns(l) meeting the constraints";
    run = [&ctx](std::uint32_t l) { return prop_even_degree(ctx, l); };
  } else if (info.id == "antidiag-action") {
    items = primes_in(lo, hi);
    quantifier = "all b, c, k in F_l^x; exhaustive constrained census of Ns(l)";
    run = [&ctx](std::uint32_t l) { return antidiag_action(ctx, l); };
  } else if (info.id == "eth-power-minus-one") {
    items = primes_in(lo, hi);
    quantifier = "every prime l in range, e = 1..8";
    run = eth_power_minus_one;
  } else if (info.id == "borel-orbits") {
    items = primes_in(lo, hi);
    quantifier = "every prime l in range";
    run = borel_orbits;
  } else if (info.id == "borel-ss") {
    items = primes_in(lo, hi);
    quantifier = "every non-diagonalizable subgroup of B(l)";
    run = [&ctx](std::uint32_t l) { return borel_ss(ctx, l); };
  } else if (info.id == "twelfth-power-index") {
    items = primes_in(lo, hi);
    quantifier = "every subgroup of Cs(l)";
    run = twelfth_power_index;
  } else if (info.id == "tower-divisibility") {
    items = tower_moduli(lo, hi);
    quantifier = "all subgroups of GL2(Z/nZ) for n in {2,3,4,9}; 500 seeded random subgroups for other n >= 5";
    run = [seed](std::uint32_t n) { return tower_divisibility(n, seed); };
  } else if (info.id == "cns-eigenpairs") {
    items = primes_in(lo, hi);
    quantifier = "every element of Cns(l)";
    run = cns_eigenpairs;
  } else if (info.id == "ns-index-survey") {
    items = primes_in(lo, hi);
    quantifier = "exhaustive census of subgroups of Ns(l) meeting the constraints";
    run = [&ctx](std::uint32_t l) { return ns_index_survey(ctx, l); };
  } else {
    items = primes_in(lo, hi);
    quantifier = "50 seeded random conjugates per family per prime l";
    run = [seed](std::uint32_t l) { return classifier_roundtrip(l, seed); };
  }

  report.params = Json::object();
  report.params["l_min"] = lo;
  report.params["l_max"] = hi;
  report.params["quantifier"] = quantifier;
  if (info.id == "prop-even-degree" || info.id == "antidiag-action" || info.id == "ns-index-survey") {
    report.params["constraints"] = CensusConstraints::all().to_string();
  }
  if (info.id == "prop-even-degree" || info.id == "borel-ss" || info.id == "classifier-roundtrip") {
    report.params["oracle_up_to"] = kOracleBound;
  }

  const auto results = parallel_map(items.size(), options.jobs, [&](std::size_t i) { return run(items[i]); });

  Json per_item = Json::object();
  std::uint64_t failures = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    per_item[std::to_string(items[i])] = results[i].stats;
    failures += results[i].failures.size();
    for (const auto& c : results[i].failures) {
      if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back(c);
    }
  }
  report.stats = Json::object();
  report.stats["items"] = items.size();
  report.stats["counterexample_count"] = failures;
  report.stats["per_item"] = std::move(per_item);

  if (info.report_only) {
    report.status = CheckStatus::ReportOnly;
    Json total = Json::object();
    std::map<std::string, std::uint64_t> merged;
    for (const auto& r : results) {
      for (const auto& [key, count] : r.stats["histogram"].items()) merged[key] += count.get<std::uint64_t>();
    }
    for (const auto& [key, count] : merged) total[key] = count;
    report.stats["histogram"] = std::move(total);
  } else {
    report.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return report;
}

}  // namespace gl2lab
