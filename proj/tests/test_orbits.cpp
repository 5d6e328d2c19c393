#include <fmt/format.h>
#include <gtest/gtest.h>

#include "gl2lab/error.hpp"
#include "gl2lab/families.hpp"
#include "gl2lab/group_spec.hpp"
#include "gl2lab/orbits.hpp"
#include "oracle.hpp"

using namespace gl2lab;
using K = FamilyTag::Kind;

namespace {

std::multiset<std::size_t> sizes_of(const OrbitDecomposition& d) {
  std::multiset<std::size_t> out;
  for (auto s : d.sizes()) out.insert(s);
  return out;
}

oracle::Group as_set(const MatrixGroup& g) {
  oracle::Group s;
  for (const auto& m : g.elements()) s.insert({m.a, m.b, m.c, m.d});
  return s;
}

}  // namespace

TEST(Orbits, NamedExamples) {
  EXPECT_EQ(orbit_decomposition(standard_group(K::Borel, 7), ActionSpace::cyclic(7)).sizes(),
            (std::vector<std::uint64_t>{1, 7}));
  EXPECT_EQ(orbit_decomposition(standard_group(K::SplitNormalizer, 5), ActionSpace::cyclic(5)).sizes(),
            (std::vector<std::uint64_t>{2, 4}));
  EXPECT_EQ(orbit_decomposition(standard_group(K::GL2, 11), ActionSpace::cyclic(11)).sizes(),
            (std::vector<std::uint64_t>{12}));
}

TEST(Orbits, MatchOracle) {
  for (const char* spec : {"Ns(7)", "Gell(7)", "CsPow(7,3)", "gen(8;[[3,1],[0,5]],[[1,0],[2,1]])",
                           "gen(9;[[1,3],[0,1]],[[2,0],[0,1]])", "gen(12;[[5,0],[0,7]],[[0,1],[1,0]])"}) {
    const auto g = parse_group_spec(spec);
    const auto d = orbit_decomposition(g, ActionSpace::cyclic(g.modulus()));
    EXPECT_EQ(sizes_of(d), oracle::cyc_orbit_sizes(as_set(g), g.modulus())) << spec;
    std::uint64_t total = 0;
    for (const auto& o : d.orbits) {
      total += o.size;
      EXPECT_EQ(o.representative, o.members.front());
      EXPECT_EQ(orbit_size(g, canonical_cyclic(o.representative)), o.size);
    }
    EXPECT_EQ(total, enumerate_cyclic(g.modulus()).size());
  }
}

TEST(Orbits, OrbitStabilizer) {
  const auto g = parse_group_spec("gen(9;[[1,1],[0,1]],[[2,0],[0,5]],[[1,0],[3,1]])");
  for (const auto& v : ActionSpace::vectors(9).points()) {
    EXPECT_EQ(stabilizer(g, v).order() * orbit_size(g, v), g.order());
    const auto c = canonical_cyclic(v);
    EXPECT_EQ(stabilizer(g, c).order() * orbit_size(g, c), g.order());
  }
  const auto triv = MatrixGroup::generate(5, {});
  EXPECT_EQ(stabilizer(triv, TorsionVector::e1(5)).order(), 1u);
  EXPECT_EQ(stabilizer(standard_group(K::GL2, 7), canonical_cyclic(TorsionVector::e1(7))),
            standard_group(K::Borel, 7));
}

TEST(Orbits, VectorSpaceRestrictedByOrder) {
  const auto g = parse_group_spec("GL2(3)");
  EXPECT_EQ(orbit_decomposition(g, ActionSpace::vectors(3)).sizes(), (std::vector<std::uint64_t>{8}));
  const auto h = parse_group_spec("gen(9;[[1,0],[0,1]])");
  EXPECT_EQ(orbit_decomposition(h, ActionSpace::vectors(9, 3)).orbits.size(), 8u);
  EXPECT_EQ(to_string(ActionSpace::vectors(9, 3)), "vec(n=9,order=3)");
  try {
    orbit_decomposition(h, ActionSpace::cyclic(9, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDivisor);
  }
}

TEST(Tower, Examples) {
  const auto gl = standard_group(K::GL2, 7);
  EXPECT_EQ(tower_indices(gl, TorsionVector::e1(7)).deg_P_over_C, 6u);
  const auto triv = MatrixGroup::generate(9, {});
  const auto t = tower_indices(triv, TorsionVector::e1(9));
  EXPECT_EQ(t.deg_P_over_C, 1u);
  EXPECT_EQ(t.deg_P_over_lP, 1u);
  EXPECT_EQ(t.deg_C_over_lC, 1u);
  try {
    tower_indices(MatrixGroup::generate(6, {}), TorsionVector::e1(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
  }
  try {
    tower_indices(triv, TorsionVector::make(9, 3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongOrder);
  }
}

TEST(Tower, FullGroupAtPrimeSquare) {
  // diag(u, 1) with u generating the units mod l^2.
  for (auto [l, u] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    const std::uint32_t n = l * l;
    const auto g = parse_group_spec(fmt::format("gen({};[[1,1],[0,1]],[[0,1],[1,0]],[[{},0],[0,1]])", n, u));
    ASSERT_EQ(g.order(), gl2_order(n));
    const auto t = tower_indices(g, TorsionVector::e1(n));
    EXPECT_TRUE(t.pass());
    // P ranges over the l^2 lifts of lP, all of which are GL2-translates.
    EXPECT_EQ(t.deg_P_over_lP, std::uint64_t{l} * l);
    EXPECT_EQ(t.deg_P_over_C, euler_phi(n));
  }
}
