#include <gtest/gtest.h>

#include "gl2lab/census.hpp"
#include "gl2lab/error.hpp"
#include "gl2lab/families.hpp"
#include "gl2lab/subgroup_lattice.hpp"
#include "oracle.hpp"

using namespace gl2lab;
using K = FamilyTag::Kind;

namespace {

oracle::Group as_set(const MatrixGroup& g) {
  oracle::Group s;
  for (const auto& m : g.elements()) s.insert({m.a, m.b, m.c, m.d});
  return s;
}

std::set<oracle::Group> as_sets(const std::vector<MatrixGroup>& gs) {
  std::set<oracle::Group> out;
  for (const auto& g : gs) out.insert(as_set(g));
  return out;
}

}  // namespace

TEST(Census, ConstraintParsing) {
  EXPECT_EQ(CensusConstraints::parse("none").to_string(), "none");
  EXPECT_EQ(CensusConstraints::parse("all").to_string(), "scalars,full-det,not-in-cartan,cartan-power");
  EXPECT_EQ(CensusConstraints::parse("full-det,scalars").to_string(), "scalars,full-det");
  try {
    CensusConstraints::parse("scalars,bogus");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Census, LatticeFormsCountSubgroups) {
  // Number of subgroups of Z/m x Z/m, from the brute-force count of subsets
  // closed under addition.
  for (std::uint32_t m : {1u, 2u, 4u, 6u, 10u, 12u}) {
    std::set<std::set<std::pair<int, int>>> subgroups;
    for (std::uint32_t x1 = 0; x1 < m; ++x1)
      for (std::uint32_t y1 = 0; y1 < m; ++y1)
        for (std::uint32_t x2 = 0; x2 < m; ++x2)
          for (std::uint32_t y2 = 0; y2 < m; ++y2) {
            std::set<std::pair<int, int>> s;
            for (std::uint32_t i = 0; i < m; ++i)
              for (std::uint32_t j = 0; j < m; ++j) s.insert({(i * x1 + j * x2) % m, (i * y1 + j * y2) % m});
            subgroups.insert(s);
          }
    const auto forms = subgroups_of_zm_squared(m);
    EXPECT_EQ(forms.size(), subgroups.size()) << m;
    for (const auto& f : forms) {
      std::size_t count = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) count += f.contains(i, j);
      EXPECT_EQ(count, f.order());
    }
  }
}

TEST(Census, NsContainsNsAndCollapsesCartanExtensions) {
  for (std::uint32_t l : {5u, 7u, 11u}) {
    const auto census = enumerate_ns_subgroups(l);
    const auto ns = standard_group(K::SplitNormalizer, l);
    EXPECT_NE(std::find(census.begin(), census.end(), ns), census.end());
    const auto cs = standard_group(K::SplitCartan, l);
    std::size_t over_cs = 0;
    for (const auto& g : census) over_cs += g.contains_group(cs) && g != cs;
    EXPECT_EQ(over_cs, 1u);
  }
}

TEST(Census, NsMatchesOracle) {
  const auto ns5 = standard_group(K::SplitNormalizer, 5);
  const auto brute = oracle::all_subgroups(as_set(ns5), 5);
  EXPECT_EQ(as_sets(enumerate_ns_subgroups(5)), brute);
  EXPECT_EQ(brute.size(), 34u);
  // Regression value for the fully constrained census at l = 5, from the
  // brute-force list above.
  std::size_t constrained = 0;
  for (const auto& g : all_subgroups(ns5)) constrained += satisfies(g, CensusConstraints::all());
  EXPECT_EQ(enumerate_ns_subgroups(5, CensusConstraints::all()).size(), constrained);
  EXPECT_EQ(constrained, 1u);
  EXPECT_EQ(as_sets(enumerate_ns_subgroups(7)), as_sets(all_subgroups(standard_group(K::SplitNormalizer, 7))));
}

TEST(Census, BorelMatchesOracle) {
  EXPECT_EQ(enumerate_borel_nondiag(3).size(), 5u);
  EXPECT_EQ(enumerate_borel_nondiag(5).size(), 15u);
  for (std::uint32_t l : {3u, 5u}) {
    const auto b = standard_group(K::Borel, l);
    std::set<oracle::Group> brute;
    for (const auto& g : oracle::all_subgroups(as_set(b), l))
      if (g.count({1, 1, 0, 1})) brute.insert(g);
    const auto census = enumerate_borel_nondiag(l);
    EXPECT_EQ(as_sets(census), brute);
    for (const auto& g : census) EXPECT_TRUE(g.contains(shear(l)));
  }
}

// A subgroup of B(l) is non-diagonalizable exactly when it contains a
// nontrivial unipotent; the census must be closed under conjugation by
// diagonal matrices up to that normal form.
TEST(Census, NonDiagonalizableBorelSubgroupsAreCovered) {
  for (std::uint32_t l : {3u, 5u, 7u}) {
    const auto b = standard_group(K::Borel, l);
    const auto census = as_sets(enumerate_borel_nondiag(l));
    const auto cs = standard_group(K::SplitCartan, l);
    const auto gl = standard_group(K::GL2, l);
    std::size_t non_diag = 0;
    for (const auto& g : all_subgroups(b)) {
      bool diagonalizable = false;
      for (const auto& m : gl.elements()) {
        if (cs.contains_group(conjugate(g, m))) {
          diagonalizable = true;
          break;
        }
      }
      if (diagonalizable) continue;
      ++non_diag;
      // Conjugating by diag(u, 1) moves the shear into gamma = [[1,1],[0,1]].
      bool hit = false;
      for (Residue u = 1; u < l && !hit; ++u) hit = census.count(as_set(conjugate(g, Mat2::diag(l, u, 1)))) > 0;
      EXPECT_TRUE(hit);
    }
    EXPECT_GT(non_diag, 0u);
  }
}

TEST(Census, Errors) {
  try {
    enumerate_ns_subgroups(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
  }
  try {
    enumerate_borel_nondiag(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
  }
}
