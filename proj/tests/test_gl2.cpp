#include <gtest/gtest.h>

#include "gl2lab/error.hpp"
#include "gl2lab/mat2.hpp"
#include "gl2lab/torsion.hpp"
#include "oracle.hpp"

using namespace gl2lab;

TEST(Mat2, Products) {
  const std::uint32_t n = 11;
  const Mat2 m = Mat2::make(n, 3, 4, 5, 7);
  EXPECT_EQ(Mat2::identity(n) * m, m);
  const Mat2 w = coordinate_swap(n);
  EXPECT_EQ(w * Mat2::diag(n, 2, 9) * w, Mat2::diag(n, 9, 2));
  for (std::int64_t b = 1; b < n; ++b) {
    const auto bi = inv_mod(static_cast<Residue>(b), n);
    EXPECT_EQ(reflection(n) * Mat2::make(n, 0, b, bi, 0), Mat2::make(n, 0, b, -std::int64_t(bi), 0));
  }
}

TEST(Mat2, ProductMatchesOracle) {
  const std::uint32_t n = 6;
  for (std::uint64_t c1 = 0; c1 < 1296; c1 += 7) {
    for (std::uint64_t c2 = 0; c2 < 1296; c2 += 11) {
      const auto x = Mat2::from_code(n, c1);
      const auto y = Mat2::from_code(n, c2);
      const auto z = x * y;
      const auto o = oracle::mul({x.a, x.b, x.c, x.d}, {y.a, y.b, y.c, y.d}, n);
      EXPECT_EQ((oracle::M{z.a, z.b, z.c, z.d}), o);
    }
  }
}

TEST(Mat2, Inverses) {
  EXPECT_EQ(mat_inv(coordinate_swap(9)), coordinate_swap(9));
  EXPECT_EQ(mat_inv(shear(9)), Mat2::make(9, 1, 8, 0, 1));
  try {
    mat_inv(Mat2::make(9, 1, 1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Mat2, ElementOrders) {
  EXPECT_EQ(element_order(Mat2::identity(7)), 1u);
  EXPECT_EQ(element_order(shear(13)), 13u);
  EXPECT_EQ(element_order(Mat2::diag(5, 2, 1)), 4u);
  EXPECT_EQ(gl2_order(5), 480u);
  EXPECT_EQ(gl2_order(4), 96u);
  EXPECT_EQ(gl2_order(9), oracle::gl2(9).size());
}

TEST(Mat2, Eigenvalues) {
  const std::uint32_t l = 7;
  auto ev = eigenvalues(Mat2::diag(l, 2, 5));
  EXPECT_EQ(ev[0], QuadExtElem::base(2, l));
  EXPECT_EQ(ev[1], QuadExtElem::base(5, l));
  ev = eigenvalues(shear(l));
  EXPECT_EQ(ev[0], QuadExtElem::base(1, l));
  EXPECT_EQ(ev[1], QuadExtElem::base(1, l));
  const Residue eps = least_generator(l);
  for (std::int64_t a = 0; a < l; ++a) {
    for (std::int64_t b = 1; b < l; ++b) {
      ev = eigenvalues(Mat2::make(l, a, b * eps, b, a));
      const auto plus = QuadExtElem::make(a, b, l);
      EXPECT_TRUE((ev[0] == plus && ev[1] == frobenius(plus)) || (ev[1] == plus && ev[0] == frobenius(plus)));
    }
  }
}

TEST(Mat2, LiteralRoundTrip) {
  const Mat2 m = Mat2::make(25, 3, 24, 0, 7);
  EXPECT_EQ(to_string(m), "[[3,24],[0,7]]");
  EXPECT_EQ(parse_mat2("[[3,24],[0,7]]", 25), m);
  EXPECT_EQ(parse_mat2(" [ [3 , 24] , [0,7] ] ", 25), m);
  for (const char* bad : {"[[1,2],[3]]", "[[1,2],[3,4]", "1,2,3,4", "[[1,x],[3,4]]"}) {
    try {
      parse_mat2(bad, 25);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Torsion, VectorOrders) {
  EXPECT_EQ(vector_order(TorsionVector::e1(12)), 12u);
  EXPECT_EQ(vector_order(TorsionVector::make(8, 2, 4)), 4u);
  try {
    vector_order(TorsionVector::make(8, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Torsion, Canonicalization) {
  EXPECT_EQ(canonical_cyclic(TorsionVector::make(5, 1, 0)).generator, TorsionVector::e1(5));
  EXPECT_EQ(canonical_cyclic(TorsionVector::make(5, 3, 1)).generator, TorsionVector::make(5, 3, 1));
  EXPECT_EQ(canonical_cyclic(TorsionVector::make(5, 2, 4)).generator, TorsionVector::make(5, 3, 1));
  EXPECT_EQ(display_name(canonical_cyclic(TorsionVector::make(5, 2, 4))), "C_3");
  EXPECT_EQ(display_name(canonical_cyclic(TorsionVector::e1(5))), "C_inf");
}

TEST(Torsion, EnumerationMatchesBruteForce) {
  EXPECT_EQ(enumerate_cyclic(4, 4).size(), 6u);
  EXPECT_TRUE(enumerate_cyclic(2, 1).empty());
  for (std::uint32_t n = 2; n <= 30; ++n) {
    const auto cyc = enumerate_cyclic(n);
    EXPECT_EQ(cyc.size(), oracle::cyclic_submodules(n).size()) << n;
    EXPECT_TRUE(std::is_sorted(cyc.begin(), cyc.end()));
    if (oracle::prime(n)) EXPECT_EQ(cyc.size(), n + 1u);
    // Canonical generators generate pairwise different sets.
    std::set<std::set<oracle::V>> spans;
    for (const auto& c : cyc) spans.insert(oracle::span({c.generator.x, c.generator.y}, n));
    EXPECT_EQ(spans.size(), cyc.size());
  }
  try {
    enumerate_cyclic(6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDivisor);
  }
}

TEST(Torsion, ActionOnCyclic) {
  const std::uint32_t l = 13;
  const CyclicSubmodule c = canonical_cyclic(TorsionVector::make(l, 4, 1));
  EXPECT_EQ(act_on_cyclic(Mat2::identity(l), c), c);
  for (std::int64_t b = 1; b < l; ++b) {
    for (std::int64_t cc = 1; cc < l; ++cc) {
      for (std::int64_t k = 1; k < l; ++k) {
        const auto image = act_on_cyclic(Mat2::make(l, 0, b, cc, 0), canonical_cyclic(TorsionVector::make(l, k, 1)));
        const auto expected = mul_mod(mul_mod(b, inv_mod(cc, l), l), inv_mod(k, l), l);
        EXPECT_EQ(image.generator, TorsionVector::make(l, expected, 1));
      }
    }
  }
}
