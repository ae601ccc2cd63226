// Sanity of the test oracles themselves against textbook values.

#include <gtest/gtest.h>

#include "oracles/braid.hpp"
#include "oracles/laplace_det.hpp"
#include "oracles/skein_conway.hpp"
#include "test_support.hpp"

namespace {

TEST(BraidClosure, TrefoilIsOneComponentWithThreeCrossings) {
  const auto cb = oracle::close_braid({1, 1, 1}, 2);
  EXPECT_EQ(cb.components.size(), 1U);
  EXPECT_EQ(cb.code(), "U1+O2+U3+O1+U2+O3+");
}

TEST(BraidClosure, ComponentCountFollowsPermutation) {
  EXPECT_EQ(oracle::close_braid({1, 1}, 2).components.size(), 2U);
  EXPECT_EQ(oracle::close_braid({1, 2, 1}, 3).components.size(), 2U);
  EXPECT_EQ(oracle::close_braid({}, 3).components.size(), 3U);
}

TEST(SkeinConway, KnownKnots) {
  using oracle::Poly;
  EXPECT_EQ(oracle::skein_conway(""), (Poly{1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, 1, 1}, 2).code()), (Poly{1, 0, 1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, -2, 1, -2}, 3).code()), (Poly{1, 0, -1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, 1, 1, 1, 1}, 2).code()), (Poly{1, 0, 3, 0, 1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, 1, 1, 2, -1, 2}, 3).code()), (Poly{1, 0, 2}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, 1, 1, 1, 1, 1, 1}, 2).code()), (Poly{1, 0, 6, 0, 5, 0, 1}));
}

TEST(SkeinConway, LinksAndMirrors) {
  using oracle::Poly;
  // Hopf link: z; two-component unlink: 0
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({1, 1}, 2).code()), (Poly{0, 1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({-1, -1}, 2).code()), (Poly{0, -1}));
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({}, 2).code()), Poly{});
  EXPECT_EQ(oracle::skein_conway(oracle::close_braid({-1, -1, -1}, 2).code()), (Poly{1, 0, 1}));
}

TEST(SkeinConway, ClassicalDeterminants) {
  EXPECT_EQ(support::classical_det({1, 0, 1}), 3);
  EXPECT_EQ(support::classical_det({1, 0, -1}), 5);
  EXPECT_EQ(support::classical_det({1, 0, 3, 0, 1}), 5);
  EXPECT_EQ(support::classical_det({1, 0, 2}), 7);
}

TEST(LaplaceDet, SmallMatrices) {
  EXPECT_EQ(oracle::laplace_det({}), 1);
  EXPECT_EQ(oracle::laplace_det({{5}}), 5);
  EXPECT_EQ(oracle::laplace_det({{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(oracle::laplace_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 24);
  EXPECT_EQ(oracle::laplace_det({{0, 1}, {1, 0}}), -1);
}

TEST(ClassicalKnots, GeneratorProducesDistinctKnots) {
  const auto knots = support::classical_knots(20);
  ASSERT_EQ(knots.size(), 20U);
  for (const auto& k : knots) EXPECT_LE(vknot::parse_gauss_code(k.code).chord_count(), 8U) << k.label;
}

}  // namespace
