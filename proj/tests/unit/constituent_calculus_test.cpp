#include "memcost/constituent_calculus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"

namespace memcost {
namespace {

using testing::layout_head_distances;

// SOV layout with explicit head splits (L = words before the head).
std::int64_t sov_layout(int s, int l_s, int o, int l_o, int v, int l_v) {
  return layout_head_distances("SOV", {s, l_s}, {v, l_v}, {o, l_o});
}

std::int64_t svo_layout(int s, int l_s, int v, int l_v, int o, int l_o) {
  return layout_head_distances("SVO", {s, l_s}, {v, l_v}, {o, l_o});
}

TEST(DeltaSovTest, Examples) {
  EXPECT_EQ(delta_sov(0, 0, 0, 0), 3);
  // L_V=1, R_O=0, L_O=2, R_S=0: |V|=2 (head second), |O|=3 (head last), |S|=1
  ASSERT_EQ(sov_layout(1, 0, 3, 2, 2, 1), 7);
  EXPECT_EQ(delta_sov(1, 0, 2, 0), 7);
  EXPECT_EQ(delta_sov(0, 0, 3, 0), 6);
  EXPECT_EQ(delta_sov_left(0, 4), 6);
}

TEST(DeltaSovTest, NegativeSplitIsDomainError) {
  EXPECT_THROW(delta_sov(-1, 0, 0, 0), std::domain_error);
  EXPECT_THROW(delta_sov(0, 0, 0, -2), std::domain_error);
}

TEST(DeltaSvoTest, Examples) {
  EXPECT_EQ(delta_svo(0, 1, 0), 2);
  // R_S=2, |V|=3, L_O=1
  ASSERT_EQ(svo_layout(3, 0, 3, 1, 2, 1), 7);
  EXPECT_EQ(delta_svo(2, 3, 1), 7);
  for (int v = 1; v <= 6; ++v)
    for (int o = 1; o <= 6; ++o) EXPECT_EQ(delta_svo(0, v, o - 1), delta_svo_left(v, o));
  EXPECT_THROW(delta_svo(0, 0, 0), std::domain_error);
}

TEST(LeftRightTest, SovExamples) {
  EXPECT_EQ(delta_sov_left(0, 1), 3);
  EXPECT_EQ(delta_sov_right(0, 1, 1), 3);
  EXPECT_EQ(delta_sov_left(0, 3), 5);
  EXPECT_EQ(delta_sov_right(0, 3, 2), 8);
  EXPECT_EQ(delta_sov_left(2, 1) - delta_sov_right(2, 1, 1), 0);
  EXPECT_THROW(delta_sov_left(0, 0), std::domain_error);
  EXPECT_THROW(delta_sov_right(0, 1, 0), std::domain_error);
}

TEST(LeftRightTest, SvoExamples) {
  EXPECT_EQ(delta_svo_left(1, 2), 3);
  EXPECT_EQ(delta_svo_right(1, 2), 3);
  EXPECT_EQ(delta_svo_left(2, 1), 3);
  EXPECT_EQ(delta_svo_right(2, 5), 7);
  EXPECT_EQ(delta_svo_left(5, 1), 6);
  EXPECT_THROW(delta_svo_right(0, 1), std::domain_error);
}

TEST(LeftRightTest, SplitConsistency) {
  for (int s = 1; s <= 8; ++s)
    for (int o = 1; o <= 8; ++o)
      for (int v = 1; v <= 8; ++v)
        for (int l_v = 0; l_v < v; ++l_v) {
          EXPECT_EQ(delta_sov_left(l_v, o), delta_sov(l_v, 0, o - 1, 0));
          EXPECT_EQ(delta_sov_right(l_v, o, s), delta_sov(l_v, o - 1, 0, s - 1));
          EXPECT_EQ(delta_svo_left(v, o), delta_svo(0, v, o - 1));
          EXPECT_EQ(delta_svo_right(v, s), delta_svo(s - 1, v, 0));
          EXPECT_EQ(delta_sov_right(l_v, o, s) - delta_sov_left(l_v, o), s + o - 2);
        }
}

TEST(LayoutOracleTest, FormulasMatchExplicitLayouts) {
  for (int s = 1; s <= 5; ++s)
    for (int o = 1; o <= 5; ++o)
      for (int v = 1; v <= 5; ++v)
        for (int ls = 0; ls < s; ++ls)
          for (int lo = 0; lo < o; ++lo)
            for (int lv = 0; lv < v; ++lv) {
              const int rs = s - 1 - ls;
              const int ro = o - 1 - lo;
              ASSERT_EQ(delta_sov(lv, ro, lo, rs), sov_layout(s, ls, o, lo, v, lv));
              // no dependence on where V's head sits
              ASSERT_EQ(delta_svo(rs, v, lo), svo_layout(s, ls, v, lv, o, lo));
            }
}

TEST(PreferredSideTest, Examples) {
  EXPECT_EQ(preferred_side(WordOrder::SOV, {1, 4, 1}), Side::Tie);
  EXPECT_EQ(preferred_side(WordOrder::SOV, {2, 1, 1}), Side::Left);
  EXPECT_EQ(preferred_side(WordOrder::SVO, {3, 2, 3}), Side::Tie);
  EXPECT_EQ(preferred_side(WordOrder::SVO, {3, 1, 2}), Side::Left);
  EXPECT_EQ(preferred_side(WordOrder::SVO, {2, 1, 3}), Side::Right);
  EXPECT_THROW(preferred_side(WordOrder::VSO, {1, 1, 1}), std::invalid_argument);
}

TEST(PreferredSideTest, AgreesWithDeltaComparison) {
  for (int s = 1; s <= 10; ++s)
    for (int o = 1; o <= 10; ++o)
      for (int v = 1; v <= 10; ++v) {
        const ConstituentLengths len(s, v, o);
        for (int l_v = 0; l_v <= 5; ++l_v) {
          const auto a = delta_sov_left(l_v, o);
          const auto b = delta_sov_right(l_v, o, s);
          const Side expected = a < b ? Side::Left : (a > b ? Side::Right : Side::Tie);
          EXPECT_EQ(preferred_side(WordOrder::SOV, len), expected);
        }
        const auto a = delta_svo_left(v, o);
        const auto b = delta_svo_right(v, s);
        const Side expected = a < b ? Side::Left : (a > b ? Side::Right : Side::Tie);
        EXPECT_EQ(preferred_side(WordOrder::SVO, len), expected);
      }
}

TEST(ConstituentTypesTest, Validation) {
  EXPECT_THROW(ConstituentLengths(0, 1, 1), std::domain_error);
  EXPECT_THROW(HeadSplit(-1, 0), std::domain_error);
  EXPECT_EQ(HeadSplit::head_last(4).total(), 4);
  EXPECT_EQ(HeadSplit::head_first(4).right, 3);
  EXPECT_THROW(InternalCosts(-1, 0, 0), std::domain_error);
}

TEST(OmegaTest, Examples) {
  EXPECT_EQ(omega_total({0, 0, 0}, 3), 3.0);
  EXPECT_EQ(omega_total({1, 2, 3}, 7), 13.0);
  const InternalCosts left(2, 1, 4), right(3, 3, 1);
  ASSERT_EQ(left.sum(), right.sum());
  EXPECT_EQ(omega_total(left, 5) - omega_total(right, 9), 5.0 - 9.0);
}

TEST(RegressionTest, Examples) {
  const auto r = regression_comparison({1, 1, 1}, {1, 1, 1}, {2, 1, 2}, 0);
  EXPECT_EQ(r.omega_sov_from_left, 3.0 + 4.0);
  EXPECT_EQ(r.omega_sov_from_right, 3.0 + 6.0);
  EXPECT_EQ(r.delta_gap, 2);
  EXPECT_EQ(r.harder_from, Side::Right);
  EXPECT_TRUE(r.conservation_holds);
  EXPECT_FALSE(r.warning.has_value());

  EXPECT_EQ(regression_comparison({}, {}, {1, 3, 1}, 2).harder_from, Side::Tie);
}

TEST(RegressionTest, ConservationViolationWarnsButReports) {
  const auto r = regression_comparison({1, 0, 0}, {5, 0, 0}, {2, 1, 2}, 0);
  EXPECT_FALSE(r.conservation_holds);
  ASSERT_TRUE(r.warning.has_value());
  EXPECT_EQ(r.delta_gap, 2);
  EXPECT_EQ(r.harder_from, Side::Right);
  EXPECT_EQ(r.omega_sov_from_right - r.omega_sov_from_left, 6.0);
}

TEST(LengthDistributionTest, Validation) {
  EXPECT_THROW(LengthDistribution({}), std::invalid_argument);
  EXPECT_THROW(LengthDistribution({{0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(LengthDistribution({{1, 0.5}}), std::invalid_argument);
  EXPECT_THROW(LengthDistribution({{1, 0.5}, {2, -0.5}, {3, 1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(LengthDistribution({{1, 0.25}, {3, 0.75}}));
}

TEST(ExpectedDeltaTest, Examples) {
  const auto uni13 = LengthDistribution({{1, 0.5}, {3, 0.5}});
  EXPECT_EQ(expected_delta_svo(uni13, uni13, LengthDistribution::point(2), Side::Left),
            expected_delta_svo(uni13, uni13, LengthDistribution::point(2), Side::Right));

  const auto s3 = LengthDistribution::point(3), o2 = LengthDistribution::point(2),
             v1 = LengthDistribution::point(1);
  EXPECT_EQ(expected_delta_svo(s3, o2, v1, Side::Left), 3.0);
  EXPECT_EQ(expected_delta_svo(s3, o2, v1, Side::Right), 4.0);

  const auto s2 = LengthDistribution::point(2);
  EXPECT_EQ(expected_delta_svo(s2, uni13, v1, Side::Left), 3.0);
  EXPECT_EQ(expected_delta_svo(s2, uni13, v1, Side::Right), 3.0);
  EXPECT_THROW(expected_delta_svo(s2, uni13, v1, Side::Tie), std::invalid_argument);
}

TEST(ExpectedDeltaTest, PointMassesReduceToFormulas) {
  for (int s = 1; s <= 6; ++s)
    for (int o = 1; o <= 6; ++o)
      for (int v = 1; v <= 6; ++v) {
        const auto ds = LengthDistribution::point(s), dO = LengthDistribution::point(o),
                   dv = LengthDistribution::point(v);
        EXPECT_EQ(expected_delta_svo(ds, dO, dv, Side::Left), double(delta_svo_left(v, o)));
        EXPECT_EQ(expected_delta_svo(ds, dO, dv, Side::Right), double(delta_svo_right(v, s)));
      }
}

}  // namespace
}  // namespace memcost
