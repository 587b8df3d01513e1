#include "memcost/cost_core.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"

namespace memcost {
namespace {

// Unvalidated table; lets tests feed shapes CostFunction would reject.
struct RawTable {
  std::vector<double> values;
  double operator()(int d) const { return values.at(static_cast<std::size_t>(d - 1)); }
  int max_length() const { return static_cast<int>(values.size()); }
};

std::vector<CostFunction> builtin_costs() {
  return {CostFunction::identity(), CostFunction::power(2.0), CostFunction::power(0.5),
          CostFunction::exponential(2.0), CostFunction::affine(3.0, 1.0)};
}

// --- total_cost -------------------------------------------------------------

TEST(TotalCostTest, WorkedExampleThreeDependents) {
  const auto id = CostFunction::identity();
  EXPECT_EQ(total_cost(3, 1, id), 6.0);
  EXPECT_EQ(total_cost(3, 2, id), 4.0);
  EXPECT_EQ(total_cost(3, 4, id), 6.0);
}

TEST(TotalCostTest, TenDependentsHeadFirst) {
  const auto id = CostFunction::identity();
  const double oracle = testing::brute_head_cost(10, 1, [](int d) { return double(d); });
  ASSERT_EQ(oracle, 55.0);
  EXPECT_EQ(total_cost(10, 1, id), 55.0);
}

TEST(TotalCostTest, SquaredCostFourDependents) {
  const double oracle = testing::brute_head_cost(4, 3, [](int d) { return double(d * d); });
  ASSERT_EQ(oracle, 10.0);
  EXPECT_EQ(total_cost(4, 3, CostFunction::power(2.0)), 10.0);
}

TEST(TotalCostTest, SingleDependentIsAllowed) {
  EXPECT_EQ(total_cost(1, 1, CostFunction::identity()), 1.0);
  EXPECT_EQ(total_cost(1, 2, CostFunction::identity()), 1.0);
}

TEST(TotalCostTest, RejectsBadPositionsAndShortTables) {
  const auto id = CostFunction::identity();
  EXPECT_THROW(total_cost(3, 0, id), std::domain_error);
  EXPECT_THROW(total_cost(3, 5, id), std::domain_error);
  EXPECT_THROW(total_cost(0, 1, id), std::domain_error);
  EXPECT_THROW(total_cost(4, 1, CostFunction::table({1, 2, 3})), std::domain_error);
  EXPECT_NO_THROW(total_cost(3, 1, CostFunction::table({1, 2, 3})));
}

TEST(TotalCostTest, MatchesBruteForcePlacement) {
  for (const auto& g : builtin_costs())
    for (int n = 1; n <= 12; ++n)
      for (int l = 1; l <= n + 1; ++l)
        EXPECT_NEAR(total_cost(n, l, g), testing::brute_head_cost(n, l, [&](int d) { return g(d); }),
                    1e-9);
}

TEST(TotalCostTest, SymmetricInHeadPosition) {
  for (const auto& g : builtin_costs())
    for (int n = 1; n <= 15; ++n)
      for (int l = 1; l <= n + 1; ++l)
        EXPECT_NEAR(total_cost(n, l, g), total_cost(n, n + 2 - l, g), kCostTolerance);
}

// --- closed form -------------------------------------------------------------

TEST(TotalCostIdentityTest, Examples) {
  EXPECT_EQ(total_cost_identity(3, 4), 6);
  EXPECT_EQ(total_cost_identity(10, 6), 30);
  EXPECT_EQ(total_cost_identity(1, 1), 1);
  EXPECT_EQ(total_cost_identity(1, 2), 1);
}

TEST(TotalCostIdentityTest, AgreesWithSummation) {
  const auto id = CostFunction::identity();
  for (int n = 1; n <= 50; ++n)
    for (int l = 1; l <= n + 1; ++l)
      ASSERT_EQ(static_cast<double>(total_cost_identity(n, l)), total_cost(n, l, id))
          << "n = " << n << ", l = " << l;
}

TEST(TotalCostIdentityTest, RejectsOutOfRange) {
  EXPECT_THROW(total_cost_identity(3, 5), std::domain_error);
}

// --- discrete derivative -------------------------------------------------------

TEST(DiscreteDerivativeTest, Examples) {
  const auto id = CostFunction::identity();
  EXPECT_EQ(discrete_derivative(3, 2, id), 0.0);
  EXPECT_EQ(discrete_derivative(3, 1, id), -2.0);
  EXPECT_EQ(discrete_derivative(4, 4, CostFunction::power(2.0)), 15.0);
}

TEST(DiscreteDerivativeTest, DomainIsOneToN) {
  const auto id = CostFunction::identity();
  EXPECT_THROW(discrete_derivative(3, 0, id), std::domain_error);
  EXPECT_THROW(discrete_derivative(3, 4, id), std::domain_error);
}

TEST(DiscreteDerivativeTest, EqualsForwardDifferenceAndSignRule) {
  for (const auto& g : builtin_costs())
    for (int n = 1; n <= 14; ++n)
      for (int l = 1; l <= n; ++l) {
        const double delta = discrete_derivative(n, l, g);
        EXPECT_NEAR(total_cost(n, l + 1, g) - total_cost(n, l, g), delta, 1e-9);
        // compare 2l against n + 1 to stay in integers
        if (2 * l < n + 1) {
          EXPECT_LT(delta, 0.0);
        } else if (2 * l > n + 1) {
          EXPECT_GT(delta, 0.0);
        } else {
          EXPECT_EQ(delta, 0.0);
        }
      }
}

// --- landscape / placements ------------------------------------------------------

TEST(LandscapeTest, ThreeDependents) {
  const Landscape land = landscape(3, CostFunction::identity());
  EXPECT_EQ(land.costs, (std::vector<double>{6, 4, 4, 6}));
  EXPECT_EQ(land.minima, (PositionSet{2, 3}));
  EXPECT_EQ(land.maxima, (PositionSet{1, 4}));
}

TEST(LandscapeTest, TenDependents) {
  const Landscape land = landscape(10, CostFunction::identity());
  ASSERT_EQ(land.costs.size(), 11u);
  for (int l = 1; l <= 11; ++l)
    EXPECT_EQ(land.cost_at(l), static_cast<double>(total_cost_identity(10, l)));
  EXPECT_EQ(land.minima, PositionSet{6});
  EXPECT_EQ(land.min_cost(), 30.0);
  EXPECT_EQ(land.maxima, (PositionSet{1, 11}));
  EXPECT_EQ(land.max_cost(), 55.0);
}

TEST(LandscapeTest, TwoDependentsAnyCost) {
  for (const auto& g : builtin_costs()) {
    const Landscape land = landscape(2, g);
    EXPECT_EQ(land.minima, PositionSet{2});
    EXPECT_EQ(land.maxima, (PositionSet{1, 3}));
  }
}

TEST(LandscapeTest, RejectsSingleDependent) {
  EXPECT_THROW(landscape(1, CostFunction::identity()), std::domain_error);
  EXPECT_THROW(optimal_placements(1), std::domain_error);
  EXPECT_THROW(worst_placements(0), std::domain_error);
}

TEST(PlacementTest, Examples) {
  EXPECT_EQ(optimal_placements(3, CostFunction::identity()), (PositionSet{2, 3}));
  EXPECT_EQ(optimal_placements(10, CostFunction::exponential(3.0)), PositionSet{6});
  const auto exp2 = CostFunction::exponential(2.0);
  const auto enumerated = argmin_positions(cost_vector(5, exp2));
  EXPECT_EQ(enumerated, (PositionSet{3, 4}));
  EXPECT_EQ(optimal_placements(5, exp2), enumerated);
  EXPECT_EQ(optimal_placements(5, exp2), optimal_placements(5, CostFunction::identity()));
}

TEST(PlacementTest, ClosedFormAgainstEnumeratedLandscapes) {
  std::mt19937_64 rng(20240601);
  std::vector<CostFunction> gs = builtin_costs();
  for (int i = 0; i < 100; ++i) gs.push_back(CostFunction::table(testing::random_strict_table(rng, 9)));
  for (int n = 2; n <= 9; ++n)
    for (const auto& g : gs) {
      std::vector<double> costs;
      for (int l = 1; l <= n + 1; ++l)
        costs.push_back(testing::brute_head_cost(n, l, [&](int d) { return g(d); }));
      EXPECT_EQ(argmin_positions(costs), optimal_placements(n, g)) << g.describe();
      EXPECT_EQ(argmax_positions(costs), worst_placements(n, g)) << g.describe();
      EXPECT_NEAR(costs.front(), costs.back(), kCostTolerance);
    }
}

TEST(PlacementTest, TableTooShortIsRejected) {
  EXPECT_THROW(optimal_placements(5, CostFunction::table({1, 2, 3})), std::domain_error);
}

// --- star extremes -------------------------------------------------------------

TEST(StarExtremesTest, Examples) {
  EXPECT_EQ(star_extremes_identity(4), (StarExtremes{6, 4}));
  EXPECT_EQ(star_extremes_identity(11), (StarExtremes{55, 30}));
  EXPECT_EQ(star_extremes_identity(5), (StarExtremes{10, 6}));
  EXPECT_THROW(star_extremes_identity(2), std::domain_error);
}

TEST(StarExtremesTest, MatchLandscapeExtremes) {
  for (int N = 3; N <= 40; ++N) {
    const Landscape land = landscape(N - 1, CostFunction::identity());
    const StarExtremes ex = star_extremes_identity(N);
    EXPECT_EQ(land.max_cost(), static_cast<double>(ex.max));
    EXPECT_EQ(land.min_cost(), static_cast<double>(ex.min));
  }
}

// --- quasi-convexity -------------------------------------------------------------

TEST(QuasiConvexTest, Examples) {
  EXPECT_TRUE(check_quasiconvex({6, 4, 4, 6}));
  EXPECT_TRUE(check_quasiconvex({1, 1, 1}));
  EXPECT_FALSE(check_quasiconvex({4, 6, 4}));
}

TEST(QuasiConvexTest, LandscapesAreQuasiConvex) {
  for (const auto& g : builtin_costs())
    for (int n = 2; n <= 20; ++n) EXPECT_TRUE(check_quasiconvex(landscape(n, g).costs));
}

TEST(QuasiConvexTest, NonMonotoneCostCanBreakIt) {
  // g = 1, 10, 2, 3 gives D = 16, 14, 22, 14, 16
  const RawTable bumpy{{1, 10, 2, 3}};
  const auto costs = cost_vector(4, bumpy);
  EXPECT_EQ(costs, (std::vector<double>{16, 14, 22, 14, 16}));
  EXPECT_FALSE(check_quasiconvex(costs));
}

TEST(QuasiConvexTest, ValleyCheckMatchesExhaustive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> value(0, 4);
  std::uniform_int_distribution<int> length(1, 8);
  for (int trial = 0; trial < 5000; ++trial) {
    std::vector<double> v(static_cast<std::size_t>(length(rng)));
    for (auto& x : v) x = value(rng);
    ASSERT_EQ(check_quasiconvex_valley(v), check_quasiconvex(v));
  }
}

}  // namespace
}  // namespace memcost
