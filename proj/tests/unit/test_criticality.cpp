#include <gtest/gtest.h>

#include <cmath>

#include "oksphere/criticality.hpp"
#include "oksphere/energy.hpp"
#include "oksphere/error.hpp"

using namespace oksphere;

TEST(Criticality, DoubleCapIsCriticalForEveryGamma) {
  const auto p = AxisymPattern::make({-0.3, 0.3});
  for (double g : {0.0, 0.5, 10.0}) {
    EXPECT_LT(max_abs(residuals(p, g, p.mass())), 1e-14);
    EXPECT_LT(max_abs(residuals(p, g, p.mass(), Convention::EnergyConsistent)), 1e-14);
  }
}

TEST(Criticality, ThreeInterfaceSolve) {
  const auto c = solve_critical(3, 2.0, uniform_pattern(3));
  const auto z = c.pattern.interfaces();
  EXPECT_NEAR(z[0], -0.590631945662, 1e-11);
  EXPECT_NEAR(z[1], 0.0, 1e-12);
  EXPECT_NEAR(z[2], 0.590631945662, 1e-11);
  EXPECT_LT(c.residual_norm, 1e-11);
  EXPECT_LT(c.lambda_spread, 1e-10);
  EXPECT_NEAR(gamma_of_z1_3(z[2]), 2.0, 1e-9);
}

TEST(Criticality, ExplicitCurveRoundTrip) {
  const auto seed = three_interface_seed(3.0);
  EXPECT_NEAR(gamma_of_z1_3(seed.interfaces()[2]), 3.0, 1e-9);
  const auto seed4 = four_interface_seed(2.0);
  EXPECT_LT(max_abs(residuals(seed4, 2.0)), 1e-8);
}

TEST(Criticality, ConventionFlipsCurveSign) {
  EXPECT_DOUBLE_EQ(gamma_of_z1_3(0.4, Convention::EnergyConsistent), -gamma_of_z1_3(0.4));
}

TEST(Criticality, Asymptotes) {
  const double a3 = gamma3_asymptote();
  EXPECT_NEAR(gamma3_denominator(a3), 0.0, 1e-10);
  EXPECT_NEAR(a3, 0.6909077, 1e-6);
  EXPECT_NEAR(gamma4_asymptote(), 0.7855386, 1e-6);
  try {
    gamma_of_z1_3(a3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Asymptote);
  }
}

TEST(Criticality, SmallZLimitIsOneQuarter) {
  EXPECT_NEAR(gamma_of_z1_3(1e-3), 0.25, 1e-3);
}

TEST(Criticality, UniformPattern) {
  const auto p = uniform_pattern(4);
  EXPECT_DOUBLE_EQ(p.interfaces()[0], -0.75);
  EXPECT_DOUBLE_EQ(p.interfaces()[3], 0.75);
  EXPECT_THROW(uniform_pattern(0), Error);
}

TEST(Criticality, UniformCheckFindsObstruction) {
  EXPECT_TRUE(uniform_criticality_check(2, 10.0).critical_for_all_gamma);
  const auto r = uniform_criticality_check(5, 10.0);
  EXPECT_FALSE(r.critical_for_all_gamma);
  EXPECT_GT(r.min_residual_over_sweep, 0.1);
}

TEST(Criticality, PolarCapBound) {
  EXPECT_EQ(polar_cap_bound(0.0), -0.5);
  EXPECT_NEAR(polar_cap_bound(1.0), -0.9411527112, 1e-9);
  EXPECT_THROW(polar_cap_bound(-1.0), Error);
}

TEST(Criticality, ContinuationStaysOnBranch) {
  const auto branch = continue_gamma(3, 2.0, 4.0, 5, uniform_pattern(3));
  ASSERT_EQ(branch.size(), 6u);
  for (const auto& c : branch) {
    EXPECT_LT(c.residual_norm, 1e-10);
    EXPECT_NEAR(gamma_of_z1_3(c.pattern.interfaces()[2]), c.gamma, 1e-8);
  }
}

TEST(Criticality, GapDiagnostics) {
  const auto g = gap_diagnostics(AxisymPattern::make({-0.5, 0.0, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(g.min_gap, 0.5);
}
