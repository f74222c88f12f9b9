#include <gtest/gtest.h>

#include <cmath>

#include "oksphere/criticality.hpp"
#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/stability.hpp"

using namespace oksphere;

TEST(Stability, FourierLogClosedForm) {
  EXPECT_NEAR(fourier_log_integral(5.0, 3.0, 1), -2.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(fourier_log_integral(5.0, 3.0, 0), 2.0 * kPi * std::log(4.5), 1e-14);
  // a = b: q = 1.
  EXPECT_NEAR(fourier_log_integral(2.0, 2.0, 2), -kPi, 1e-14);
  for (unsigned k : {0u, 1u, 3u, 7u}) {
    EXPECT_NEAR(fourier_log_integral(5.0, 3.0, k), fourier_log_integral_quadrature(5.0, 3.0, k),
                1e-11);
  }
  EXPECT_THROW(fourier_log_integral(1.0, 2.0, 1), Error);
}

TEST(Stability, KernelDoubleIntegral) {
  for (unsigned k : {1u, 2u, 3u}) {
    EXPECT_NEAR(doublecap_kernel_integral(k), -2.0 * kPi * kPi / (k * std::pow(3.0, k)), 1e-14);
    EXPECT_NEAR(doublecap_kernel_quadrature(k), doublecap_kernel_integral(k), 1e-9);
  }
}

TEST(Stability, SingleModeFormula) {
  EXPECT_NEAR(single_mode_J(0.9, 10.0, 2), 3.0 / std::sqrt(0.19) + 40.0 * (0.095 - 0.1), 1e-12);
  EXPECT_NEAR(single_mode_J(0.9, 10.0, 2), 6.68247, 1e-5);
  EXPECT_THROW(axisym_pm_bound(0.0, 1.0), Error);
}

TEST(Stability, RejectsNonCriticalPattern) {
  try {
    assemble_J(AxisymPattern::make({-0.5, 0.1, 0.5}), 1.0, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCritical);
  }
}

TEST(Stability, MatrixIsSymmetric) {
  const auto J = assemble_J(AxisymPattern::make({-0.5, 0.5}), 1.0, 8);
  EXPECT_LT((J.matrix - J.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(J.matrix.rows(), static_cast<Eigen::Index>(2 + 2 * 2 * 8));
}

TEST(Stability, DoubleCapAtZeroGamma) {
  // Perimeter alone: shrinking one cap and growing the other is unstable.
  const auto r = min_eig_constrained(assemble_J(AxisymPattern::make({-0.5, 0.5}), 0.0, 8));
  EXPECT_NEAR(r.min_eig, -4.0 / 3.0, 1e-10);
  EXPECT_EQ(r.mode.k, 0u);
  EXPECT_EQ(r.verdict, Verdict::CertifiedUnstable);
}

TEST(Stability, DoubleCapThreshold) {
  const auto p = AxisymPattern::make({-0.5, 0.5});
  const auto below = min_eig_constrained(assemble_J(p, 0.5, 16));
  EXPECT_LT(below.min_eig, -0.5);
  const auto above = min_eig_constrained(assemble_J(p, 2.0, 16));
  // Rigid rotations leave a zero mode.
  EXPECT_NEAR(above.min_eig, 0.0, 1e-9);
  EXPECT_EQ(above.verdict, Verdict::NoCertificate);
}

TEST(Stability, TruncationConverged) {
  const auto p = AxisymPattern::make({-0.5, 0.5});
  const double a = min_eig_constrained(assemble_J(p, 0.5, 16)).min_eig;
  const double b = min_eig_constrained(assemble_J(p, 0.5, 32)).min_eig;
  EXPECT_NEAR(a, b, 1e-10);
}

TEST(Stability, SingleCapHasNoNegativeDirection) {
  const auto r = min_eig_constrained(assemble_J(AxisymPattern::make({0.3}), 0.0, 8));
  EXPECT_GE(r.min_eig, -1e-12);
}

TEST(Stability, PlusMinusBoundDominatesExactValue) {
  const auto c = solve_critical(3, 2.0, uniform_pattern(3));
  const auto J = assemble_J(c.pattern, 2.0, 4);
  const double exact = axisym_pm_exact(J);
  EXPECT_NEAR(exact, 10.2246, 1e-3);
  EXPECT_LE(exact, axisym_pm_bound(c.pattern.interfaces().back(), 2.0));
}
