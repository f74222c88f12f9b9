#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "oksphere/error.hpp"
#include "oksphere/criticality.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/potential.hpp"
#include "oksphere/stability.hpp"
#include "oksphere/verify.hpp"

using namespace oksphere;

namespace {

// Independent value: integrate xi / (1 - z^2) numerically on interior segments.
double v_diff_numeric(const AxisymPattern& p, std::size_t k) {
  auto f = [&](double z) { return xi_eval(p, z) / ((1.0 - z) * (1.0 + z)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, p.z_at(k), p.z_at(k + 1),
                                                                         15, 1e-13);
}

}  // namespace

TEST(Potential, InteriorDifferencesMatchQuadrature) {
  const auto p = AxisymPattern::make({-0.8, -0.3, 0.25, 0.7});
  for (std::size_t k = 1; k < p.size(); ++k) {
    EXPECT_NEAR(v_diff(p, k), v_diff_numeric(p, k), 1e-12) << "k=" << k;
  }
}

TEST(Potential, DoubleCapHasEqualValues) {
  const auto p = AxisymPattern::make({-0.5, 0.5});
  EXPECT_NEAR(v_diff(p, 1), 0.0, 1e-15);
}

TEST(Potential, CumulativeValues) {
  const auto p = AxisymPattern::make({-0.6, 0.1, 0.5});
  const auto v = v_at_interfaces(p);
  ASSERT_EQ(v.values.size(), 3u);
  ASSERT_EQ(v.differences.size(), 2u);
  EXPECT_NEAR(v.values[0], v_diff(p, 0), 1e-15);
  EXPECT_NEAR(v.values[2] - v.values[1], v.differences[1], 1e-15);
  EXPECT_EQ(v.anchor, PotentialAnchor::SouthPole);
  EXPECT_THROW(v_diff(p, 4), Error);
}

TEST(Potential, NormalDerivativeMagnitude) {
  std::mt19937_64 rng(11);
  std::function<std::uint64_t()> next = [&] { return rng(); };
  for (int i = 0; i < 20; ++i) {
    const auto p = random_pattern(next, 7, 0.8);
    for (std::size_t k = 1; k <= p.size(); ++k) {
      const double z = p.z_at(k);
      EXPECT_NEAR(std::abs(grad_v_normal(p, k)), std::abs(xi_eval(p, z)) / std::sqrt(1.0 - z * z),
                  1e-14);
    }
  }
}

TEST(Potential, NormalDerivativeSignCalibration) {
  // The sign is pinned by the (z_n - 1) term of the single-mode second
  // variation on the last circle.
  const auto check = [](const AxisymPattern& p, double gamma) {
    const auto J = assemble_J(p, gamma, 4);
    const std::size_t last = p.size() - 1;
    for (unsigned k = 1; k <= 4; ++k) {
      const double formula = single_mode_J(p.interfaces().back(), gamma, k);
      EXPECT_NEAR(J.entry(last, last, k, Parity::Sin) / kPi, formula, 1e-10 * std::abs(formula));
    }
  };
  check(AxisymPattern::make({-0.5, 0.5}), 1.0);
  check(solve_critical(3, 2.0, uniform_pattern(3)).pattern, 2.0);
}
