#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oksphere/energy.hpp"
#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/verify.hpp"

using namespace oksphere;

TEST(Energy, PerimeterOfDoubleCap) {
  EXPECT_NEAR(perimeter(AxisymPattern::make({-0.9, 0.9})), 4.0 * kPi * std::sqrt(0.19), 1e-14);
}

TEST(Energy, NonlocalHandValue) {
  const double hand = kPi * (-4.0 + 4.0 * (2.0 * std::log(4.0 / 3.0) + 0.5 * std::log(3.0)));
  const auto p = AxisymPattern::make({-0.5, 0.5});
  EXPECT_NEAR(nonlocal_closed(p, 1.0), hand, 1e-13);
  EXPECT_NEAR(hand / kPi, 0.49868, 5e-6);
}

TEST(Energy, TotalOverPiHandValue) {
  const auto e = total_energy(AxisymPattern::make({-0.5, 0.5}), 1.0);
  const double hand = -4.0 + 4.0 * (2.0 * std::log(4.0 / 3.0) + 0.5 * std::log(3.0));
  EXPECT_NEAR(e.total / kPi, 2.0 * std::sqrt(3.0) + hand, 1e-13);
  EXPECT_NEAR(e.total / kPi, 3.96278, 5e-6);
  double sum = 0.0;
  for (double s : e.per_segment) sum += s;
  EXPECT_NEAR(sum, e.nonlocal, 1e-13);
}

TEST(Energy, ClosedFormMatchesQuadrature) {
  std::mt19937_64 rng(7);
  std::function<std::uint64_t()> next = [&] { return rng(); };
  for (int i = 0; i < 50; ++i) {
    const auto p = random_pattern(next, 8, 0.9);
    const double gamma = 0.1 + 10.0 * unit_interval(rng());
    const double a = nonlocal_closed(p, gamma);
    const double b = nonlocal_quadrature(p, gamma);
    EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST(Energy, ZeroMassSpecialization) {
  const auto p = AxisymPattern::make({-0.7, -0.2, 0.2, 0.7});
  EXPECT_NEAR(energy_over_pi_mzero(p, 3.0), total_energy(p, 3.0).total / kPi, 1e-12);
  EXPECT_THROW(energy_over_pi_mzero(AxisymPattern::make({0.3}), 1.0), Error);
}

TEST(Energy, TwoInterfaceFamily) {
  for (double z1 : {-0.9, -0.5, -0.2}) {
    const auto p = AxisymPattern::make({z1, z1 + 1.0});
    EXPECT_NEAR(two_interface_energy_over_pi(z1, 2.0), total_energy(p, 2.0).total / kPi, 1e-12);
  }
  // z1 = 0 is a single cap {0} with the north interface at the pole.
  EXPECT_NEAR(two_interface_energy_over_pi(0.0, 2.0),
              energy_of(std::vector<double>{0.0, 1.0}, 0.0, 2.0) / kPi, 1e-12);
  EXPECT_THROW(two_interface_energy_over_pi(0.1, 1.0), Error);
  EXPECT_THROW(two_interface_energy_over_pi(-1.0, 1.0), Error);
}

TEST(Energy, RawEnergyAgreesOnInteriorPatterns) {
  const auto p = AxisymPattern::make({-0.3, 0.1, 0.8});
  EXPECT_NEAR(energy_of(p.interfaces(), p.mass(), 4.0), total_energy(p, 4.0).total, 1e-12);
}

TEST(Energy, GammaMustBeNonNegative) {
  EXPECT_THROW(total_energy(AxisymPattern::make({0.1}), -1.0), Error);
}

TEST(Energy, QuadratureSpecValidation) {
  QuadratureSpec spec;
  spec.rule_points = 21;
  try {
    spec.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Energy, GridShape) {
  const auto grid = two_interface_grid(LinearRange{-0.9, 0.0, 10}, LinearRange{0.1, 1.0, 3});
  EXPECT_EQ(grid.energy_over_pi.size(), 30u);
}
