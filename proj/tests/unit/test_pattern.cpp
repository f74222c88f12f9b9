#include <gtest/gtest.h>

#include <cmath>

#include "oksphere/error.hpp"
#include "oksphere/pattern.hpp"

using namespace oksphere;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Pattern, MassOfFourInterfaces) {
  const auto p = AxisymPattern::make({-0.9, -0.5, 0.5, 0.9});
  EXPECT_NEAR(p.mass(), -0.2, 1e-15);
  EXPECT_EQ(p.size(), 4u);
}

TEST(Pattern, SingleCapMassIsMinusZ) {
  for (double z : {-0.7, 0.0, 0.3, 0.95}) {
    EXPECT_NEAR(AxisymPattern::make({z}).mass(), -z, 1e-15);
  }
}

TEST(Pattern, SymmetricDoubleCapHasZeroMass) {
  EXPECT_DOUBLE_EQ(AxisymPattern::make({-0.5, 0.5}).mass(), 0.0);
}

TEST(Pattern, SentinelsAndSigns) {
  const auto p = AxisymPattern::make({-0.2, 0.4});
  EXPECT_EQ(p.z_at(0), -1.0);
  EXPECT_EQ(p.z_at(1), -0.2);
  EXPECT_EQ(p.z_at(3), 1.0);
  EXPECT_EQ(AxisymPattern::sign_after(0), -1);
  EXPECT_EQ(AxisymPattern::sign_after(1), 1);
  EXPECT_EQ(code_of([&] { (void)p.z_at(4); }), ErrorCode::IndexOutOfRange);
}

TEST(Pattern, RejectsBadInput) {
  EXPECT_EQ(code_of([] { AxisymPattern::make({0.2, 0.1}); }), ErrorCode::NonIncreasing);
  EXPECT_EQ(code_of([] { AxisymPattern::make({0.2, 0.2}); }), ErrorCode::NonIncreasing);
  EXPECT_EQ(code_of([] { AxisymPattern::make({-1.0, 0.1}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { AxisymPattern::make({0.1, 1.0}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { AxisymPattern::make({0.1}, 0.5); }), ErrorCode::MassMismatch);
}

TEST(Pattern, WithMassKeepsStoredValue) {
  const double m = -0.3 + 1e-14;
  const auto p = AxisymPattern::with_mass({0.3}, m);
  EXPECT_EQ(p.mass(), m);
}

TEST(Pattern, XiClosesAtBothPoles) {
  const auto p = AxisymPattern::make({-0.8, -0.1, 0.35, 0.6, 0.9});
  const auto xi = xi_profile(p);
  ASSERT_EQ(xi.nodes.size(), p.size() + 2);
  EXPECT_EQ(xi.nodes.front(), 0.0);
  EXPECT_EQ(xi.nodes.back(), 0.0);
  // Recomputing the last node without the forced zero stays within rounding.
  double v = 0.0;
  for (std::size_t k = 0; k <= p.size(); ++k) v += xi.slopes[k] * (p.z_at(k + 1) - p.z_at(k));
  EXPECT_NEAR(v, 0.0, 1e-14);
}

TEST(Pattern, XiSlopesFollowSign) {
  const auto p = AxisymPattern::make({-0.5, 0.5});
  const auto xi = xi_profile(p);
  EXPECT_DOUBLE_EQ(xi.slopes[0], -1.0);
  EXPECT_DOUBLE_EQ(xi.slopes[1], 1.0);
  EXPECT_DOUBLE_EQ(xi_eval(p, -0.5), -0.5);
  EXPECT_DOUBLE_EQ(xi_eval(p, 0.0), 0.0);
}

TEST(Pattern, CurvatureOfCaps) {
  const auto p = AxisymPattern::make({-0.6, 0.6});
  // u(z_k+) z_k / sqrt(1 - z_k^2): both circles bend the same way.
  EXPECT_NEAR(kappa_g(p, 1), -0.75, 1e-15);
  EXPECT_NEAR(kappa_g(p, 2), -0.75, 1e-15);
}

TEST(Pattern, ReflectAndNegate) {
  const auto p = AxisymPattern::make({-0.7, 0.1, 0.4});
  const auto r = reflect(p);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_DOUBLE_EQ(r.interfaces()[0], -0.4);
  EXPECT_DOUBLE_EQ(r.interfaces()[2], 0.7);
  EXPECT_NEAR(r.mass(), -p.mass(), 1e-15);
  EXPECT_NEAR(negate(p).mass(), -p.mass(), 1e-15);
  const auto even = AxisymPattern::make({-0.2, 0.5});
  EXPECT_EQ(negate(even), even);
}

TEST(Pattern, RadiusScaling) { EXPECT_DOUBLE_EQ(radius_to_gamma(2.0), 8.0); }
