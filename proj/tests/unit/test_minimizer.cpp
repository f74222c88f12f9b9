#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oksphere/criticality.hpp"
#include "oksphere/energy.hpp"
#include "oksphere/error.hpp"
#include "oksphere/minimizer.hpp"
#include "oksphere/numeric.hpp"

using namespace oksphere;

TEST(Minimizer, ProfileFunction) {
  EXPECT_EQ(profile_f(0.0), 0.0);
  EXPECT_NEAR(profile_f(1.0), 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(profile_f(-0.4), profile_f(0.4), 1e-15);
}

TEST(Minimizer, SegmentEnergyDifferencesMatchTotalEnergy) {
  // {-0.5, 0.5}: xi has roots at -1, 0 and 1, so the whole sphere is one frame.
  const auto p = AxisymPattern::make({-0.5, 0.5});
  const auto frame = move_frame(p, 0);
  ASSERT_TRUE(frame.has_value());
  EXPECT_DOUBLE_EQ(frame->alpha, -1.0);
  EXPECT_DOUBLE_EQ(frame->beta, 1.0);
  EXPECT_NEAR(frame->x, 0.0, 1e-15);
  // The frame constant drops out of differences.
  const double t = 0.2;
  const auto q = apply_elementary_move(p, 0, t);
  for (double g : {0.5, 3.0}) {
    const double de = segment_energy(frame->x + 2.0 * t, -1.0, 1.0, g) -
                      segment_energy(frame->x, -1.0, 1.0, g);
    EXPECT_NEAR(de, (total_energy(q, g).total - total_energy(p, g).total) / (2.0 * kPi), 1e-12);
  }
  EXPECT_THROW(segment_energy(1.0, -1.0, 1.0, 1.0), Error);
}

TEST(Minimizer, EndpointLimits) {
  const double a = -0.4, b = 0.8, g = 2.0;
  EXPECT_NEAR(segment_energy(a + 1e-9, a, b, g), segment_energy_at_alpha(a, b, g), 1e-7);
  EXPECT_NEAR(segment_energy(b - 1e-9, a, b, g), segment_energy_at_beta(a, b, g), 1e-7);
}

TEST(Minimizer, MoveKeepsMassExactly) {
  const auto p = AxisymPattern::make({-0.7, -0.2, 0.3, 0.75});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = rng() % (p.size() - 1);
    const auto [lo, hi] = move_range(p, k);
    const double t = lo + (hi - lo) * (0.01 + 0.98 * unit_interval(rng()));
    const auto q = apply_elementary_move(p, k, t);
    EXPECT_EQ(q.mass(), p.mass());
    EXPECT_NEAR(mass(q), p.mass(), 1e-15);
  }
  EXPECT_THROW(apply_elementary_move(p, 3, 0.0), Error);
  EXPECT_THROW(apply_elementary_move(p, 0, 10.0), Error);
}

TEST(Minimizer, LocalEnergyDifferencesMatchTotal) {
  const auto p = AxisymPattern::make({-0.8, -0.35, 0.1, 0.45, 0.85});
  const double g = 5.0, t = 0.03;
  for (std::size_t k = 0; k + 2 <= p.size(); ++k) {
    const auto q = apply_elementary_move(p, k, t);
    const double total = (total_energy(q, g).total - total_energy(p, g).total) / (2.0 * kPi);
    const double local = local_move_energy(p, k, t, g) - local_move_energy(p, k, 0.0, g);
    EXPECT_NEAR(local, total, 1e-12) << "k=" << k;
  }
}

TEST(Minimizer, ReachesDoubleCap) {
  const auto r = local_minimize(AxisymPattern::make({-0.4, 0.6}), 5.0);
  EXPECT_NEAR(r.pattern.interfaces()[0], -0.5, 1e-9);
  EXPECT_NEAR(r.pattern.interfaces()[1], 0.5, 1e-9);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    EXPECT_LE(r.trace[i].energy_over_pi, r.trace[i - 1].energy_over_pi + 1e-13);
  }
}

TEST(Minimizer, SymmetricFixedPointIsCritical) {
  MinimizeOptions opts;
  opts.symmetric = true;
  opts.max_cycles = 2000;
  const auto r = local_minimize(uniform_pattern(4), 20.0, opts);
  // Descent follows the true energy, so its fixed points satisfy the
  // energy-consistent system.
  EXPECT_LT(max_abs(residuals(r.pattern, 20.0, 0.0, Convention::EnergyConsistent)), 1e-6);
  EXPECT_NEAR(r.pattern.mass(), 0.0, 1e-15);
}

TEST(Minimizer, OptionValidation) {
  MinimizeOptions opts;
  opts.max_cycles = 0;
  EXPECT_THROW(opts.validate(), Error);
}

TEST(Minimizer, PoleEscapeAndThreshold) {
  const auto high = escape_pole_frame(0.6, 100.0);
  EXPECT_TRUE(high.escapes);
  EXPECT_LT(high.e_min, high.limit);
  try {
    escape_pole_frame(0.6, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoEscape);
  }
  EXPECT_NEAR(escape_threshold(0.6, 1.0, 100.0), 34.524, 1e-2);
}

TEST(Minimizer, MergedPairSeparates) {
  const auto config = BoundaryConfig::of({-0.5, 0.0, 0.0, 0.5});
  for (double g : {10.0, 100.0}) {
    const auto p = boundary_escape(config, g);
    ASSERT_EQ(p.size(), 4u);
    EXPECT_LT(total_energy(p, g).total, energy_of(config.z, config.mass, g));
  }
}

TEST(Minimizer, PoleConfiguration) {
  const auto config = BoundaryConfig::of({-0.8, -0.2, 0.2, 1.0});
  EXPECT_THROW(boundary_escape(config, 1.0), Error);
  const auto p = boundary_escape(config, 10.0);
  EXPECT_LT(p.interfaces().back(), 1.0);
  EXPECT_LT(total_energy(p, 10.0).total, energy_of(config.z, config.mass, 10.0));
}

TEST(Minimizer, NonlocalPartIsConvexShaped) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const double a = -1.0 + 1.8 * unit_interval(rng());
    const double b = a + (1.0 - a) * (0.05 + 0.95 * unit_interval(rng()));
    const auto e_nl = [&](double x) {
      return segment_energy(x, a, b, 1.0) - segment_energy(x, a, b, 0.0);
    };
    const double h = 1e-7 * (b - a);
    const double near_a = a + 0.01 * (b - a);
    const double near_b = b - 0.01 * (b - a);
    EXPECT_LT(e_nl(near_a + h) - e_nl(near_a - h), 0.0);
    EXPECT_GT(e_nl(near_b + h) - e_nl(near_b - h), 0.0);
  }
}
