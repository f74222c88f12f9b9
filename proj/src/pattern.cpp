#include "oksphere/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"

namespace oksphere {

namespace {

constexpr double kMassTolerance = 1e-12;

void validate(std::span<const double> zs) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] > -1.0 && zs[i] < 1.0)) {
      throw Error(ErrorCode::OutOfRange,
                  "interface " + std::to_string(i + 1) + " = " + format_double(zs[i]) +
                      " is outside (-1, 1)");
    }
    if (i > 0 && !(zs[i - 1] < zs[i])) {
      throw Error(ErrorCode::NonIncreasing,
                  "interfaces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                      " are not strictly increasing");
    }
  }
}

}  // namespace

AxisymPattern AxisymPattern::make(std::vector<double> zs, std::optional<double> expect_mass) {
  validate(zs);
  const double m = mass_of(zs);
  if (expect_mass && std::abs(*expect_mass - m) > kMassTolerance) {
    throw Error(ErrorCode::MassMismatch, "expected mass " + format_double(*expect_mass) +
                                             ", computed " + format_double(m));
  }
  return AxisymPattern(std::move(zs), m);
}

AxisymPattern AxisymPattern::with_mass(std::vector<double> zs, double mass) {
  validate(zs);
  const double m = mass_of(zs);
  if (std::abs(mass - m) > kMassTolerance) {
    throw Error(ErrorCode::MassMismatch,
                "stored mass " + format_double(mass) + " disagrees with " + format_double(m));
  }
  return AxisymPattern(std::move(zs), mass);
}

double AxisymPattern::z_at(std::size_t k) const {
  if (k == 0) return -1.0;
  if (k == z_.size() + 1) return 1.0;
  if (k > z_.size() + 1) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(k));
  return z_[k - 1];
}

double mass_of(std::span<const double> zs) {
  const std::size_t n = zs.size();
  double sum = 0.0;
  double prev = -1.0;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const double zk = k <= n ? zs[k - 1] : 1.0;
    sum += (k % 2 == 0 ? 1.0 : -1.0) * (zk - prev);
    prev = zk;
  }
  return 0.5 * sum;
}

double mass(const AxisymPattern& p) { return mass_of(p.interfaces()); }

double kappa_g(const AxisymPattern& p, std::size_t k) {
  if (k < 1 || k > p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "kappa_g index " + std::to_string(k) + " outside 1.." + std::to_string(p.size()));
  }
  const double z = p.z_at(k);
  return AxisymPattern::sign_after(k) * z / std::sqrt(1.0 - z * z);
}

XiProfile xi_profile_of(std::span<const double> zs, double m) {
  const std::size_t n = zs.size();
  XiProfile out;
  out.nodes.resize(n + 2);
  out.slopes.resize(n + 1);
  out.nodes[0] = 0.0;
  double prev = -1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double next = k < n ? zs[k] : 1.0;
    out.slopes[k] = AxisymPattern::sign_after(k) - m;
    out.nodes[k + 1] = out.nodes[k] + out.slopes[k] * (next - prev);
    prev = next;
  }
  // xi(1) = 0 is forced by the mass constraint; store it exactly.
  out.nodes[n + 1] = 0.0;
  return out;
}

XiProfile xi_profile(const AxisymPattern& p) { return xi_profile_of(p.interfaces(), p.mass()); }

double xi_eval(const AxisymPattern& p, double z) {
  if (!(z >= -1.0 && z <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "xi_eval at z = " + format_double(z));
  }
  if (z == -1.0 || z == 1.0) return 0.0;
  const auto zs = p.interfaces();
  const auto k = static_cast<std::size_t>(std::upper_bound(zs.begin(), zs.end(), z) - zs.begin());
  const auto profile = xi_profile(p);
  return profile.nodes[k] + profile.slopes[k] * (z - p.z_at(k));
}

AxisymPattern reflect(const AxisymPattern& p) {
  const auto zs = p.interfaces();
  std::vector<double> out(zs.size());
  for (std::size_t k = 0; k < zs.size(); ++k) out[k] = -zs[zs.size() - 1 - k];
  return AxisymPattern::make(std::move(out));
}

AxisymPattern negate(const AxisymPattern& p) {
  if (p.size() % 2 == 1) return reflect(p);
  return p;
}

double radius_to_gamma(double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::NonPositive, "radius must be positive");
  return radius * radius * radius;
}

}  // namespace oksphere
