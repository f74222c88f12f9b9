#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace oksphere {

/// A +-1 configuration on the unit sphere that depends only on z = cos(phi).
///
/// Interfaces are stored as heights -1 < z_1 < ... < z_n < 1. The sign
/// convention is fixed: u = -1 on [-1, z_1) and u flips at every interface,
/// so u = (-1)^(k+1) on [z_k, z_{k+1}). The poles z_0 = -1 and z_{n+1} = 1 are
/// implied sentinels. Values are immutable once built.
class AxisymPattern {
 public:
  /// Validates ordering and range and computes the mass. When `expect_mass` is
  /// given it must agree with the computed mass to 1e-12.
  static AxisymPattern make(std::vector<double> zs, std::optional<double> expect_mass = {});

  /// Builds a pattern whose stored mass is `mass` itself (bit-exact), after
  /// checking that it agrees with the computed mass to 1e-12. Used by
  /// mass-conserving moves and deserialization.
  static AxisymPattern with_mass(std::vector<double> zs, double mass);

  std::size_t size() const noexcept { return z_.size(); }
  std::span<const double> interfaces() const noexcept { return z_; }
  double mass() const noexcept { return mass_; }

  /// Height with sentinels: z_at(0) = -1, z_at(n+1) = +1, else z_k (1-based).
  double z_at(std::size_t k) const;

  /// u on [z_k, z_{k+1}), k = 0..n.
  static int sign_after(std::size_t k) noexcept { return k % 2 == 0 ? -1 : 1; }

  bool operator==(const AxisymPattern& other) const = default;

 private:
  AxisymPattern(std::vector<double> zs, double mass) : z_(std::move(zs)), mass_(mass) {}

  std::vector<double> z_;
  double mass_ = 0.0;
};

/// Node values xi_k = xi(z_k), k = 0..n+1, and segment slopes
/// a_{k+1} = (-1)^(k+1) - m on [z_k, z_{k+1}].
struct XiProfile {
  std::vector<double> nodes;
  std::vector<double> slopes;
};

/// (1/2) sum_{k=1}^{n+1} (-1)^k (z_k - z_{k-1}) over a raw, non-decreasing list.
double mass_of(std::span<const double> zs);

/// Mass of the pattern recomputed from its interfaces.
double mass(const AxisymPattern& p);

/// Signed geodesic curvature u(z_k+) z_k / sqrt(1 - z_k^2), k = 1..n.
double kappa_g(const AxisymPattern& p, std::size_t k);

XiProfile xi_profile(const AxisymPattern& p);

/// Same recursion for a raw list (boundary configurations may contain equal
/// entries or +-1). The last node is set to exactly 0.
XiProfile xi_profile_of(std::span<const double> zs, double m);

/// Piecewise-linear xi at z in [-1, 1].
double xi_eval(const AxisymPattern& p, double z);

/// z -> -z. The interface list becomes -z_{n+1-k}; for odd n this represents
/// -u(-z), which carries mass -m, since u(-z) would start with +1.
AxisymPattern reflect(const AxisymPattern& p);

/// Representative of -u under the fixed sign convention. For odd n this is
/// -u(-z) (the reflected list, mass -m). For even n, -u starts and ends with
/// +1 and has no representative with n interfaces; the energy-equivalent
/// pattern u itself is returned (E(-u) = E(u)).
AxisymPattern negate(const AxisymPattern& p);

/// A sphere of radius R at unit gamma is equivalent to the unit sphere at gamma = R^3.
double radius_to_gamma(double radius);

}  // namespace oksphere
