#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oksphere/numeric.hpp"
#include "oksphere/pattern.hpp"

namespace oksphere {

/// Energy split into perimeter and nonlocal parts. All values include their
/// 2*pi (and 2*pi*gamma) factors; divide by pi for the normalization used in
/// tables.
struct EnergyBreakdown {
  double perimeter = 0.0;
  double nonlocal = 0.0;
  double total = 0.0;
  /// Nonlocal contribution of each segment [z_k, z_{k+1}], k = 0..n.
  std::vector<double> per_segment;

  double total_over_pi() const { return total / kPi; }
};

struct QuadratureSpec {
  double relative_tolerance = 1e-10;
  unsigned max_depth = 15;
  /// Gauss-Kronrod points per panel: 15, 31 or 61.
  unsigned rule_points = 15;

  void validate() const;
};

/// 2*pi * sum sqrt(1 - z_k^2).
double perimeter(const AxisymPattern& p);

/// Closed-form 2*pi*gamma * int xi^2 / (1 - z^2) dz. Pole terms whose
/// coefficient is xi(+-1) = 0 are dropped analytically.
double nonlocal_closed(const AxisymPattern& p, double gamma);

/// Same quantity by adaptive Gauss-Kronrod integration, segment by segment.
/// Throws Error(ToleranceNotMet) when a segment misses the tolerance at the
/// maximum panel depth.
double nonlocal_quadrature(const AxisymPattern& p, double gamma, const QuadratureSpec& spec = {});

EnergyBreakdown total_energy(const AxisymPattern& p, double gamma);

/// E/pi through the m = 0 specialization of the closed form; requires |m| <= 1e-12.
double energy_over_pi_mzero(const AxisymPattern& p, double gamma);

/// E/pi for two interfaces at zero mass (z2 = z1 + 1), z1 in (-1, 0].
double two_interface_energy_over_pi(double z1, double gamma);

/// Closed-form energy of a raw interface list in which consecutive entries
/// may coincide and entries may sit at +-1. Used for boundary configurations.
double energy_of(std::span<const double> zs, double mass, double gamma);

/// E/pi on a (z1, gamma) grid for the zero-mass two-interface family.
struct SweepGrid {
  std::vector<double> z1;
  std::vector<double> gamma;
  /// Row-major, z1 outer and gamma inner.
  std::vector<double> energy_over_pi;

  double at(std::size_t i_z1, std::size_t j_gamma) const {
    return energy_over_pi[i_z1 * gamma.size() + j_gamma];
  }
};

SweepGrid two_interface_grid(const LinearRange& z1_range, const LinearRange& gamma_range);

}  // namespace oksphere
