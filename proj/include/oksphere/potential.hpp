#pragma once

#include <cstddef>
#include <vector>

#include "oksphere/pattern.hpp"

namespace oksphere {

/// Where the additive constant of v is fixed.
enum class PotentialAnchor {
  /// v(-1) = 0; v(z_1) is the integral over the southern cap segment.
  SouthPole,
};

/// Potential at the interfaces, v(z) = int xi / (1 - z^2) up to an additive
/// constant. Only differences enter the criticality system, so the anchor
/// shifts every multiplier by the same pattern-dependent amount.
struct PotentialAtInterfaces {
  /// v(z_k), k = 1..n, stored 0-based.
  std::vector<double> values;
  PotentialAnchor anchor = PotentialAnchor::SouthPole;
  /// v(z_{k+1}) - v(z_k), k = 1..n-1, stored 0-based.
  std::vector<double> differences;
};

/// v(z_{k+1}) - v(z_k) for k = 0..n, the integral of xi / (1 - z^2) over
/// [z_k, z_{k+1}]. Throws Error(IndexOutOfRange) for k > n.
double v_diff(const AxisymPattern& p, std::size_t k);

PotentialAtInterfaces v_at_interfaces(const AxisymPattern& p);

/// u(z_k+) xi(z_k) / sqrt(1 - z_k^2), k = 1..n: the normal derivative of the
/// potential along the outer normal of {u = +1}, as consumed by the second
/// variation.
double grad_v_normal(const AxisymPattern& p, std::size_t k);

}  // namespace oksphere
