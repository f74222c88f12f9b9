#pragma once

// Exact integrals of the piecewise-linear xi over one segment [lo, hi] of
// [-1, 1]. On the segment xi(z) = xi_lo + slope (z - lo). Partial fractions
// split 1/(1 - z^2) into a (1 - z) part with coefficient A = xi(1) and a
// (1 + z) part with coefficient B = xi(-1) of the linear continuation. A
// segment that ends at a pole carries the exact value xi(+-1) = 0 there, so
// the matching log term is dropped instead of evaluating 0 * log(0).

#include <cmath>

namespace oksphere::detail {

struct SegmentLogs {
  double right = 0.0;  // log((1 - lo) / (1 - hi))
  double left = 0.0;   // log((1 + hi) / (1 + lo))
  bool touches_north = false;
  bool touches_south = false;
};

inline SegmentLogs segment_logs(double lo, double hi) {
  SegmentLogs logs;
  logs.touches_north = hi == 1.0;
  logs.touches_south = lo == -1.0;
  const double width = hi - lo;
  if (!logs.touches_north) logs.right = std::log1p(width / (1.0 - hi));
  if (!logs.touches_south) logs.left = std::log1p(width / (1.0 + lo));
  return logs;
}

/// int_lo^hi xi(z)^2 / (1 - z^2) dz.
inline double segment_xi_sq_integral(double lo, double hi, double xi_lo, double slope) {
  if (hi == lo) return 0.0;
  const auto logs = segment_logs(lo, hi);
  const double a = xi_lo + slope * (1.0 - lo);
  const double b = xi_lo - slope * (1.0 + lo);
  double value = -slope * slope * (hi - lo);
  if (!logs.touches_north) value += 0.5 * a * a * logs.right;
  if (!logs.touches_south) value += 0.5 * b * b * logs.left;
  return value;
}

/// int_lo^hi xi(z) / (1 - z^2) dz.
inline double segment_xi_integral(double lo, double hi, double xi_lo, double slope) {
  if (hi == lo) return 0.0;
  const auto logs = segment_logs(lo, hi);
  const double a = xi_lo + slope * (1.0 - lo);
  const double b = xi_lo - slope * (1.0 + lo);
  double value = 0.0;
  if (!logs.touches_north) value += 0.5 * a * logs.right;
  if (!logs.touches_south) value += 0.5 * b * logs.left;
  return value;
}

}  // namespace oksphere::detail
