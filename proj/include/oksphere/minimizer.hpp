#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oksphere/pattern.hpp"

namespace oksphere {

/// (1 - x) log(1 - x) + (1 + x) log(1 + x) on [-1, 1], with 0 log 0 = 0.
double profile_f(double x);

/// Energy (divided by 2 pi) of the stretch (alpha, beta) between two roots of
/// xi as a function of the middle root x, for a zero-mass pattern whose strip
/// has interfaces (alpha + x)/2 and (x + beta)/2:
///   e = sqrt(1 - ((alpha + x)/2)^2) + sqrt(1 - ((beta + x)/2)^2)
///       + gamma [(alpha - x) f((alpha + x)/2) + (x - beta) f((x + beta)/2)],
/// up to a constant independent of x. Requires -1 <= alpha < x < beta <= 1.
double segment_energy(double x, double alpha, double beta, double gamma);

/// Limits of segment_energy as x -> alpha+ and x -> beta-.
double segment_energy_at_alpha(double alpha, double beta, double gamma);
double segment_energy_at_beta(double alpha, double beta, double gamma);

/// Roots of xi around the strip moved by elementary move k.
struct MoveFrame {
  double alpha = 0.0;
  double x = 0.0;
  double beta = 0.0;
  /// 1-based indices of the strip interfaces, (k+1, k+2).
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Frame of move k (0 <= k <= n-2). Exists only at zero mass and when xi has a
/// root in each of [z_k, z_{k+1}], [z_{k+1}, z_{k+2}], [z_{k+2}, z_{k+3}];
/// then z_{k+1} = (alpha + x)/2 and z_{k+2} = (x + beta)/2.
std::optional<MoveFrame> move_frame(const AxisymPattern& p, std::size_t k);

/// Shifts (z_{k+1}, z_{k+2}) by t. The stored mass is carried over unchanged.
/// Throws Error(OrderingViolated) if the result is not strictly ordered
/// inside (-1, 1) and Error(IndexOutOfRange) for k > n-2.
AxisymPattern apply_elementary_move(const AxisymPattern& p, std::size_t k, double t);

/// Open interval of admissible shifts for move k.
std::pair<double, double> move_range(const AxisymPattern& p, std::size_t k);

/// Energy / (2 pi) of the three segments [z_k, z_{k+3}] touched by move k
/// after shifting by t, plus the two moved perimeters. Differences in t equal
/// differences of total_energy / (2 pi).
double local_move_energy(const AxisymPattern& p, std::size_t k, double t, double gamma);

struct MinimizeOptions {
  double x_tolerance = 1e-12;
  int max_cycles = 200;
  double energy_threshold = 1e-13;
  /// Sweep only the lower half of the moves and mirror each onto the upper
  /// half; keeps equatorially symmetric patterns symmetric.
  bool symmetric = false;

  void validate() const;
};

struct TripleResult {
  AxisymPattern pattern;
  double shift = 0.0;
  /// Decrease of total energy (>= 0).
  double improvement = 0.0;
};

/// Minimizes the energy over the shift of move k. Returns the input unchanged
/// when the best shift does not lower the energy by at least the threshold.
TripleResult minimize_triple(const AxisymPattern& p, std::size_t k, double gamma,
                             const MinimizeOptions& opts = {});

struct TraceRow {
  int cycle = 0;
  double energy_over_pi = 0.0;
  double max_move = 0.0;
};

struct MinimizeResult {
  AxisymPattern pattern;
  std::vector<TraceRow> trace;
};

/// Cyclic sweeps of minimize_triple in ascending k until one full cycle lowers
/// the energy by less than the threshold. Row 0 of the trace is the start.
/// Throws Error(CycleLimit) when max_cycles sweeps do not settle.
MinimizeResult local_minimize(const AxisymPattern& p0, double gamma,
                              const MinimizeOptions& opts = {});

/// Interior minimum of segment_energy(x; alpha, 1, gamma) against its x -> 1
/// limit, the value reached when the upper interface sits at the pole.
struct PoleEscape {
  double alpha = 0.0;
  double gamma = 0.0;
  double x_min = 0.0;
  double e_min = 0.0;
  double limit = 0.0;
  bool escapes = false;
};

PoleEscape pole_escape_profile(double alpha, double gamma, double x_tol = 1e-12);

/// pole_escape_profile that throws Error(NoEscape) when the interior minimum
/// does not beat the pole limit.
PoleEscape escape_pole_frame(double alpha, double gamma);

/// Smallest gamma in [gamma_lo, gamma_hi] at which the pole profile escapes,
/// by bisection to relative tolerance `rel_tol`. Throws Error(DomainError) if
/// the bracket does not straddle the threshold.
double escape_threshold(double alpha, double gamma_lo, double gamma_hi, double rel_tol = 1e-6);

/// A configuration on the boundary of the ordered set: an interface at a pole
/// and/or two coinciding interfaces. Entries are non-decreasing in [-1, 1].
struct BoundaryConfig {
  std::vector<double> z;
  double mass = 0.0;

  static BoundaryConfig of(std::vector<double> zs);
};

/// Applies the elementary move that leaves the boundary (for a pole: the
/// strip ending at the pole; for a merged pair: a strip that separates it)
/// with the shift minimizing the energy. Returns a strictly interior pattern
/// with lower energy, or throws Error(NoEscape).
AxisymPattern boundary_escape(const BoundaryConfig& config, double gamma,
                              const MinimizeOptions& opts = {});

}  // namespace oksphere
