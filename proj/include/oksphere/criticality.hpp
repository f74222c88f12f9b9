#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oksphere/pattern.hpp"

namespace oksphere {

/// Sign of the potential term in the Euler-Lagrange system.
///
/// `Published` is kappa_g + 4 gamma v = lambda with v = int xi / (1 - z^2),
/// the system as it is usually written down for this problem, including the
/// explicit gamma(z1) curves. `EnergyConsistent` is kappa_g - 4 gamma v =
/// lambda, whose roots are the stationary points of the closed-form energy
/// under mass-preserving perturbations. Both agree on every pattern with
/// v(z_{k+1}) = v(z_k), e.g. the double cap.
enum class Convention { Published, EnergyConsistent };

/// +1 for Published, -1 for EnergyConsistent.
double potential_sign(Convention convention) noexcept;

/// (kappa_{k+1} - kappa_k) + s 4 gamma v_diff(k) for k = 1..n-1, followed by
/// mass - m_target. Length n.
std::vector<double> residuals(const AxisymPattern& p, double gamma, double m_target = 0.0,
                              Convention convention = Convention::Published);

double max_abs(const std::vector<double>& values);

/// lambda_k = kappa_g(z_k) + s 4 gamma v(z_k), with v anchored at the south pole.
std::vector<double> lambda_values(const AxisymPattern& p, double gamma,
                                  Convention convention = Convention::Published);

/// max - min of lambda_values.
double lambda_spread(const std::vector<double>& lambdas);

struct NewtonOptions {
  double tolerance = 1e-11;
  int max_iterations = 60;
  int max_halvings = 60;
  double m_target = 0.0;
  Convention convention = Convention::Published;
};

struct SolverTrace {
  int iterations = 0;
  int damping_events = 0;
  std::string initial_guess;
};

struct CriticalPoint {
  AxisymPattern pattern;
  double gamma = 0.0;
  /// Mean of the per-interface multipliers (south-pole anchor).
  double lambda = 0.0;
  double lambda_spread = 0.0;
  /// Max-norm of the residual vector.
  double residual_norm = 0.0;
  SolverTrace trace;
};

/// Damped Newton on `residuals` with a central finite-difference Jacobian.
/// Throws Error(NoConvergence) at the iteration cap and Error(LeftDomain)
/// when step halving cannot keep the iterate ordered inside (-1, 1).
CriticalPoint solve_critical(std::size_t n, double gamma, const AxisymPattern& init,
                             const NewtonOptions& opts = {},
                             const std::string& initial_guess = "user");

/// Walks gamma from gamma_start to gamma_end in `steps` equal increments,
/// seeding each solve with the previous solution. A failed step is retried
/// with half the increment, twice; after that the branch is reported lost
/// with Error(BranchLost). The returned list starts with the re-solved seed.
std::vector<CriticalPoint> continue_gamma(std::size_t n, double gamma_start, double gamma_end,
                                          std::size_t steps, const AxisymPattern& seed,
                                          const NewtonOptions& opts = {});

/// gamma on the symmetric 3-interface family {-z1, 0, z1}, 0 < z1 < 1.
/// Throws Error(Asymptote) when the denominator is within 1e-12 of 0.
double gamma_of_z1_3(double z1, Convention convention = Convention::Published);

/// gamma on the symmetric 4-interface family {-z1, 1/2 - z1, z1 - 1/2, z1},
/// 1/2 < z1 < 1.
double gamma_of_z1_4(double z1, Convention convention = Convention::Published);

/// Denominator of the 3-branch; its root in (0, 1) is the asymptote.
double gamma3_denominator(double z1);
double gamma4_denominator(double z1);

/// Root of the respective denominator by bisection.
double gamma3_asymptote(double x_tol = 1e-12);
double gamma4_asymptote(double x_tol = 1e-12);

/// The 4-interface family member on the rising part of the branch
/// (1/2, asymptote) at the requested gamma. Throws Error(DomainError) if gamma
/// is not above the z1 -> 1/2 limit.
AxisymPattern four_interface_seed(double gamma);

/// {-z1, 0, z1} on the rising part of the 3-branch (0, asymptote). Requires
/// gamma in (1/4, infinity).
AxisymPattern three_interface_seed(double gamma);

enum class Branch { Three = 3, Four = 4 };

struct GammaCurvePoint {
  double z1 = 0.0;
  double gamma = 0.0;
  Branch branch = Branch::Three;
};

/// Samples the explicit curve; points at an asymptote are skipped.
std::vector<GammaCurvePoint> gamma_curve(Branch branch, const std::vector<double>& z1s,
                                         Convention convention = Convention::Published);

/// Interfaces equally spaced in z: 2n-1 interfaces at -1 + i/n, 2n at
/// -1 + (2i-1)/(2n). Throws Error(NonPositive) for zero.
AxisymPattern uniform_pattern(std::size_t n_interfaces);

struct PairRatio {
  /// 1-based index k of the pair (z_k, z_{k+1}).
  std::size_t pair = 0;
  double kappa_difference = 0.0;
  double v_difference = 0.0;
  /// gamma that would zero this pair's residual: -dkappa / (s 4 dv). NaN when
  /// dv = 0.
  double gamma = 0.0;
};

struct UniformReport {
  std::size_t n_interfaces = 0;
  bool critical_for_all_gamma = false;
  std::optional<double> critical_gamma;
  std::vector<PairRatio> ratios;
  /// Two pair ratios that must coincide for criticality but do not.
  std::optional<std::pair<PairRatio, PairRatio>> obstruction;
  double obstruction_gap = 0.0;
  /// min over a log-spaced gamma sweep of max |R_k|.
  double min_residual_over_sweep = 0.0;
};

UniformReport uniform_criticality_check(std::size_t n_interfaces, double gamma_max,
                                        Convention convention = Convention::Published);

/// a / sqrt(1 + a^2) with a = -6 gamma / e - 1/sqrt(3). gamma = 0 gives -1/2.
double polar_cap_bound(double gamma);

struct GapReport {
  std::vector<double> gaps;
  /// gap * gamma / max(|z_k|, |z_{k+1}|); infinite when both ends are 0.
  std::vector<double> scaled_gaps;
  std::vector<double> stretched_gaps;
  double stretched_variance = 0.0;
  double min_gap = 0.0;
};

GapReport gap_diagnostics(const AxisymPattern& p, double gamma);

}  // namespace oksphere
