#include "oksphere/criticality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/potential.hpp"

namespace oksphere {

namespace {

constexpr double kAsymptoteGuard = 1e-12;

bool strictly_ordered(const std::vector<double>& zs) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] > -1.0 && zs[i] < 1.0)) return false;
    if (i > 0 && !(zs[i - 1] < zs[i])) return false;
  }
  return true;
}

std::vector<double> residuals_of(const std::vector<double>& zs, double gamma,
                                 const NewtonOptions& opts) {
  return residuals(AxisymPattern::make(zs), gamma, opts.m_target, opts.convention);
}

double sum_squares(const std::vector<double>& r) {
  return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
}

// Central differences; the step never reaches a neighbour or a pole.
Eigen::MatrixXd fd_jacobian(const std::vector<double>& zs, double gamma,
                            const NewtonOptions& opts) {
  const std::size_t n = zs.size();
  Eigen::MatrixXd jac(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double below = j == 0 ? zs[j] + 1.0 : zs[j] - zs[j - 1];
    const double above = j + 1 == n ? 1.0 - zs[j] : zs[j + 1] - zs[j];
    const double h = std::min(1e-6 * std::max(1.0, std::abs(zs[j])),
                              0.25 * std::min(below, above));
    auto plus = zs;
    auto minus = zs;
    plus[j] += h;
    minus[j] -= h;
    const auto rp = residuals_of(plus, gamma, opts);
    const auto rm = residuals_of(minus, gamma, opts);
    const double width = plus[j] - minus[j];
    for (std::size_t i = 0; i < n; ++i) jac(i, j) = (rp[i] - rm[i]) / width;
  }
  return jac;
}

CriticalPoint finish(AxisymPattern p, double gamma, const std::vector<double>& r,
                     const NewtonOptions& opts, SolverTrace trace) {
  const auto lambdas = lambda_values(p, gamma, opts.convention);
  CriticalPoint out{std::move(p), gamma, 0.0, lambda_spread(lambdas), max_abs(r), std::move(trace)};
  if (!lambdas.empty()) {
    out.lambda = std::accumulate(lambdas.begin(), lambdas.end(), 0.0) /
                 static_cast<double>(lambdas.size());
  }
  return out;
}

// Increasing branch of `curve` on (lo, hi) hitting `gamma`.
double invert_rising(const std::function<double(double)>& curve, double gamma, double lo,
                     double hi) {
  return bisect_root([&](double z) { return curve(z) - gamma; }, lo, hi, 1e-15);
}

}  // namespace

double potential_sign(Convention convention) noexcept {
  return convention == Convention::Published ? 1.0 : -1.0;
}

std::vector<double> residuals(const AxisymPattern& p, double gamma, double m_target,
                              Convention convention) {
  const std::size_t n = p.size();
  const double s = potential_sign(convention);
  const auto v = v_at_interfaces(p);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 1; k < n; ++k) {
    out.push_back((kappa_g(p, k + 1) - kappa_g(p, k)) + s * 4.0 * gamma * v.differences[k - 1]);
  }
  out.push_back(mass(p) - m_target);
  return out;
}

double max_abs(const std::vector<double>& values) {
  double out = 0.0;
  for (double v : values) out = std::max(out, std::abs(v));
  return out;
}

std::vector<double> lambda_values(const AxisymPattern& p, double gamma, Convention convention) {
  const double s = potential_sign(convention);
  const auto v = v_at_interfaces(p);
  std::vector<double> out(p.size());
  for (std::size_t k = 1; k <= p.size(); ++k) {
    out[k - 1] = kappa_g(p, k) + s * 4.0 * gamma * v.values[k - 1];
  }
  return out;
}

double lambda_spread(const std::vector<double>& lambdas) {
  if (lambdas.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
  return *hi - *lo;
}

CriticalPoint solve_critical(std::size_t n, double gamma, const AxisymPattern& init,
                             const NewtonOptions& opts, const std::string& initial_guess) {
  if (init.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "initial pattern has " + std::to_string(init.size()) +
                                                " interfaces, expected " + std::to_string(n));
  }
  if (!(gamma > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  std::vector<double> z(init.interfaces().begin(), init.interfaces().end());
  auto r = residuals_of(z, gamma, opts);
  double merit = sum_squares(r);
  SolverTrace trace;
  trace.initial_guess = initial_guess;
  for (int it = 0; it <= opts.max_iterations; ++it) {
    if (max_abs(r) <= opts.tolerance) {
      trace.iterations = it;
      return finish(AxisymPattern::make(z), gamma, r, opts, std::move(trace));
    }
    if (it == opts.max_iterations) break;
    const auto jac = fd_jacobian(z, gamma, opts);
    const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(r.data(), n);
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(rhs);
    double scale = 1.0;
    bool ordered_once = false;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, scale *= 0.5) {
      std::vector<double> trial(n);
      for (std::size_t i = 0; i < n; ++i) trial[i] = z[i] + scale * step[static_cast<Eigen::Index>(i)];
      if (h > 0) ++trace.damping_events;
      if (!strictly_ordered(trial)) continue;
      ordered_once = true;
      auto trial_r = residuals_of(trial, gamma, opts);
      const double trial_merit = sum_squares(trial_r);
      if (trial_merit < merit || max_abs(trial_r) <= opts.tolerance) {
        z = std::move(trial);
        r = std::move(trial_r);
        merit = trial_merit;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (!ordered_once) {
        throw Error(ErrorCode::LeftDomain, "step halving could not keep the interfaces ordered");
      }
      throw Error(ErrorCode::NoConvergence,
                  "no descent step at residual " + format_double(max_abs(r)));
    }
  }
  throw Error(ErrorCode::NoConvergence, "iteration cap reached at residual " +
                                            format_double(max_abs(r)));
}

std::vector<CriticalPoint> continue_gamma(std::size_t n, double gamma_start, double gamma_end,
                                          std::size_t steps, const AxisymPattern& seed,
                                          const NewtonOptions& opts) {
  if (steps == 0) throw Error(ErrorCode::EmptyRange, "continuation needs at least one step");
  std::vector<CriticalPoint> out;
  out.push_back(solve_critical(n, gamma_start, seed, opts, "seed"));
  const double delta = (gamma_end - gamma_start) / static_cast<double>(steps);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double target = i == steps ? gamma_end : gamma_start + delta * static_cast<double>(i);
    const CriticalPoint& prev = out.back();
    std::optional<CriticalPoint> reached;
    for (int attempt = 0; attempt < 3 && !reached; ++attempt) {
      const int substeps = 1 << attempt;
      try {
        CriticalPoint current = prev;
        for (int s = 1; s <= substeps; ++s) {
          const double g = s == substeps
                               ? target
                               : prev.gamma + (target - prev.gamma) * s / substeps;
          current = solve_critical(n, g, current.pattern, opts, "continuation");
        }
        reached = std::move(current);
      } catch (const Error& e) {
        if (!is_numerical_failure(e.code())) throw;
      }
    }
    if (!reached) {
      throw Error(ErrorCode::BranchLost, "branch lost between gamma " + format_double(prev.gamma) +
                                             " and " + format_double(target));
    }
    out.push_back(std::move(*reached));
  }
  return out;
}

double gamma3_denominator(double z1) {
  return z1 * std::log1p(z1) - (z1 - 1.0) * std::log1p(-z1);
}

double gamma4_denominator(double z1) {
  return -z1 * std::log((1.0 + z1) / (0.5 + z1)) - (z1 - 1.0) * std::log((1.5 - z1) / (1.0 - z1));
}

double gamma_of_z1_3(double z1, Convention convention) {
  if (!(z1 > 0.0 && z1 < 1.0)) throw Error(ErrorCode::DomainError, "3-branch needs 0 < z1 < 1");
  const double den = gamma3_denominator(z1);
  if (std::abs(den) <= kAsymptoteGuard) {
    throw Error(ErrorCode::Asymptote, "3-branch asymptote at z1 = " + format_double(z1));
  }
  return potential_sign(convention) * -(z1 / std::sqrt(1.0 - z1 * z1)) / (4.0 * den);
}

double gamma_of_z1_4(double z1, Convention convention) {
  if (!(z1 > 0.5 && z1 < 1.0)) throw Error(ErrorCode::DomainError, "4-branch needs 1/2 < z1 < 1");
  const double den = gamma4_denominator(z1);
  if (std::abs(den) <= kAsymptoteGuard) {
    throw Error(ErrorCode::Asymptote, "4-branch asymptote at z1 = " + format_double(z1));
  }
  const double w = z1 - 0.5;
  const double num = z1 / std::sqrt(1.0 - z1 * z1) + w / std::sqrt(1.0 - w * w);
  return potential_sign(convention) * num / (4.0 * den);
}

double gamma3_asymptote(double x_tol) { return bisect_root(gamma3_denominator, 0.5, 0.9, x_tol); }

double gamma4_asymptote(double x_tol) { return bisect_root(gamma4_denominator, 0.75, 0.9, x_tol); }

AxisymPattern three_interface_seed(double gamma) {
  if (!(gamma > 0.25)) throw Error(ErrorCode::DomainError, "3-branch needs gamma > 1/4");
  const auto curve = [](double z) { return gamma_of_z1_3(z); };
  const double z1 = invert_rising(curve, gamma, 1e-9, gamma3_asymptote() - 1e-9);
  return AxisymPattern::make({-z1, 0.0, z1});
}

AxisymPattern four_interface_seed(double gamma) {
  const double limit = 1.0 / (2.0 * std::sqrt(3.0) * std::log(4.0 / 3.0));
  if (!(gamma > limit)) {
    throw Error(ErrorCode::DomainError, "4-branch needs gamma > " + format_double(limit));
  }
  const auto curve = [](double z) { return gamma_of_z1_4(z); };
  const double z1 = invert_rising(curve, gamma, 0.5 + 1e-12, gamma4_asymptote() - 1e-9);
  return AxisymPattern::make({-z1, 0.5 - z1, z1 - 0.5, z1});
}

std::vector<GammaCurvePoint> gamma_curve(Branch branch, const std::vector<double>& z1s,
                                         Convention convention) {
  std::vector<GammaCurvePoint> out;
  out.reserve(z1s.size());
  for (double z1 : z1s) {
    try {
      const double g = branch == Branch::Three ? gamma_of_z1_3(z1, convention)
                                               : gamma_of_z1_4(z1, convention);
      out.push_back({z1, g, branch});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Asymptote) throw;
    }
  }
  return out;
}

AxisymPattern uniform_pattern(std::size_t n_interfaces) {
  if (n_interfaces == 0) throw Error(ErrorCode::NonPositive, "need at least one interface");
  std::vector<double> zs(n_interfaces);
  if (n_interfaces % 2 == 1) {
    const double n = static_cast<double>((n_interfaces + 1) / 2);
    for (std::size_t i = 1; i <= n_interfaces; ++i) zs[i - 1] = -1.0 + static_cast<double>(i) / n;
  } else {
    const double n = static_cast<double>(n_interfaces / 2);
    for (std::size_t i = 1; i <= n_interfaces; ++i) {
      zs[i - 1] = -1.0 + static_cast<double>(2 * i - 1) / (2.0 * n);
    }
  }
  return AxisymPattern::make(std::move(zs), 0.0);
}

UniformReport uniform_criticality_check(std::size_t n_interfaces, double gamma_max,
                                        Convention convention) {
  const auto p = uniform_pattern(n_interfaces);
  const double s = potential_sign(convention);
  const auto v = v_at_interfaces(p);
  UniformReport report;
  report.n_interfaces = n_interfaces;
  for (std::size_t k = 1; k < n_interfaces; ++k) {
    PairRatio ratio;
    ratio.pair = k;
    ratio.kappa_difference = kappa_g(p, k + 1) - kappa_g(p, k);
    ratio.v_difference = v.differences[k - 1];
    ratio.gamma = ratio.v_difference == 0.0
                      ? std::numeric_limits<double>::quiet_NaN()
                      : -ratio.kappa_difference / (s * 4.0 * ratio.v_difference);
    report.ratios.push_back(ratio);
  }

  // A pair constrains gamma unless both differences vanish.
  std::vector<const PairRatio*> binding;
  bool impossible = false;
  for (const auto& r : report.ratios) {
    const bool trivial = std::abs(r.kappa_difference) <= 1e-14 && std::abs(r.v_difference) <= 1e-14;
    if (trivial) continue;
    if (!(r.gamma > 0.0)) impossible = true;
    binding.push_back(&r);
  }
  if (binding.empty()) {
    report.critical_for_all_gamma = true;
  } else {
    double worst = 0.0;
    for (std::size_t i = 0; i < binding.size(); ++i) {
      for (std::size_t j = i + 1; j < binding.size(); ++j) {
        const double gi = binding[i]->gamma;
        const double gj = binding[j]->gamma;
        const double gap = std::isfinite(gi) && std::isfinite(gj)
                               ? std::abs(gi - gj)
                               : std::numeric_limits<double>::infinity();
        if (gap > worst) {
          worst = gap;
          report.obstruction = std::make_pair(*binding[i], *binding[j]);
        }
      }
    }
    const double g0 = binding.front()->gamma;
    const bool consistent = worst <= 1e-9 * std::max(1.0, std::abs(g0));
    if (consistent && !impossible) {
      report.critical_gamma = g0;
      report.obstruction.reset();
    } else {
      report.obstruction_gap = worst;
      if (!report.obstruction) {
        // A single binding pair whose ratio is not a positive gamma.
        report.obstruction = std::make_pair(*binding.front(), *binding.front());
        report.obstruction_gap = std::numeric_limits<double>::infinity();
      }
    }
  }

  double min_res = std::numeric_limits<double>::infinity();
  for (double g : log_spaced(1e-3, std::max(gamma_max, 1e-3), 200)) {
    min_res = std::min(min_res, max_abs(residuals(p, g, 0.0, convention)));
  }
  report.min_residual_over_sweep = min_res;
  return report;
}

double polar_cap_bound(double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorCode::DomainError, "gamma must be >= 0");
  const double a = -6.0 * gamma / std::exp(1.0) - 1.0 / std::sqrt(3.0);
  return a / std::sqrt(1.0 + a * a);
}

GapReport gap_diagnostics(const AxisymPattern& p, double gamma) {
  GapReport report;
  const auto zs = p.interfaces();
  report.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < zs.size(); ++k) {
    const double gap = zs[k + 1] - zs[k];
    const double scale = std::max(std::abs(zs[k]), std::abs(zs[k + 1]));
    report.gaps.push_back(gap);
    report.scaled_gaps.push_back(scale > 0.0 ? gap * gamma / scale
                                             : std::numeric_limits<double>::infinity());
    report.stretched_gaps.push_back(std::atanh(zs[k + 1]) - std::atanh(zs[k]));
    report.min_gap = std::min(report.min_gap, gap);
  }
  if (!report.stretched_gaps.empty()) {
    const double count = static_cast<double>(report.stretched_gaps.size());
    const double mean =
        std::accumulate(report.stretched_gaps.begin(), report.stretched_gaps.end(), 0.0) / count;
    double var = 0.0;
    for (double g : report.stretched_gaps) var += (g - mean) * (g - mean);
    report.stretched_variance = var / count;
  }
  return report;
}

}  // namespace oksphere
