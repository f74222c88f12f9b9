#include "oksphere/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "oksphere/energy.hpp"
#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"
#include "segments.hpp"

namespace oksphere {

namespace {

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

double circle(double z) { return std::sqrt(std::max(0.0, (1.0 - z) * (1.0 + z))); }

// Keeps a search strictly inside an open interval.
std::pair<double, double> shrink(double lo, double hi) {
  const double pad = std::max(1e-12, 1e-9 * (hi - lo));
  return {lo + pad, hi - pad};
}

bool strictly_interior(const std::vector<double>& zs) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] > -1.0 && zs[i] < 1.0)) return false;
    if (i > 0 && !(zs[i - 1] < zs[i])) return false;
  }
  return true;
}

// A shift direction: entries +1, -1 or 0 per interface.
using Direction = std::vector<double>;

std::vector<double> shifted(std::span<const double> zs, const Direction& d, double t) {
  std::vector<double> out(zs.begin(), zs.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (d[i] != 0.0) out[i] += d[i] * t;
  }
  return out;
}

// Open interval of t keeping zs + t d ordered inside [-1, 1] strictly.
std::pair<double, double> admissible(std::span<const double> zs, const Direction& d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const std::size_t n = zs.size();
  // Constraint: (upper - lower) + t (d_upper - d_lower) > 0.
  const auto constrain = [&](double gap, double rate) {
    if (rate > 0.0) lo = std::max(lo, -gap / rate);
    if (rate < 0.0) hi = std::min(hi, -gap / rate);
  };
  for (std::size_t i = 0; i <= n; ++i) {
    const double lower = i == 0 ? -1.0 : zs[i - 1];
    const double upper = i == n ? 1.0 : zs[i];
    const double d_lower = i == 0 ? 0.0 : d[i - 1];
    const double d_upper = i == n ? 0.0 : d[i];
    constrain(upper - lower, d_upper - d_lower);
  }
  return {lo, hi};
}

Direction strip_direction(std::size_t n, std::size_t k) {
  Direction d(n, 0.0);
  d[k] = 1.0;
  d[k + 1] = 1.0;
  return d;
}

}  // namespace

double profile_f(double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "profile_f at x = " + format_double(x));
  }
  return xlogx(1.0 - x) + xlogx(1.0 + x);
}

double segment_energy(double x, double alpha, double beta, double gamma) {
  if (!(alpha >= -1.0 && alpha < x && x < beta && beta <= 1.0)) {
    throw Error(ErrorCode::DomainError, "segment_energy needs -1 <= alpha < x < beta <= 1");
  }
  const double lower = 0.5 * (alpha + x);
  const double upper = 0.5 * (x + beta);
  return circle(lower) + circle(upper) +
         gamma * ((alpha - x) * profile_f(lower) + (x - beta) * profile_f(upper));
}

double segment_energy_at_alpha(double alpha, double beta, double gamma) {
  const double mid = 0.5 * (alpha + beta);
  return circle(alpha) + circle(mid) + gamma * (alpha - beta) * profile_f(mid);
}

double segment_energy_at_beta(double alpha, double beta, double gamma) {
  const double mid = 0.5 * (alpha + beta);
  return circle(mid) + circle(beta) + gamma * (alpha - beta) * profile_f(mid);
}

std::optional<MoveFrame> move_frame(const AxisymPattern& p, std::size_t k) {
  if (p.size() < 2 || k > p.size() - 2) {
    throw Error(ErrorCode::IndexOutOfRange, "move index " + std::to_string(k));
  }
  if (std::abs(p.mass()) > 1e-12) return std::nullopt;
  const auto xi = xi_profile(p);
  // Root of xi on [z_j, z_{j+1}], if any.
  const auto root = [&](std::size_t j) -> std::optional<double> {
    const double lo = p.z_at(j);
    const double hi = p.z_at(j + 1);
    if (xi.nodes[j] == 0.0) return lo;
    if (xi.nodes[j + 1] == 0.0) return hi;
    const double z = lo - xi.nodes[j] / xi.slopes[j];
    if (z >= lo && z <= hi) return z;
    return std::nullopt;
  };
  const auto alpha = root(k);
  const auto x = root(k + 1);
  const auto beta = root(k + 2);
  if (!alpha || !x || !beta || !(*alpha < *x && *x < *beta)) return std::nullopt;
  return MoveFrame{*alpha, *x, *beta, k + 1, k + 2};
}

std::pair<double, double> move_range(const AxisymPattern& p, std::size_t k) {
  if (p.size() < 2 || k > p.size() - 2) {
    throw Error(ErrorCode::IndexOutOfRange, "move index " + std::to_string(k));
  }
  return {p.z_at(k) - p.z_at(k + 1), p.z_at(k + 3) - p.z_at(k + 2)};
}

AxisymPattern apply_elementary_move(const AxisymPattern& p, std::size_t k, double t) {
  if (p.size() < 2 || k > p.size() - 2) {
    throw Error(ErrorCode::IndexOutOfRange, "move index " + std::to_string(k));
  }
  auto zs = shifted(p.interfaces(), strip_direction(p.size(), k), t);
  if (!strictly_interior(zs)) {
    throw Error(ErrorCode::OrderingViolated, "shift " + format_double(t) + " of strip " +
                                                 std::to_string(k + 1) + " breaks the ordering");
  }
  return AxisymPattern::with_mass(std::move(zs), p.mass());
}

double local_move_energy(const AxisymPattern& p, std::size_t k, double t, double gamma) {
  const auto xi = xi_profile(p);
  const double z0 = p.z_at(k);
  const double z1 = p.z_at(k + 1) + t;
  const double z2 = p.z_at(k + 2) + t;
  const double z3 = p.z_at(k + 3);
  const double xi1 = xi.nodes[k] + xi.slopes[k] * (z1 - z0);
  const double xi2 = xi1 + xi.slopes[k + 1] * (z2 - z1);
  const double nonlocal = detail::segment_xi_sq_integral(z0, z1, xi.nodes[k], xi.slopes[k]) +
                          detail::segment_xi_sq_integral(z1, z2, xi1, xi.slopes[k + 1]) +
                          detail::segment_xi_sq_integral(z2, z3, xi2, xi.slopes[k + 2]);
  return circle(z1) + circle(z2) + gamma * nonlocal;
}

void MinimizeOptions::validate() const {
  if (!(x_tolerance > 0.0) || !(energy_threshold > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "minimizer tolerances must be positive");
  }
  if (max_cycles < 1) throw Error(ErrorCode::InvalidArgument, "max_cycles must be >= 1");
}

TripleResult minimize_triple(const AxisymPattern& p, std::size_t k, double gamma,
                             const MinimizeOptions& opts) {
  const auto [lo, hi] = shrink(move_range(p, k).first, move_range(p, k).second);
  const auto local = [&](double t) { return local_move_energy(p, k, t, gamma); };
  const double base = local(0.0);
  const auto best = bracketed_minimum(local, lo, hi, opts.x_tolerance);
  const double improvement = 2.0 * kPi * (base - best.value);
  if (!(improvement >= opts.energy_threshold)) return {p, 0.0, 0.0};
  try {
    return {apply_elementary_move(p, k, best.x), best.x, improvement};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderingViolated) throw;
    return {p, 0.0, 0.0};
  }
}

namespace {

// Mirrored pair of moves k and n-2-k with opposite shifts, on the full energy.
TripleResult minimize_mirrored(const AxisymPattern& p, std::size_t k, double gamma,
                               const MinimizeOptions& opts) {
  const std::size_t n = p.size();
  Direction d = strip_direction(n, k);
  const auto mirror = strip_direction(n, n - 2 - k);
  for (std::size_t i = 0; i < n; ++i) d[i] -= mirror[i];
  const auto zs = p.interfaces();
  const auto [lo, hi] = admissible(zs, d);
  const auto [a, b] = shrink(lo, hi);
  const auto energy = [&](double t) { return energy_of(shifted(zs, d, t), p.mass(), gamma); };
  const double base = energy(0.0);
  const auto best = bracketed_minimum(energy, a, b, opts.x_tolerance);
  const double improvement = base - best.value;
  if (!(improvement >= opts.energy_threshold)) return {p, 0.0, 0.0};
  auto moved = shifted(zs, d, best.x);
  if (!strictly_interior(moved)) return {p, 0.0, 0.0};
  return {AxisymPattern::with_mass(std::move(moved), p.mass()), best.x, improvement};
}

}  // namespace

MinimizeResult local_minimize(const AxisymPattern& p0, double gamma, const MinimizeOptions& opts) {
  opts.validate();
  if (!(gamma >= 0.0)) throw Error(ErrorCode::DomainError, "gamma must be >= 0");
  MinimizeResult result{p0, {}};
  double energy = total_energy(p0, gamma).total;
  result.trace.push_back({0, energy / kPi, 0.0});
  const std::size_t n = p0.size();
  if (n < 2) return result;
  for (int cycle = 1; cycle <= opts.max_cycles; ++cycle) {
    double max_move = 0.0;
    if (opts.symmetric) {
      for (std::size_t k = 0; 2 * k < n - 2; ++k) {
        auto step = minimize_mirrored(result.pattern, k, gamma, opts);
        max_move = std::max(max_move, std::abs(step.shift));
        result.pattern = std::move(step.pattern);
      }
    } else {
      for (std::size_t k = 0; k + 2 <= n; ++k) {
        auto step = minimize_triple(result.pattern, k, gamma, opts);
        max_move = std::max(max_move, std::abs(step.shift));
        result.pattern = std::move(step.pattern);
      }
    }
    const double next = total_energy(result.pattern, gamma).total;
    result.trace.push_back({cycle, next / kPi, max_move});
    const double drop = energy - next;
    energy = next;
    if (drop < opts.energy_threshold) return result;
  }
  throw Error(ErrorCode::CycleLimit,
              "no convergence within " + std::to_string(opts.max_cycles) + " cycles");
}

PoleEscape pole_escape_profile(double alpha, double gamma, double x_tol) {
  if (!(alpha >= -1.0 && alpha < 1.0)) {
    throw Error(ErrorCode::DomainError, "alpha must lie in [-1, 1)");
  }
  PoleEscape out;
  out.alpha = alpha;
  out.gamma = gamma;
  out.limit = segment_energy_at_beta(alpha, 1.0, gamma);
  const auto [lo, hi] = shrink(alpha, 1.0);
  const auto e = [&](double x) { return segment_energy(x, alpha, 1.0, gamma); };
  const auto best = bracketed_minimum(e, lo, hi, x_tol, 201);
  out.x_min = best.x;
  out.e_min = best.value;
  out.escapes = best.value < out.limit - 1e-12 * std::max(1.0, std::abs(out.limit));
  return out;
}

PoleEscape escape_pole_frame(double alpha, double gamma) {
  auto out = pole_escape_profile(alpha, gamma);
  if (!out.escapes) {
    throw Error(ErrorCode::NoEscape, "interface stays at the pole for gamma = " +
                                         format_double(gamma) + " (alpha = " +
                                         format_double(alpha) + ")");
  }
  return out;
}

double escape_threshold(double alpha, double gamma_lo, double gamma_hi, double rel_tol) {
  if (!(gamma_lo > 0.0 && gamma_lo < gamma_hi)) {
    throw Error(ErrorCode::DomainError, "threshold bracket must satisfy 0 < lo < hi");
  }
  const auto escapes = [&](double g) { return pole_escape_profile(alpha, g).escapes; };
  if (escapes(gamma_lo) || !escapes(gamma_hi)) {
    throw Error(ErrorCode::DomainError, "bracket does not straddle the escape threshold");
  }
  while (gamma_hi / gamma_lo - 1.0 > rel_tol) {
    const double mid = std::sqrt(gamma_lo * gamma_hi);
    (escapes(mid) ? gamma_hi : gamma_lo) = mid;
  }
  return gamma_hi;
}

BoundaryConfig BoundaryConfig::of(std::vector<double> zs) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] >= -1.0 && zs[i] <= 1.0)) {
      throw Error(ErrorCode::OutOfRange, "boundary entry outside [-1, 1]");
    }
    if (i > 0 && zs[i] < zs[i - 1]) {
      throw Error(ErrorCode::NonIncreasing, "boundary entries must be non-decreasing");
    }
  }
  const double m = mass_of(zs);
  return {std::move(zs), m};
}

AxisymPattern boundary_escape(const BoundaryConfig& config, double gamma,
                              const MinimizeOptions& opts) {
  const auto& zs = config.z;
  const std::size_t n = zs.size();
  if (n < 2) throw Error(ErrorCode::NoEscape, "no elementary move with fewer than 2 interfaces");
  std::vector<Direction> candidates;
  if (zs.back() == 1.0) candidates.push_back(strip_direction(n, n - 2));
  if (zs.front() == -1.0) candidates.push_back(strip_direction(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (zs[i] != zs[i + 1]) continue;
    if (i + 2 < n) candidates.push_back(strip_direction(n, i + 1));
    if (i >= 1) candidates.push_back(strip_direction(n, i - 1));
    break;
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::InvalidArgument, "configuration is not on the boundary");
  }

  const double base = energy_of(zs, config.mass, gamma);
  double best_energy = base;
  std::vector<double> best_z;
  for (const auto& d : candidates) {
    // Shifts that leave the boundary: the current t = 0 is an end of the range.
    auto [lo, hi] = admissible(zs, d);
    // A degenerate constraint pins t = 0 on one side; search the other.
    if (lo >= 0.0) lo = 0.0;
    if (hi <= 0.0) hi = 0.0;
    for (const auto& [a, b] : {std::pair{lo, 0.0}, std::pair{0.0, hi}}) {
      if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) continue;
      const auto [sa, sb] = shrink(a, b);
      const auto energy = [&](double t) { return energy_of(shifted(zs, d, t), config.mass, gamma); };
      const auto best = bracketed_minimum(energy, sa, sb, opts.x_tolerance, 201);
      auto trial = shifted(zs, d, best.x);
      if (best.value < best_energy && strictly_interior(trial)) {
        best_energy = best.value;
        best_z = std::move(trial);
      }
    }
  }
  if (best_z.empty() || !(best_energy < base - 1e-12 * std::max(1.0, std::abs(base)))) {
    throw Error(ErrorCode::NoEscape,
                "no elementary move lowers the energy at gamma = " + format_double(gamma));
  }
  return AxisymPattern::with_mass(std::move(best_z), config.mass);
}

}  // namespace oksphere
