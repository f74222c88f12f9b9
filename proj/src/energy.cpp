#include "oksphere/energy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "oksphere/error.hpp"
#include "segments.hpp"

namespace oksphere {

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorCode::DomainError, "gamma must be >= 0");
}

template <unsigned Points>
double gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, Points>::integrate(
      f, lo, hi, spec.max_depth, spec.relative_tolerance, &error, &l1);
  if (error > spec.relative_tolerance * l1 && error > std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::ToleranceNotMet,
                "segment [" + format_double(lo) + ", " + format_double(hi) +
                    "] error estimate " + format_double(error));
  }
  return value;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
  switch (spec.rule_points) {
    case 15: return gauss_kronrod<15>(f, lo, hi, spec);
    case 31: return gauss_kronrod<31>(f, lo, hi, spec);
    default: return gauss_kronrod<61>(f, lo, hi, spec);
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  }
  if (max_depth < 1) throw Error(ErrorCode::InvalidArgument, "quadrature depth must be >= 1");
  if (rule_points != 15 && rule_points != 31 && rule_points != 61) {
    throw Error(ErrorCode::InvalidArgument, "rule_points must be 15, 31 or 61");
  }
}

double perimeter(const AxisymPattern& p) {
  double sum = 0.0;
  for (double z : p.interfaces()) sum += std::sqrt(1.0 - z * z);
  return 2.0 * kPi * sum;
}

double nonlocal_closed(const AxisymPattern& p, double gamma) {
  require_gamma(gamma);
  const std::size_t n = p.size();
  const double m = p.mass();
  const auto xi = xi_profile(p);
  double sum = -2.0 + 2.0 * m * m;
  for (std::size_t k = 0; k <= n; ++k) {
    const double zk = p.z_at(k);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const auto logs = detail::segment_logs(zk, p.z_at(k + 1));
    if (!logs.touches_north) {
      const double c = xi.nodes[k] - (sign + m) * (1.0 - zk);
      sum += 0.5 * c * c * logs.right;
    }
    if (!logs.touches_south) {
      const double c = xi.nodes[k] + (sign + m) * (1.0 + zk);
      sum += 0.5 * c * c * logs.left;
    }
  }
  return 2.0 * kPi * gamma * sum;
}

double nonlocal_quadrature(const AxisymPattern& p, double gamma, const QuadratureSpec& spec) {
  require_gamma(gamma);
  spec.validate();
  if (gamma == 0.0) return 0.0;
  const std::size_t n = p.size();
  const auto xi = xi_profile(p);
  double total = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double lo = p.z_at(k);
    const double hi = p.z_at(k + 1);
    const double slope = xi.slopes[k];
    const double xi_lo = xi.nodes[k];
    std::function<double(double)> integrand;
    if (k == 0) {
      // xi = slope (1 + z) on the southern cap.
      integrand = [slope](double z) { return slope * slope * (1.0 + z) / (1.0 - z); };
    } else if (k == n) {
      // xi = slope (z - 1) on the northern cap.
      integrand = [slope](double z) { return slope * slope * (1.0 - z) / (1.0 + z); };
    } else {
      integrand = [=](double z) {
        const double v = xi_lo + slope * (z - lo);
        return v * v / ((1.0 - z) * (1.0 + z));
      };
    }
    total += integrate(integrand, lo, hi, spec);
  }
  return 2.0 * kPi * gamma * total;
}

EnergyBreakdown total_energy(const AxisymPattern& p, double gamma) {
  require_gamma(gamma);
  EnergyBreakdown out;
  out.perimeter = perimeter(p);
  out.nonlocal = nonlocal_closed(p, gamma);
  out.total = out.perimeter + out.nonlocal;
  const auto xi = xi_profile(p);
  out.per_segment.reserve(p.size() + 1);
  for (std::size_t k = 0; k <= p.size(); ++k) {
    out.per_segment.push_back(
        2.0 * kPi * gamma *
        detail::segment_xi_sq_integral(p.z_at(k), p.z_at(k + 1), xi.nodes[k], xi.slopes[k]));
  }
  return out;
}

double energy_over_pi_mzero(const AxisymPattern& p, double gamma) {
  require_gamma(gamma);
  if (std::abs(p.mass()) > 1e-12) {
    throw Error(ErrorCode::DomainError, "m = 0 specialization needs a zero-mass pattern");
  }
  const auto xi = xi_profile(p);
  double value = -4.0 * gamma;
  for (double z : p.interfaces()) value += 2.0 * std::sqrt(1.0 - z * z);
  for (std::size_t k = 0; k <= p.size(); ++k) {
    const double zk = p.z_at(k);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const auto logs = detail::segment_logs(zk, p.z_at(k + 1));
    if (!logs.touches_north) {
      const double c = xi.nodes[k] - sign * (1.0 - zk);
      value += gamma * c * c * logs.right;
    }
    if (!logs.touches_south) {
      const double c = xi.nodes[k] + sign * (1.0 + zk);
      value += gamma * c * c * logs.left;
    }
  }
  return value;
}

double two_interface_energy_over_pi(double z1, double gamma) {
  require_gamma(gamma);
  if (!(z1 > -1.0 && z1 <= 0.0)) {
    throw Error(ErrorCode::DomainError, "two-interface family needs z1 in (-1, 0]");
  }
  const double z2 = z1 + 1.0;
  double value = -4.0 * gamma + 2.0 * (std::sqrt(1.0 - z1 * z1) + std::sqrt((1.0 - z2) * (1.0 + z2)));
  value += 4.0 * gamma * std::log(2.0 / (1.0 - z1));
  // z1^2 log((1 - z1)/(1 - z2)) is 0 * inf at z1 = 0, where the cap closes at the pole.
  if (z1 != 0.0) value += 4.0 * gamma * z1 * z1 * std::log((1.0 - z1) / (1.0 - z2));
  value += 4.0 * gamma * (1.0 + z1) * (1.0 + z1) * std::log((1.0 + z2) / (1.0 + z1));
  value += 4.0 * gamma * std::log(2.0 / (1.0 + z2));
  return value;
}

double energy_of(std::span<const double> zs, double mass, double gamma) {
  require_gamma(gamma);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(zs[i] >= -1.0 && zs[i] <= 1.0)) {
      throw Error(ErrorCode::OutOfRange, "entry outside [-1, 1]");
    }
    if (i > 0 && zs[i] < zs[i - 1]) throw Error(ErrorCode::NonIncreasing, "entries decrease");
  }
  const auto xi = xi_profile_of(zs, mass);
  double per = 0.0;
  for (double z : zs) per += std::sqrt(std::max(0.0, (1.0 - z) * (1.0 + z)));
  double nl = 0.0;
  double lo = -1.0;
  for (std::size_t k = 0; k <= zs.size(); ++k) {
    const double hi = k < zs.size() ? zs[k] : 1.0;
    nl += detail::segment_xi_sq_integral(lo, hi, xi.nodes[k], xi.slopes[k]);
    lo = hi;
  }
  return 2.0 * kPi * (per + gamma * nl);
}

SweepGrid two_interface_grid(const LinearRange& z1_range, const LinearRange& gamma_range) {
  SweepGrid grid;
  grid.z1 = z1_range.values();
  grid.gamma = gamma_range.values();
  grid.energy_over_pi.reserve(grid.z1.size() * grid.gamma.size());
  for (double z1 : grid.z1) {
    for (double gamma : grid.gamma) {
      grid.energy_over_pi.push_back(two_interface_energy_over_pi(z1, gamma));
    }
  }
  return grid;
}

}  // namespace oksphere
