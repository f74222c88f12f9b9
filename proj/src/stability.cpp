#include "oksphere/stability.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/potential.hpp"

namespace oksphere {

namespace {

void require_unit_height(double z_n) {
  if (!(z_n > 0.0 && z_n < 1.0)) throw Error(ErrorCode::DomainError, "z_n must lie in (0, 1)");
}

double adaptive(const std::function<double(double)>& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 12, 1e-12);
}

}  // namespace

double fourier_log_integral(double a, double b, unsigned k) {
  if (!(a > 0.0 && b >= 0.0)) throw Error(ErrorCode::DomainError, "need a > 0 and b >= 0");
  if (b > a) throw Error(ErrorCode::DomainError, "log kernel needs b <= a");
  const double root = std::sqrt((a - b) * (a + b));
  if (k == 0) return 2.0 * kPi * std::log(0.5 * (a + root));
  if (b == 0.0) return 0.0;
  // b / (a + root) equals (a - root) / b without the cancellation.
  const double q = b / (a + root);
  return -(2.0 * kPi / k) * std::pow(q, static_cast<double>(k));
}

double fourier_log_integral_quadrature(double a, double b, unsigned k) {
  if (b > a) throw Error(ErrorCode::DomainError, "log kernel needs b <= a");
  // The integrand is even about u = pi; integrate [0, pi] and double.
  boost::math::quadrature::tanh_sinh<double> rule;
  // On the left half the second argument is 0 - u, exact near the endpoint.
  const auto f = [a, b, k](double u, double complement) {
    // 1 - cos u = 2 sin^2(u/2) keeps the a = b case accurate near u = 0.
    const double s = std::sin(0.5 * (complement < 0.0 ? -complement : u));
    const double gap = (a - b) + 2.0 * b * s * s;
    return std::log(gap) * std::cos(k * u);
  };
  return 2.0 * rule.integrate(f, 0.0, kPi, 1e-14);
}

double doublecap_kernel_integral(unsigned k) {
  if (k == 0) throw Error(ErrorCode::DomainError, "k must be >= 1");
  return kPi * fourier_log_integral(5.0, 3.0, k);
}

double doublecap_kernel_quadrature(unsigned k, bool sine) {
  const auto weight = [k, sine](double t) { return sine ? std::sin(k * t) : std::cos(k * t); };
  const auto outer = [&](double alpha) {
    const auto inner = [&](double theta) {
      return std::log(5.0 - 3.0 * std::cos(theta - alpha)) * weight(theta);
    };
    return adaptive(inner, 0.0, 2.0 * kPi) * weight(alpha);
  };
  return adaptive(outer, 0.0, 2.0 * kPi);
}

double single_mode_J(double z_n, double gamma, unsigned k) {
  require_unit_height(z_n);
  if (k == 0) throw Error(ErrorCode::DomainError, "k must be >= 1");
  const double kk = static_cast<double>(k);
  return (kk * kk - 1.0) / std::sqrt(1.0 - z_n * z_n) +
         4.0 * gamma * ((1.0 - z_n * z_n) / kk + (z_n - 1.0));
}

double axisym_pm_bound(double z_n, double gamma) {
  require_unit_height(z_n);
  const double r = std::sqrt(1.0 - z_n * z_n);
  return -4.0 / r + 32.0 * gamma * (1.0 - z_n * z_n) * (std::log(2.0) - std::log(r)) +
         16.0 * gamma * (z_n - 1.0);
}

std::string_view to_string(Parity parity) noexcept {
  switch (parity) {
    case Parity::Constant: return "const";
    case Parity::Cos: return "cos";
    case Parity::Sin: return "sin";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::CertifiedUnstable ? "certified-unstable" : "no-certificate";
}

std::size_t JMatrix::index(std::size_t circle, unsigned k, Parity parity) const {
  const std::size_t n = circles();
  if (circle >= n || k > K || ((k == 0) != (parity == Parity::Constant))) {
    throw Error(ErrorCode::IndexOutOfRange, "no basis function for this circle/mode");
  }
  if (k == 0) return circle;
  const std::size_t base = n + (k - 1) * 2 * n;
  return base + (parity == Parity::Sin ? n : 0) + circle;
}

double JMatrix::basis_norm_sq(std::size_t circle, unsigned k) const {
  return (k == 0 ? 2.0 : 1.0) * kPi * radii.at(circle);
}

JMatrix assemble_J(const AxisymPattern& p, double gamma, unsigned K, Convention convention,
                   double critical_tolerance) {
  const double res = max_abs(residuals(p, gamma, p.mass(), convention));
  if (!(res <= critical_tolerance)) {
    throw Error(ErrorCode::NotCritical,
                "pattern is not critical: residual " + format_double(res));
  }
  const std::size_t n = p.size();
  JMatrix J{p, gamma, K, {}, {}};
  std::vector<double> heights(n);
  std::vector<double> grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    heights[i] = p.z_at(i + 1);
    J.radii.push_back(std::sqrt(1.0 - heights[i] * heights[i]));
    grad[i] = grad_v_normal(p, i + 1);
  }
  const auto size = static_cast<Eigen::Index>(n * (2 * K + 1));
  J.matrix = Eigen::MatrixXd::Zero(size, size);

  for (unsigned k = 0; k <= K; ++k) {
    // Angular integral of cos(k t) cos(k s) (or sin sin) against a kernel of t - s.
    const double angular = k == 0 ? 2.0 * kPi : kPi;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double ri = J.radii[i];
        const double rj = J.radii[j];
        const double dz = heights[i] - heights[j];
        const double a = ri * ri + rj * rj + dz * dz;
        const double b = 2.0 * ri * rj;
        // G = -(1/2 pi) log|x - y| and log|x - y| = (1/2) log(a - b cos).
        double value = 8.0 * gamma * (-1.0 / (2.0 * kPi)) * ri * rj * angular * 0.5 *
                       fourier_log_integral(a, std::min(a, b), k);
        if (i == j) {
          const double kk = static_cast<double>(k);
          value += k == 0 ? -2.0 * kPi / ri : kPi * (kk * kk - 1.0) / ri;
          value += 4.0 * gamma * grad[i] * angular * ri;
        }
        if (k == 0) {
          J.matrix(static_cast<Eigen::Index>(J.index(i, 0, Parity::Constant)),
                   static_cast<Eigen::Index>(J.index(j, 0, Parity::Constant))) = value;
        } else {
          for (Parity parity : {Parity::Cos, Parity::Sin}) {
            J.matrix(static_cast<Eigen::Index>(J.index(i, k, parity)),
                     static_cast<Eigen::Index>(J.index(j, k, parity))) = value;
          }
        }
      }
    }
  }
  return J;
}

double axisym_pm_exact(const JMatrix& J) {
  const std::size_t last = J.circles() - 1;
  const double value = J.entry(0, 0, 0, Parity::Constant) + J.entry(last, last, 0, Parity::Constant) -
                       2.0 * J.entry(0, last, 0, Parity::Constant);
  return value / kPi;
}

StabilityReport min_eig_constrained(const JMatrix& J) {
  const std::size_t n = J.circles();
  const auto full = J.matrix.rows();
  StabilityReport report;
  report.gamma = J.gamma;
  report.K = J.K;

  // Normalize the basis in L^2 of the boundary.
  Eigen::VectorXd scale(full);
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned k = 0; k <= J.K; ++k) {
      const double s = 1.0 / std::sqrt(J.basis_norm_sq(i, k));
      if (k == 0) {
        scale(static_cast<Eigen::Index>(J.index(i, 0, Parity::Constant))) = s;
      } else {
        scale(static_cast<Eigen::Index>(J.index(i, k, Parity::Cos))) = s;
        scale(static_cast<Eigen::Index>(J.index(i, k, Parity::Sin))) = s;
      }
    }
  }
  const Eigen::MatrixXd M = scale.asDiagonal() * J.matrix * scale.asDiagonal();
  report.diagonal.assign(M.diagonal().data(), M.diagonal().data() + full);

  // Zero mean touches only the constants: sum_i c_i 2 pi r_i = 0, i.e. the
  // normalized coefficients are orthogonal to w_i = sqrt(2 pi r_i).
  const auto nc = static_cast<Eigen::Index>(n);
  Eigen::VectorXd w(nc);
  for (std::size_t i = 0; i < n; ++i) w(static_cast<Eigen::Index>(i)) = std::sqrt(J.basis_norm_sq(i, 0));
  const Eigen::MatrixXd householder = Eigen::HouseholderQR<Eigen::MatrixXd>(w).householderQ();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(full, full - 1);
  T.topLeftCorner(nc, nc - 1) = householder.rightCols(nc - 1);
  T.bottomRightCorner(full - nc, full - nc) = Eigen::MatrixXd::Identity(full - nc, full - nc);
  const Eigen::MatrixXd reduced = T.transpose() * M * T;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "symmetric eigensolver failed");
  }
  const double lambda = solver.eigenvalues()(0);
  const Eigen::VectorXd v = solver.eigenvectors().col(0);
  report.min_eig = lambda;
  report.eigen_residual = (reduced * v - lambda * v).norm();
  const double norm = std::max(1.0, reduced.norm());
  if (report.eigen_residual > 1e-10 * norm) {
    throw Error(ErrorCode::ToleranceNotMet,
                "eigenpair residual " + format_double(report.eigen_residual));
  }

  Eigen::Index dominant = 0;
  (T * v).cwiseAbs().maxCoeff(&dominant);
  const auto d = static_cast<std::size_t>(dominant);
  if (d < n) {
    report.mode = {d + 1, 0, Parity::Constant};
  } else {
    const std::size_t offset = d - n;
    const auto k = static_cast<unsigned>(offset / (2 * n) + 1);
    const std::size_t within = offset % (2 * n);
    report.mode = {within % n + 1, k, within < n ? Parity::Cos : Parity::Sin};
  }

  const auto& p = J.pattern;
  const double z_n = p.z_at(p.size());
  bool unstable = lambda < -1e-9;
  if (std::abs(p.mass()) <= 1e-12 && z_n > 0.0 && z_n < 1.0) {
    for (unsigned k = 1; k <= J.K; ++k) {
      report.single_mode.push_back(single_mode_J(z_n, J.gamma, k));
      unstable = unstable || report.single_mode.back() < 0.0;
    }
    report.axisym_pm = axisym_pm_bound(z_n, J.gamma);
    unstable = unstable || *report.axisym_pm < 0.0;
  }
  report.verdict = unstable ? Verdict::CertifiedUnstable : Verdict::NoCertificate;
  return report;
}

}  // namespace oksphere
