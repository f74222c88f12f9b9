#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "oksphere/criticality.hpp"
#include "oksphere/pattern.hpp"

namespace oksphere {

/// int_0^{2 pi} log(a - b cos u) cos(k u) du for a >= b >= 0, a > 0:
/// -(2 pi / k) q^k with q = (a - sqrt(a^2 - b^2)) / b for k >= 1, and
/// 2 pi log((a + sqrt(a^2 - b^2)) / 2) for k = 0. Throws Error(DomainError)
/// when b > a.
double fourier_log_integral(double a, double b, unsigned k);

/// The same integral by tanh-sinh quadrature (handles the log singularity at
/// u = 0 when a = b). Independent check of the closed form.
double fourier_log_integral_quadrature(double a, double b, unsigned k);

/// int int log(5 - 3 cos(theta - alpha)) cos(k theta) cos(k alpha) over
/// [0, 2 pi]^2 = -2 pi^2 / (k 3^k).
double doublecap_kernel_integral(unsigned k);

/// The same double integral by nested adaptive Gauss-Kronrod, with cos-cos or
/// sin-sin weights.
double doublecap_kernel_quadrature(unsigned k, bool sine = false);

/// J(f_k)/pi for f = sin(k theta) on the last circle of a zero-mass
/// equatorially symmetric critical pattern:
/// (k^2 - 1)/sqrt(1 - z^2) + 4 gamma ((1 - z^2)/k + (z - 1)).
double single_mode_J(double z_n, double gamma, unsigned k);

/// Upper bound for J(f)/pi with f = +1 on the first and -1 on the last circle:
/// -4/sqrt(1 - z^2) + 32 gamma (1 - z^2)(log 2 - log sqrt(1 - z^2)) + 16 gamma (z - 1).
double axisym_pm_bound(double z_n, double gamma);

enum class Parity { Constant, Cos, Sin };

std::string_view to_string(Parity parity) noexcept;

/// Second variation on the basis {1, cos k theta, sin k theta : 1 <= k <= K}
/// of every interface circle. Row/column layout: the n constants first, then
/// for each k the n cosines followed by the n sines.
struct JMatrix {
  AxisymPattern pattern;
  double gamma = 0.0;
  unsigned K = 0;
  std::vector<double> radii;
  Eigen::MatrixXd matrix;

  std::size_t circles() const noexcept { return radii.size(); }
  /// circle is 0-based; k = 0 only with Parity::Constant.
  std::size_t index(std::size_t circle, unsigned k, Parity parity) const;
  double entry(std::size_t ci, std::size_t cj, unsigned k, Parity parity) const {
    return matrix(static_cast<Eigen::Index>(index(ci, k, parity)),
                  static_cast<Eigen::Index>(index(cj, k, parity)));
  }
  /// L^2 norm squared of a basis function on its circle: 2 pi r or pi r.
  double basis_norm_sq(std::size_t circle, unsigned k) const;
};

/// Assembles J about a critical point. Throws Error(NotCritical) when the
/// residuals under `convention` exceed `critical_tolerance`.
JMatrix assemble_J(const AxisymPattern& p, double gamma, unsigned K,
                   Convention convention = Convention::Published,
                   double critical_tolerance = 1e-8);

/// J(f)/pi for f = +1 on the first circle and -1 on the last one.
double axisym_pm_exact(const JMatrix& J);

struct ModeDescription {
  std::size_t circle = 0;  // 1-based
  unsigned k = 0;
  Parity parity = Parity::Constant;
};

enum class Verdict { CertifiedUnstable, NoCertificate };

std::string_view to_string(Verdict verdict) noexcept;

struct StabilityReport {
  double gamma = 0.0;
  unsigned K = 0;
  /// Smallest eigenvalue of J on zero-mean functions, in the L^2(boundary)
  /// normalized basis.
  double min_eig = 0.0;
  ModeDescription mode;
  double eigen_residual = 0.0;
  /// Normalized diagonal of J, in matrix order.
  std::vector<double> diagonal;
  /// single_mode_J for k = 1..K when the pattern has zero mass and z_n in
  /// (0, 1); empty otherwise.
  std::vector<double> single_mode;
  std::optional<double> axisym_pm;
  Verdict verdict = Verdict::NoCertificate;
};

/// Restricts the constants to the zero-mean hyperplane, normalizes the basis
/// in L^2 of the boundary and diagonalizes. Throws Error(ToleranceNotMet) if
/// the eigenpair residual exceeds 1e-10 relative to the matrix norm.
StabilityReport min_eig_constrained(const JMatrix& J);

}  // namespace oksphere
