#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace oksphere {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Inclusive linear range `start:end:count`.
struct LinearRange {
  double start = 0.0;
  double end = 0.0;
  std::size_t count = 0;

  /// Parses "start:end:count"; throws Error(EmptyRange) on count == 0 and
  /// Error(InvalidArgument) on malformed text.
  static LinearRange parse(std::string_view text);

  std::vector<double> values() const;
};

/// `count` points spaced evenly in log10 between lo and hi, both included.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search on [lo, hi] until the bracket is shorter than x_tol.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double x_tol, int max_iterations = 200);

/// Samples f on `samples` evenly spaced points of [lo, hi], then refines the
/// best sample's neighbouring bracket with golden-section search.
ScalarMinimum bracketed_minimum(const std::function<double(double)>& f, double lo, double hi,
                                double x_tol, int samples = 33);

/// Bisection for a sign change of f on [lo, hi]. Throws Error(DomainError) if
/// f(lo) and f(hi) have the same sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double x_tol);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Portable uniform double in [0, 1) from a 64-bit generator word.
inline double unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

/// FNV-1a 64-bit hash, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace oksphere
