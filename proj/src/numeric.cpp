#include "oksphere/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "oksphere/error.hpp"

namespace oksphere {

namespace {

double parse_double(std::string_view text) {
  // std::from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

LinearRange LinearRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "range must look like start:end:count, got '" + std::string(text) + "'");
  }
  LinearRange range;
  range.start = parse_double(text.substr(0, first));
  range.end = parse_double(text.substr(first + 1, second - first - 1));
  const double count = parse_double(text.substr(second + 1));
  if (count < 0 || count != std::floor(count)) {
    throw Error(ErrorCode::InvalidArgument, "range count must be a non-negative integer");
  }
  range.count = static_cast<std::size_t>(count);
  if (range.count == 0) throw Error(ErrorCode::EmptyRange, "range has zero points");
  return range;
}

std::vector<double> LinearRange::values() const {
  if (count == 0) throw Error(ErrorCode::EmptyRange, "range has zero points");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (end - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  out.back() = end;
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::EmptyRange, "log range has zero points");
  if (!(lo > 0.0 && hi > 0.0)) throw Error(ErrorCode::NonPositive, "log range needs positive ends");
  const LinearRange exponents{std::log10(lo), std::log10(hi), count};
  auto out = exponents.values();
  for (auto& v : out) v = std::pow(10.0, v);
  out.front() = lo;
  out.back() = hi;
  return out;
}

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double x_tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evaluations = 2;
  for (int i = 0; i < max_iterations && (b - a) > x_tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc < fd ? ScalarMinimum{c, fc, evaluations} : ScalarMinimum{d, fd, evaluations};
}

ScalarMinimum bracketed_minimum(const std::function<double(double)>& f, double lo, double hi,
                                double x_tol, int samples) {
  samples = std::max(samples, 3);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1 ? hi : lo + step * i;
    const double value = f(x);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  const double a = best == 0 ? lo : lo + step * (best - 1);
  const double b = best == samples - 1 ? hi : lo + step * (best + 1);
  auto refined = golden_section(f, a, b, x_tol);
  refined.evaluations += samples;
  if (best_value <= refined.value) {
    const double x = best == samples - 1 ? hi : lo + step * best;
    return {x, best_value, refined.evaluations};
  }
  return refined;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw Error(ErrorCode::DomainError, "bisection bracket has no sign change");
  }
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace oksphere
