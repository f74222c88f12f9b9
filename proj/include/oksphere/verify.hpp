#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oksphere/pattern.hpp"

namespace oksphere {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  /// Reported but not counted as pass/fail.
  bool informational = false;
};

/// Random valid pattern with 1..max_n interfaces and |m| < max_abs_mass.
/// `next` returns 64-bit words (e.g. a seeded std::mt19937_64).
AxisymPattern random_pattern(const std::function<std::uint64_t()>& next, std::size_t max_n,
                             double max_abs_mass);

/// The numbered acceptance criteria, one result each, followed by
/// informational lines.
std::vector<CheckResult> acceptance_checks(std::uint64_t seed = 1);

/// Oracle-equivalence and reference-value checks run by `verify`.
std::vector<CheckResult> verification_suite(std::uint64_t seed = 1);

}  // namespace oksphere
