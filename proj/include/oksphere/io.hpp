#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "oksphere/criticality.hpp"
#include "oksphere/energy.hpp"
#include "oksphere/minimizer.hpp"
#include "oksphere/pattern.hpp"
#include "oksphere/stability.hpp"

namespace oksphere {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// {"z": [...], "m": ...}. Doubles are written in shortest round-trip form.
nlohmann::json pattern_to_json(const AxisymPattern& p);

/// Inverse of pattern_to_json; the stored mass is restored bit-exactly. "m"
/// is optional, in which case the mass is computed.
AxisymPattern pattern_from_json(const nlohmann::json& j);

AxisymPattern pattern_from_string(std::string_view text);

/// Comma-separated reals, e.g. "-0.5,0.5".
std::vector<double> parse_list(std::string_view text);

nlohmann::json breakdown_to_json(const EnergyBreakdown& e);

/// One catalog line: {"n", "gamma", "z", "lambda", "residual", "min_gap"}.
nlohmann::json catalog_record(const CriticalPoint& c);

nlohmann::json report_to_json(const StabilityReport& r);

nlohmann::json report_to_json(const UniformReport& r);

nlohmann::json escape_to_json(const PoleEscape& e);

/// Writes rows of reals under a fixed header. An optional comment line
/// ("# ...") comes first. Values use round-trip formatting.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header, std::string_view comment = {});

  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace oksphere
