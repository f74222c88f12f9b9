#include "oksphere/io.hpp"

#include <charconv>
#include <cmath>

#include "oksphere/error.hpp"
#include "oksphere/numeric.hpp"

namespace oksphere {

namespace {

// nlohmann writes non-finite doubles as null; keep them readable instead.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

nlohmann::json pattern_to_json(const AxisymPattern& p) {
  const auto zs = p.interfaces();
  return {{"z", std::vector<double>(zs.begin(), zs.end())}, {"m", p.mass()}};
}

AxisymPattern pattern_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("z") || !j["z"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "pattern JSON needs a \"z\" array");
  }
  auto zs = j["z"].get<std::vector<double>>();
  if (j.contains("m")) return AxisymPattern::with_mass(std::move(zs), j["m"].get<double>());
  return AxisymPattern::make(std::move(zs));
}

AxisymPattern pattern_from_string(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("pattern JSON: ") + e.what());
  }
  return pattern_from_json(j);
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidArgument, "not a number in list: '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

nlohmann::json breakdown_to_json(const EnergyBreakdown& e) {
  return {{"perimeter", e.perimeter},
          {"nonlocal", e.nonlocal},
          {"total", e.total},
          {"total_over_pi", e.total_over_pi()},
          {"per_segment", e.per_segment}};
}

nlohmann::json catalog_record(const CriticalPoint& c) {
  const auto zs = c.pattern.interfaces();
  const auto gaps = gap_diagnostics(c.pattern, c.gamma);
  return {{"n", c.pattern.size()},
          {"gamma", c.gamma},
          {"z", std::vector<double>(zs.begin(), zs.end())},
          {"lambda", c.lambda},
          {"residual", c.residual_norm},
          {"min_gap", number(gaps.min_gap)}};
}

nlohmann::json report_to_json(const StabilityReport& r) {
  nlohmann::json certificates = {{"single_mode", r.single_mode}};
  certificates["axisym_pm"] = r.axisym_pm ? nlohmann::json(*r.axisym_pm) : nlohmann::json();
  return {{"gamma", r.gamma},
          {"K", r.K},
          {"min_eig", r.min_eig},
          {"mode",
           {{"circle", r.mode.circle}, {"k", r.mode.k}, {"parity", std::string(to_string(r.mode.parity))}}},
          {"certificates", certificates},
          {"verdict", std::string(to_string(r.verdict))}};
}

nlohmann::json report_to_json(const UniformReport& r) {
  nlohmann::json ratios = nlohmann::json::array();
  for (const auto& p : r.ratios) {
    ratios.push_back({{"pair", p.pair},
                      {"kappa_difference", p.kappa_difference},
                      {"v_difference", p.v_difference},
                      {"gamma", number(p.gamma)}});
  }
  nlohmann::json out = {{"n_interfaces", r.n_interfaces},
                        {"critical_for_all_gamma", r.critical_for_all_gamma},
                        {"ratios", ratios},
                        {"min_residual_over_sweep", r.min_residual_over_sweep}};
  out["critical_gamma"] = r.critical_gamma ? nlohmann::json(*r.critical_gamma) : nlohmann::json();
  if (r.obstruction) {
    out["obstruction"] = {{"pairs", {r.obstruction->first.pair, r.obstruction->second.pair}},
                          {"gammas", {number(r.obstruction->first.gamma), number(r.obstruction->second.gamma)}},
                          {"gap", number(r.obstruction_gap)}};
  } else {
    out["obstruction"] = nullptr;
  }
  return out;
}

nlohmann::json escape_to_json(const PoleEscape& e) {
  return {{"alpha", e.alpha}, {"gamma", e.gamma},     {"x_min", e.x_min},
          {"e_min", e.e_min}, {"limit", e.limit},     {"escapes", e.escapes}};
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header, std::string_view comment)
    : out_(out), width_(header.size()) {
  if (!comment.empty()) out_ << "# " << comment << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw Error(ErrorCode::InvalidArgument, "CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

}  // namespace oksphere
