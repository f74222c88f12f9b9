#include "oksphere/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "oksphere/criticality.hpp"
#include "oksphere/energy.hpp"
#include "oksphere/error.hpp"
#include "oksphere/io.hpp"
#include "oksphere/minimizer.hpp"
#include "oksphere/numeric.hpp"
#include "oksphere/stability.hpp"
#include "oksphere/verify.hpp"

namespace oksphere {

namespace {

using nlohmann::json;

constexpr const char* kOutputDirEnv = "OKSPHERE_OUTPUT_DIR";

struct Common {
  std::string out = "-";
  std::uint64_t seed = 0;
  std::string convention = "published";
  double m_target = 0.0;
};

Convention parse_convention(const std::string& name) {
  return name == "energy-consistent" ? Convention::EnergyConsistent : Convention::Published;
}

// Where results go. Files are opened only once the result exists, so a
// failing command leaves no partial output behind.
class Output {
 public:
  Output(std::ostream& fallback, const CLI::App* command, const Common& common)
      : fallback_(fallback), common_(common) {
    meta_ = std::string("oksphere ") + std::string(kToolVersion) +
            " config=" + fnv1a_hex(command->config_to_str(true, false)) +
            " seed=" + std::to_string(common.seed);
    hash_ = fnv1a_hex(command->config_to_str(true, false));
  }

  const std::string& meta() const { return meta_; }

  json meta_json() const {
    return {{"tool", "oksphere"},
            {"version", std::string(kToolVersion)},
            {"config_hash", hash_},
            {"seed", common_.seed}};
  }

  void write(const std::string& text) const { write_to(common_.out, text); }

  void write_json(json j) const {
    j["meta"] = meta_json();
    write(j.dump(2) + "\n");
  }

  static std::filesystem::path resolve(const std::string& path) {
    std::filesystem::path p(path);
    const char* dir = std::getenv(kOutputDirEnv);
    if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
    return p;
  }

  void write_to(const std::string& path, const std::string& text) const {
    if (path == "-") {
      fallback_ << text;
      return;
    }
    const auto target = resolve(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::ofstream file(target, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + target.string());
    file << text;
  }

 private:
  std::ostream& fallback_;
  const Common& common_;
  std::string meta_;
  std::string hash_;
};

void add_common(CLI::App* cmd, Common& c, bool with_physics = true) {
  cmd->add_option("--out,-o", c.out, "Output file ('-' for stdout); relative paths resolve under $" +
                                         std::string(kOutputDirEnv))
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed recorded in the output (and used by randomized checks)")
      ->capture_default_str();
  if (with_physics) {
    cmd->add_option("--convention", c.convention,
                    "Sign of the potential term: published | energy-consistent")
        ->check(CLI::IsMember({"published", "energy-consistent"}))
        ->capture_default_str();
    cmd->add_option("--m-target", c.m_target, "Target mass for the criticality system")
        ->capture_default_str();
  }
}

AxisymPattern load_pattern(const std::string& list, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(Output::resolve(file));
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read pattern file " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return pattern_from_string(buffer.str());
  }
  if (list.empty()) throw Error(ErrorCode::InvalidArgument, "give --z or --pattern");
  return AxisymPattern::make(parse_list(list));
}

// Interfaces equally spaced in atanh(z): z_i = tanh(2 (-1 + (2i-1)/n)).
AxisymPattern atanh_uniform(std::size_t n) {
  std::vector<double> zs(n);
  for (std::size_t i = 1; i <= n; ++i) {
    zs[i - 1] = std::tanh(2.0 * (-1.0 + static_cast<double>(2 * i - 1) / static_cast<double>(n)));
  }
  return AxisymPattern::make(std::move(zs));
}

AxisymPattern initial_guess(const std::string& kind, std::size_t n, double gamma,
                            const std::string& list) {
  if (kind == "uniform") return uniform_pattern(n);
  if (kind == "atanh") return atanh_uniform(n);
  if (kind == "list") {
    auto p = AxisymPattern::make(parse_list(list));
    if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "--z must have --n entries");
    return p;
  }
  // "seed": a point of the explicit symmetric branches.
  if (n == 2) return AxisymPattern::make({-0.5, 0.5});
  if (n == 3) return three_interface_seed(gamma);
  if (n == 4) return four_interface_seed(gamma);
  throw Error(ErrorCode::InvalidArgument, "--init seed exists for n = 2, 3, 4 only");
}

json critical_json(const CriticalPoint& c) {
  json j = catalog_record(c);
  j["lambda_spread"] = c.lambda_spread;
  j["trace"] = {{"iterations", c.trace.iterations},
                {"damping_events", c.trace.damping_events},
                {"initial_guess", c.trace.initial_guess}};
  return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// JSON config values become flag tokens placed in front of the user's own
// flags, so that the command line wins (every option keeps its last value).
std::vector<std::string> config_tokens(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
    } else if (value.is_array()) {
      std::vector<std::string> parts;
      for (const auto& v : value) parts.push_back(v.is_number() ? format_double(v.get<double>()) : v.get<std::string>());
      tokens.push_back(flag + "=" + join(parts, ","));
    } else if (value.is_number()) {
      tokens.push_back(flag + "=" + (value.is_number_integer() ? std::to_string(value.get<std::int64_t>())
                                                              : format_double(value.get<double>())));
    } else if (value.is_string()) {
      tokens.push_back(flag + "=" + value.get<std::string>());
    } else {
      throw Error(ErrorCode::InvalidArgument, "config value for '" + key + "' must be scalar or array");
    }
  }
  return tokens;
}

std::vector<std::string> inject_config(std::vector<std::string> args) {
  std::string file;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (file.empty()) return rest;
  static const std::set<std::string> kCommands = {
      "energy", "sweep2",  "xi",     "critical", "solve",     "continue", "check-uniform",
      "gamma-curve", "minimize", "escape", "stability", "bounds", "verify"};
  std::size_t at = 0;
  while (at < rest.size() && kCommands.count(rest[at]) != 0) ++at;
  const auto tokens = config_tokens(file);
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), tokens.begin(), tokens.end());
  return rest;
}

std::vector<double> sample_with_nodes(const AxisymPattern& p, std::size_t points) {
  std::vector<double> zs = LinearRange{-1.0, 1.0, points}.values();
  for (std::size_t k = 1; k <= p.size(); ++k) zs.push_back(p.z_at(k));
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  return zs;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Axisymmetric sharp-interface Ohta-Kawasaki energy on the unit sphere"};
  app.name("oksphere");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.footer(
      "Ranges are start:end:count, inclusive of both ends. Lists are comma separated, e.g.\n"
      "--z=-0.5,0.5. --config FILE reads a JSON object whose keys mirror the long flags of the\n"
      "chosen command; flags given on the command line take precedence.\n"
      "Exit codes: 0 ok, 1 usage error, 2 numerical failure, 3 verification failure.");

  Common common;
  std::function<int()> action;

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "Energy breakdown of a pattern (JSON)");
  std::string z_list;
  std::string pattern_file;
  double gamma = 1.0;
  bool with_quadrature = false;
  add_common(energy_cmd, common, false);
  energy_cmd->add_option("--z", z_list, "Interface heights");
  energy_cmd->add_option("--pattern", pattern_file, "Pattern JSON file {\"z\": [...], \"m\": ...}");
  energy_cmd->add_option("--gamma", gamma, "Nonlocal strength")->required();
  energy_cmd->add_flag("--quadrature", with_quadrature, "Also evaluate the quadrature oracle");
  energy_cmd->callback([&] {
    action = [&] {
      const auto p = load_pattern(z_list, pattern_file);
      json j = breakdown_to_json(total_energy(p, gamma));
      j["gamma"] = gamma;
      j["pattern"] = pattern_to_json(p);
      if (with_quadrature) j["nonlocal_quadrature"] = nonlocal_quadrature(p, gamma);
      Output(out, energy_cmd, common).write_json(j);
      return 0;
    };
  });

  // sweep2
  auto* sweep_cmd = app.add_subcommand("sweep2", "Two-interface zero-mass energy grid (CSV)");
  std::string z1_range = "-0.99:0:199";
  std::string gamma_range = "0.1:10:100";
  add_common(sweep_cmd, common, false);
  sweep_cmd->add_option("--z1", z1_range, "Range of the first interface in (-1, 0]")->capture_default_str();
  sweep_cmd->add_option("--gamma", gamma_range, "Range of gamma")->capture_default_str();
  sweep_cmd->callback([&] {
    action = [&] {
      const auto grid = two_interface_grid(LinearRange::parse(z1_range), LinearRange::parse(gamma_range));
      Output sink(out, sweep_cmd, common);
      std::ostringstream text;
      CsvWriter csv(text, {"z1", "gamma", "energy_over_pi"}, sink.meta());
      for (std::size_t i = 0; i < grid.z1.size(); ++i) {
        for (std::size_t j = 0; j < grid.gamma.size(); ++j) csv.row({grid.z1[i], grid.gamma[j], grid.at(i, j)});
      }
      sink.write(text.str());
      return 0;
    };
  });

  // xi
  auto* xi_cmd = app.add_subcommand("xi", "Dump the xi profile (CSV z,xi on a grid plus the nodes)");
  std::size_t xi_points = 201;
  add_common(xi_cmd, common, false);
  xi_cmd->add_option("--z", z_list, "Interface heights");
  xi_cmd->add_option("--pattern", pattern_file, "Pattern JSON file");
  xi_cmd->add_option("--points", xi_points, "Grid points on [-1, 1]")->capture_default_str()->check(CLI::PositiveNumber);
  xi_cmd->callback([&] {
    action = [&] {
      const auto p = load_pattern(z_list, pattern_file);
      Output sink(out, xi_cmd, common);
      std::ostringstream text;
      CsvWriter csv(text, {"z", "xi"}, sink.meta());
      for (double z : sample_with_nodes(p, xi_points)) csv.row({z, xi_eval(p, z)});
      sink.write(text.str());
      return 0;
    };
  });

  // critical
  auto* critical_cmd = app.add_subcommand("critical", "Critical points of the axisymmetric problem");
  critical_cmd->require_subcommand(1);
  std::size_t n_interfaces = 3;
  std::string init = "uniform";
  double tolerance = 1e-11;

  auto* solve_cmd = critical_cmd->add_subcommand("solve", "Damped Newton solve at one gamma (JSON)");
  add_common(solve_cmd, common);
  solve_cmd->add_option("--n", n_interfaces, "Number of interfaces")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--gamma", gamma, "Nonlocal strength")->required();
  solve_cmd->add_option("--init", init, "Initial guess: uniform | atanh | seed | list")
      ->check(CLI::IsMember({"uniform", "atanh", "seed", "list"}))
      ->capture_default_str();
  solve_cmd->add_option("--z", z_list, "Initial interfaces for --init list");
  solve_cmd->add_option("--tol", tolerance, "Max-norm residual tolerance")->capture_default_str();
  solve_cmd->callback([&] {
    action = [&] {
      NewtonOptions opts;
      opts.tolerance = tolerance;
      opts.m_target = common.m_target;
      opts.convention = parse_convention(common.convention);
      const auto start = initial_guess(init, n_interfaces, gamma, z_list);
      const auto c = solve_critical(n_interfaces, gamma, start, opts, init);
      json j = critical_json(c);
      j["convention"] = common.convention;
      Output(out, solve_cmd, common).write_json(j);
      return 0;
    };
  });

  auto* continue_cmd = critical_cmd->add_subcommand("continue", "Gamma continuation of a branch (JSON lines)");
  double gamma_start = 1.01;
  double gamma_end = 10.0;
  std::size_t steps = 50;
  add_common(continue_cmd, common);
  continue_cmd->add_option("--n", n_interfaces, "Number of interfaces")->required()->check(CLI::PositiveNumber);
  continue_cmd->add_option("--gamma-start", gamma_start, "First gamma")->capture_default_str();
  continue_cmd->add_option("--gamma-end", gamma_end, "Last gamma")->capture_default_str();
  continue_cmd->add_option("--steps", steps, "Number of gamma increments")->capture_default_str();
  continue_cmd->add_option("--init", init, "Seed guess: uniform | atanh | seed | list")
      ->check(CLI::IsMember({"uniform", "atanh", "seed", "list"}))
      ->capture_default_str();
  continue_cmd->add_option("--z", z_list, "Seed interfaces for --init list");
  continue_cmd->add_option("--tol", tolerance, "Max-norm residual tolerance")->capture_default_str();
  continue_cmd->callback([&] {
    action = [&] {
      NewtonOptions opts;
      opts.tolerance = tolerance;
      opts.m_target = common.m_target;
      opts.convention = parse_convention(common.convention);
      const auto seed = initial_guess(init, n_interfaces, gamma_start, z_list);
      const auto branch = continue_gamma(n_interfaces, gamma_start, gamma_end, steps, seed, opts);
      Output sink(out, continue_cmd, common);
      std::string text = json{{"meta", sink.meta_json()}, {"convention", common.convention}}.dump() + "\n";
      for (const auto& c : branch) text += catalog_record(c).dump() + "\n";
      sink.write(text);
      return 0;
    };
  });

  auto* uniform_cmd = critical_cmd->add_subcommand("check-uniform", "Criticality of the uniform pattern (JSON)");
  double gamma_max = 1e4;
  add_common(uniform_cmd, common);
  uniform_cmd->add_option("--n", n_interfaces, "Number of interfaces")->required()->check(CLI::PositiveNumber);
  uniform_cmd->add_option("--gamma-max", gamma_max, "Upper end of the residual sweep")->capture_default_str();
  uniform_cmd->callback([&] {
    action = [&] {
      const auto report = uniform_criticality_check(n_interfaces, gamma_max, parse_convention(common.convention));
      json j = report_to_json(report);
      j["pattern"] = pattern_to_json(uniform_pattern(n_interfaces));
      Output(out, uniform_cmd, common).write_json(j);
      return 0;
    };
  });

  // gamma-curve
  auto* curve_cmd = app.add_subcommand("gamma-curve", "Explicit gamma(z1) of the symmetric 3/4-interface families (CSV)");
  int branch = 3;
  std::string curve_range = "0.01:0.68:200";
  add_common(curve_cmd, common);
  curve_cmd->add_option("--branch", branch, "3 or 4")->check(CLI::IsMember({3, 4}))->capture_default_str();
  curve_cmd->add_option("--z1", curve_range, "Range of z1")->capture_default_str();
  curve_cmd->callback([&] {
    action = [&] {
      const auto points = gamma_curve(branch == 3 ? Branch::Three : Branch::Four,
                                      LinearRange::parse(curve_range).values(),
                                      parse_convention(common.convention));
      Output sink(out, curve_cmd, common);
      std::ostringstream text;
      CsvWriter csv(text, {"z1", "gamma", "branch"}, sink.meta());
      for (const auto& p : points) csv.row({p.z1, p.gamma, static_cast<double>(branch)});
      sink.write(text.str());
      return 0;
    };
  });

  // minimize
  auto* minimize_cmd = app.add_subcommand("minimize", "Cyclic elementary-move minimization (pattern JSON + trace CSV)");
  std::size_t uniform_n = 0;
  MinimizeOptions min_opts;
  std::string trace_file;
  add_common(minimize_cmd, common, false);
  minimize_cmd->add_option("--z", z_list, "Starting interfaces");
  minimize_cmd->add_option("--pattern", pattern_file, "Starting pattern JSON file");
  minimize_cmd->add_option("--uniform", uniform_n, "Start from the uniform pattern with this many interfaces");
  minimize_cmd->add_option("--gamma", gamma, "Nonlocal strength")->required();
  minimize_cmd->add_flag("--symmetric", min_opts.symmetric, "Mirror every move about the equator");
  minimize_cmd->add_option("--max-cycles", min_opts.max_cycles, "Sweep limit")->capture_default_str();
  minimize_cmd->add_option("--x-tol", min_opts.x_tolerance, "Scalar search tolerance")->capture_default_str();
  minimize_cmd->add_option("--threshold", min_opts.energy_threshold, "Stop when a cycle gains less")->capture_default_str();
  minimize_cmd->add_option("--trace", trace_file, "Trace CSV (cycle,energy_over_pi,max_move)");
  minimize_cmd->callback([&] {
    action = [&] {
      const auto start = uniform_n > 0 ? uniform_pattern(uniform_n) : load_pattern(z_list, pattern_file);
      const auto result = local_minimize(start, gamma, min_opts);
      Output sink(out, minimize_cmd, common);
      if (!trace_file.empty()) {
        std::ostringstream text;
        CsvWriter csv(text, {"cycle", "energy_over_pi", "max_move"}, sink.meta());
        for (const auto& row : result.trace) csv.row({static_cast<double>(row.cycle), row.energy_over_pi, row.max_move});
        sink.write_to(trace_file, text.str());
      }
      json j = pattern_to_json(result.pattern);
      j["gamma"] = gamma;
      j["energy_over_pi"] = result.trace.back().energy_over_pi;
      j["cycles"] = result.trace.back().cycle;
      j["residual"] = {
          {"published", max_abs(residuals(result.pattern, gamma, result.pattern.mass(), Convention::Published))},
          {"energy_consistent",
           max_abs(residuals(result.pattern, gamma, result.pattern.mass(), Convention::EnergyConsistent))}};
      sink.write_json(j);
      return 0;
    };
  });

  // escape
  auto* escape_cmd = app.add_subcommand("escape", "Boundary escape: pole frame profile or a boundary configuration (JSON)");
  double alpha = 0.6;
  bool find_threshold = false;
  add_common(escape_cmd, common, false);
  escape_cmd->add_option("--alpha", alpha, "Lower root of the pole frame (beta = 1)")->capture_default_str();
  escape_cmd->add_option("--gamma", gamma, "Nonlocal strength")->required();
  escape_cmd->add_option("--z", z_list, "Boundary configuration (entries may repeat or equal +-1)");
  escape_cmd->add_flag("--find-threshold", find_threshold, "Bisect the escape threshold in gamma for --alpha");
  escape_cmd->callback([&] {
    action = [&] {
      json j;
      if (!z_list.empty()) {
        const auto config = BoundaryConfig::of(parse_list(z_list));
        j["boundary"] = {{"z", config.z}, {"m", config.mass}};
        j["energy_before_over_pi"] = energy_of(config.z, config.mass, gamma) / kPi;
        try {
          const auto p = boundary_escape(config, gamma);
          j["escapes"] = true;
          j["pattern"] = pattern_to_json(p);
          j["energy_after_over_pi"] = total_energy(p, gamma).total_over_pi();
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoEscape) throw;
          j["escapes"] = false;
          j["reason"] = e.what();
        }
      } else {
        j = escape_to_json(pole_escape_profile(alpha, gamma));
        j["beta"] = 1.0;
      }
      if (find_threshold) j["threshold_gamma"] = escape_threshold(alpha, 1e-3, 1e6);
      j["gamma"] = gamma;
      Output(out, escape_cmd, common).write_json(j);
      return 0;
    };
  });

  // stability
  auto* stability_cmd = app.add_subcommand("stability", "Second-variation report about a critical point (JSON)");
  unsigned modes = 32;
  add_common(stability_cmd, common);
  stability_cmd->add_option("--z", z_list, "Interfaces of the critical point");
  stability_cmd->add_option("--pattern", pattern_file, "Pattern JSON file");
  stability_cmd->add_option("--gamma", gamma, "Nonlocal strength")->required();
  stability_cmd->add_option("--K", modes, "Fourier mode cutoff")->capture_default_str()->check(CLI::PositiveNumber);
  stability_cmd->callback([&] {
    action = [&] {
      const auto p = load_pattern(z_list, pattern_file);
      const auto convention = parse_convention(common.convention);
      const auto report = min_eig_constrained(assemble_J(p, gamma, modes, convention));
      json j = report_to_json(report);
      const unsigned half = std::max(1U, modes / 2);
      const auto coarse = min_eig_constrained(assemble_J(p, gamma, half, convention));
      j["refinement"] = {{"K_coarse", half}, {"min_eig_coarse", coarse.min_eig},
                         {"change", report.min_eig - coarse.min_eig}};
      j["pattern"] = pattern_to_json(p);
      Output(out, stability_cmd, common).write_json(j);
      return 0;
    };
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Polar-cap lower bound on z1 (CSV gamma,a,bound)");
  std::string bound_range = "0:10:101";
  add_common(bounds_cmd, common, false);
  bounds_cmd->add_option("--gamma", bound_range, "Range of gamma")->capture_default_str();
  bounds_cmd->callback([&] {
    action = [&] {
      Output sink(out, bounds_cmd, common);
      std::ostringstream text;
      CsvWriter csv(text, {"gamma", "a", "bound"}, sink.meta());
      for (double g : LinearRange::parse(bound_range).values()) {
        csv.row({g, -6.0 * g / std::exp(1.0) - 1.0 / std::sqrt(3.0), polar_cap_bound(g)});
      }
      sink.write(text.str());
      return 0;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and reference-value checks");
  add_common(verify_cmd, common, false);
  verify_cmd->callback([&] {
    action = [&] {
      const auto results = verification_suite(common.seed);
      Output sink(out, verify_cmd, common);
      std::string text = "# " + sink.meta() + "\n";
      bool ok = true;
      for (const auto& r : results) {
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.id + "  " + r.title + ": " + r.detail + "\n";
        ok = ok && r.passed;
      }
      sink.write(text);
      return ok ? 0 : static_cast<int>(kExitVerification);
    };
  });

  try {
    args = inject_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_failure(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace oksphere
