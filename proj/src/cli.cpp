#include "chz/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chz/demos.hpp"
#include "chz/forcing_library.hpp"
#include "chz/frac_power.hpp"
#include "chz/json_io.hpp"
#include "chz/ode_sim.hpp"
#include "chz/reduction.hpp"

namespace chz {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string matrix_path;
  std::string output_format = "json";
  std::string out_path;

  double alpha = 0.5;
  std::string method = "eig";

  std::string forcing = "zero";
  std::string x0;
  double t0 = 0.0;
  double t1 = 5.0;
  double step = 1e-3;
  bool compare_reduced = false;
  std::string csv_path;

  double omega = 2.0;
  double beta = 1.0;
  double r0 = 1.0, v1 = 1.0, v2 = 2.0, v3 = 3.0;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Tolerances tolerances_from_env() {
  Tolerances tol;
  if (const char* env = std::getenv("CHZ_TOLERANCE")) {
    const std::string_view text(env);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0) ||
        !std::isfinite(value))
      throw UsageError("CHZ_TOLERANCE must be a positive decimal number, got '" +
                       std::string(text) + "'");
    tol.relative = value;
  }
  return tol;
}

void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::runtime_error("cannot write '" + cfg.out_path + "'");
  file << text;
}

void check_window(const CliConfig& cfg) {
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) throw UsageError("--step must be positive");
  if (!(cfg.t1 > cfg.t0)) throw UsageError("--t1 must exceed --t0");
}

int cmd_reduce(const CliConfig& cfg, std::ostream& out) {
  const auto a = parse_matrix(read_input(cfg.matrix_path));
  const auto eq = reduce(a);
  if (cfg.output_format == "csv") {
    std::ostringstream csv;
    csv << "k,re(a_k),im(a_k)\n";
    for (std::size_t k = 0; k < eq.a.coeffs.size(); ++k)
      csv << k << ',' << format_double(eq.a.coeffs[k].real()) << ','
          << format_double(eq.a.coeffs[k].imag()) << '\n';
    emit(cfg, out, csv.str());
  } else {
    emit(cfg, out, reduced_equation_to_json(eq).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_fracpow(const CliConfig& cfg, std::ostream& out) {
  const auto a = parse_matrix(read_input(cfg.matrix_path));
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw UsageError("--alpha must lie in (0,1]");
  FracMethod method;
  try {
    method = parse_frac_method(cfg.method);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto power = frac_power({a, cfg.alpha, method});
  emit(cfg, out, matrix_to_json(power).dump(2) + "\n");
  return kExitOk;
}

int cmd_simulate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto a = parse_matrix(read_input(cfg.matrix_path));
  check_window(cfg);
  if (cfg.x0.empty()) throw UsageError("--x0 is required");
  const ComplexVector x0(parse_complex_list(cfg.x0));
  if (x0.size() != a.n())
    throw UsageError("--x0 has " + std::to_string(x0.size()) + " entries, matrix is " +
                     std::to_string(a.n()) + "x" + std::to_string(a.n()));
  const auto f = forcing_by_name(cfg.forcing);
  if (cfg.compare_reduced && a.n() != 2 && a.n() != 3)
    throw UsageError("--compare-reduced needs a 2x2 or 3x3 matrix");

  const auto forcing = ForcingSpec::structured(a.n(), f);
  const auto traj = integrate_system({a, forcing, x0, cfg.t0, cfg.t1, cfg.step});

  Json summary;
  summary["n"] = a.n();
  summary["forcing"] = f.name;
  summary["t0"] = cfg.t0;
  summary["t1"] = traj.t.back();
  summary["step"] = cfg.step;
  summary["samples"] = traj.size();
  summary["final_state"] = complex_array_to_json(traj.states.back().values());
  if (cfg.compare_reduced) {
    const auto reduction = companion_scalar_reduce(a, x0, forcing, cfg.t0);
    const auto scalar = integrate_scalar(reduction, f, cfg.t0, cfg.t1, cfg.step);
    summary["reduced"] = scalar_reduction_to_json(reduction);
    summary["max_deviation"] = compare_components(traj, scalar, 0, 0);
    summary["relative_deviation"] = relative_component_deviation(traj, scalar, 0, 0);
  }

  std::ostream* summary_stream = &out;
  if (cfg.csv_path == "-") {
    write_trajectory_csv(out, traj);
    summary_stream = &err;
  } else if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) throw std::runtime_error("cannot write '" + cfg.csv_path + "'");
    write_trajectory_csv(csv, traj);
  }
  const std::string text = summary.dump(2) + "\n";
  if (summary_stream == &out)
    emit(cfg, out, text);
  else
    *summary_stream << text;
  return kExitOk;
}

int cmd_demo(const std::string& name, const CliConfig& cfg, std::ostream& out) {
  check_window(cfg);
  const Tolerances tol = tolerances_from_env();
  const Window window{cfg.t0, cfg.t1, cfg.step};
  Json report;
  try {
    if (name == "oscillator") {
      report = to_json(demo_oscillator(cfg.omega, cfg.alpha, forcing_by_name(cfg.forcing), window, tol));
    } else if (name == "thirdorder") {
      report = to_json(demo_thirdorder(cfg.beta, cfg.alpha, forcing_by_name(cfg.forcing), window, tol));
    } else {
      const ComplexVector x0(parse_complex_list(cfg.x0.empty() ? "1,0,0" : cfg.x0));
      report = to_json(demo_cascade(cfg.r0, cfg.v1, cfg.v2, cfg.v3, x0, window, tol));
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
  emit(cfg, out, report.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduce X' = AX + F(t,X) to scalar n-th order equations, compute fractional "
               "matrix powers and run the worked examples."};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the result to this path instead of stdout");
  };
  auto add_window = [&cfg](CLI::App* sub, double default_t1) {
    cfg.t1 = default_t1;
    sub->add_option("--t0", cfg.t0, "Start time")->capture_default_str();
    sub->add_option("--t1", cfg.t1, "End time")->capture_default_str();
    sub->add_option("--step", cfg.step, "RK4 step size")->capture_default_str();
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced n-th order equation of a matrix");
  reduce_cmd->add_option("matrix", cfg.matrix_path, "Matrix JSON file ('-' for stdin)")->required();
  reduce_cmd->add_option("--output", cfg.output_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_output(reduce_cmd);

  auto* frac_cmd = app.add_subcommand("fracpow", "Fractional power A^alpha");
  frac_cmd->add_option("matrix", cfg.matrix_path, "Matrix JSON file ('-' for stdin)")->required();
  frac_cmd->add_option("--alpha", cfg.alpha, "Exponent in (0,1]")->required();
  frac_cmd->add_option("--method", cfg.method, "eig, integral, explicit2x2 or companion3")
      ->capture_default_str();
  frac_cmd->add_option("--output", cfg.output_format, "json")->check(CLI::IsMember({"json"}));
  add_output(frac_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Integrate X' = AX + e_n f(t, x_1) with RK4");
  sim_cmd->add_option("matrix", cfg.matrix_path, "Matrix JSON file ('-' for stdin)")->required();
  sim_cmd->add_option("--forcing", cfg.forcing, "zero, sin_x, neg_cube, sin_t or t_x")
      ->capture_default_str();
  sim_cmd->add_option("--x0", cfg.x0, "Initial state, comma separated complex literals")->required();
  sim_cmd->add_flag("--compare-reduced", cfg.compare_reduced,
                    "Also integrate the scalar reduction and report the deviation");
  sim_cmd->add_option("--csv", cfg.csv_path, "Trajectory CSV path ('-' for stdout)");
  add_window(sim_cmd, 5.0);
  add_output(sim_cmd);

  auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
  demo_cmd->require_subcommand(1);
  auto* osc = demo_cmd->add_subcommand("oscillator", "Fractional harmonic oscillator");
  osc->add_option("--omega", cfg.omega)->capture_default_str();
  osc->add_option("--alpha", cfg.alpha)->capture_default_str();
  osc->add_option("--forcing", cfg.forcing)->capture_default_str();
  auto* third = demo_cmd->add_subcommand("thirdorder", "Fractional third-order equation");
  third->add_option("--beta", cfg.beta)->capture_default_str();
  third->add_option("--alpha", cfg.alpha)->capture_default_str();
  third->add_option("--forcing", cfg.forcing)->capture_default_str();
  auto* cascade = demo_cmd->add_subcommand("cascade", "Brine tank cascade");
  cascade->add_option("--r0", cfg.r0)->capture_default_str();
  cascade->add_option("--v1", cfg.v1)->capture_default_str();
  cascade->add_option("--v2", cfg.v2)->capture_default_str();
  cascade->add_option("--v3", cfg.v3)->capture_default_str();
  cascade->add_option("--x0", cfg.x0, "Initial salt amounts (default 1,0,0)");
  for (auto* sub : {osc, third}) {
    sub->add_option("--t0", cfg.t0)->capture_default_str();
    sub->add_option("--t1", cfg.t1)->capture_default_str();
    sub->add_option("--step", cfg.step)->capture_default_str();
    add_output(sub);
  }
  cascade->add_option("--t0", cfg.t0)->capture_default_str();
  cascade->add_option("--t1", cfg.t1, "End time (default 50)");
  cascade->add_option("--step", cfg.step)->capture_default_str();
  add_output(cascade);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(cfg, out);
    if (*frac_cmd) {
      try {
        return cmd_fracpow(cfg, out);
      } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMethodShape;
      }
    }
    if (*sim_cmd) return cmd_simulate(cfg, out, err);
    if (*osc) return cmd_demo("oscillator", cfg, out);
    if (*third) return cmd_demo("thirdorder", cfg, out);
    if (*cascade) {
      if (cascade->count("--t1") == 0) cfg.t1 = 50.0;
      return cmd_demo("cascade", cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnknownForcing;
  } catch (const BlowUpError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace chz
