// Copyright 2026 The fraclap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: discretize, apply, and invert the interval
// fractional Laplacian; dump symbol coefficients, kernel tables, solve
// reports, and convergence studies as CSV or JSON.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fraclap/fraclap.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumerical = 3;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  double alpha = 0.25;
  bool unchecked_alpha = false;
  std::string format = "csv";
  std::string out = "-";
  bool meta = false;
  double tol = 1e-7;
  int panels = 4096;
};

int common_panels_floor(const CommonOpts& c) {
  return std::max(c.panels, 64);
}

fraclap::AlphaParam make_alpha(const CommonOpts& c) {
  if (c.unchecked_alpha) return fraclap::AlphaParam::unchecked(c.alpha);
  return fraclap::AlphaParam(c.alpha);
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw fraclap::DomainError("--window expects lo,hi");
  }
  try {
    const double lo = std::stod(text.substr(0, comma));
    const double hi = std::stod(text.substr(comma + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw fraclap::DomainError("--window expects two reals lo,hi");
  }
}

std::vector<std::size_t> parse_sweep(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const long v = std::stol(item);
      if (v < 2) throw std::invalid_argument("too small");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw fraclap::DomainError("--sweep expects a comma list of integers >= 2");
    }
  }
  if (out.empty()) throw fraclap::DomainError("--sweep is empty");
  return out;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    if (!std::cout) throw IoFailure("failed writing to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open output file: " + path);
  f << payload;
  f.close();
  if (!f) throw IoFailure("failed writing output file: " + path);
}

void write_meta(const CommonOpts& c, const std::string& command,
                int argc, char** argv) {
  if (!c.meta || c.out == "-") return;
  ordered_json j;
  j["tool"] = "fraclap";
  j["version"] = FRACLAP_VERSION;
  j["command"] = command;
  std::string argline;
  for (int i = 0; i < argc; ++i) {
    if (i) argline += ' ';
    argline += argv[i];
  }
  j["argv"] = argline;
  const auto now = std::chrono::system_clock::now();
  j["unix_time"] = std::chrono::duration_cast<std::chrono::seconds>(
                       now.time_since_epoch())
                       .count();
  write_output(c.out + ".meta.json", j.dump(2) + "\n");
}

// Flat key=value config file: every key mirrors a long flag name; values
// given on the command line win.  '#' and ';' start comments.
std::vector<std::pair<std::string, std::string>> read_config(
    const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoFailure("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) entries.emplace_back(key, value);
  }
  return entries;
}

// Right-hand-side factory shared by apply/solve/convergence.
struct RhsChoice {
  std::string name = "bump";  // hat | bump | zero
  double a = 0.3;
  double b = 0.7;

  std::function<double(double)> callable() const {
    if (name == "zero") return [](double) { return 0.0; };
    if (name == "hat") {
      auto spec = fraclap::TestFunctionSpec::hat(a, b);
      return [spec](double x) { return spec(x); };
    }
    if (name == "bump") {
      auto spec = fraclap::TestFunctionSpec::smooth_bump(a, b);
      return [spec](double x) { return spec(x); };
    }
    throw fraclap::DomainError("--function must be hat, bump or zero");
  }

  std::vector<double> kinks() const {
    if (name == "zero") return {};
    if (name == "hat") return fraclap::TestFunctionSpec::hat(a, b).kinks();
    return fraclap::TestFunctionSpec::smooth_bump(a, b).kinks();
  }

  fraclap::TestFunctionSpec spec() const {
    if (name == "hat") return fraclap::TestFunctionSpec::hat(a, b);
    if (name == "bump") return fraclap::TestFunctionSpec::smooth_bump(a, b);
    if (name == "zero") return fraclap::TestFunctionSpec::hat(a, b, 0.0);
    throw fraclap::DomainError("--function must be hat, bump or zero");
  }
};

// Continuous reference for the discrete operator, dispatched on regime.
double continuous_reference(const fraclap::AlphaParam& alpha,
                            const RhsChoice& rhs, double x, double tol,
                            int panels) {
  fraclap::PvQuadratureConfig cfg;
  cfg.tol = tol;
  cfg.panels = panels;
  const auto f = rhs.callable();
  const auto kinks = rhs.kinks();
  if (alpha.value() < 0.0) {
    return fraclap::riesz_integral(alpha, f, x, cfg, kinks);
  }
  return fraclap::reference_pv(alpha, f, x, cfg, kinks);
}

std::string run_coeffs(const CommonOpts& c, std::size_t n) {
  const auto alpha = make_alpha(c);
  const auto phi = fraclap::phi_hat(alpha, n);
  std::vector<double> beta(n + 1, std::nan(""));
  if (alpha.regime() == fraclap::Regime::SubHalf) {
    beta = fraclap::beta_coeff(alpha, n).b;
  }
  std::optional<double> c1;
  if (alpha.value() > 0.0 && alpha.value() < 1.0) {
    c1 = fraclap::c1_constant(alpha);
  }
  std::optional<double> ca;
  if (alpha.value() > -1.0 && alpha.value() < 1.0 && alpha.value() != 0.0) {
    ca = fraclap::c_alpha(alpha.value());
  }

  ordered_json head;
  head["alpha"] = alpha.value();
  head["C1"] = c1 ? ordered_json(*c1) : ordered_json(nullptr);
  head["C_alpha"] = ca ? ordered_json(*ca) : ordered_json(nullptr);

  if (c.format == "json") {
    ordered_json j = head;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i <= n; ++i) {
      rows.push_back(
          {{"n", i}, {"phi_hat", phi.c[i]}, {"beta", beta[i]}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "# " << head.dump() << "\n";
  out << "n,phi_hat,beta\n";
  for (std::size_t i = 0; i <= n; ++i) {
    out << i << ',' << fraclap::format_double(phi.c[i]) << ','
        << fraclap::format_double(beta[i]) << '\n';
  }
  return out.str();
}

std::string run_apply(const CommonOpts& c, std::size_t n, double x,
                      const RhsChoice& rhs) {
  const auto alpha = make_alpha(c);
  const auto f = rhs.callable();
  const auto grid = fraclap::GridFunction::sample(f, n);
  const double discrete = fraclap::apply_discrete(alpha, grid, x);
  const double reference =
      continuous_reference(alpha, rhs, x, c.tol, c.panels);
  const double abs_err = std::abs(discrete - reference);

  if (c.format == "json") {
    ordered_json j;
    j["alpha"] = alpha.value();
    j["n"] = n;
    j["x"] = x;
    j["discrete"] = discrete;
    j["reference"] = reference;
    j["abs_err"] = abs_err;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "x,n,discrete,reference,abs_err\n";
  out << fraclap::format_double(x) << ',' << n << ','
      << fraclap::format_double(discrete) << ','
      << fraclap::format_double(reference) << ','
      << fraclap::format_double(abs_err) << '\n';
  return out.str();
}

std::string run_invtable(const CommonOpts& c, std::size_t n, double x,
                         double y) {
  const auto alpha = make_alpha(c);
  const auto probe = fraclap::scaled_inverse_probe(alpha, n, x, y);
  if (c.format == "json") {
    ordered_json j;
    j["alpha"] = alpha.value();
    j["n"] = n;
    j["x"] = x;
    j["y"] = y;
    j["x_snap"] = probe.x_snap;
    j["y_snap"] = probe.y_snap;
    j["raw"] = probe.raw;
    j["scaled_green"] = probe.scaled_green;
    j["riesz_split"] = probe.riesz_split;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "x,y,x_snap,y_snap,raw,scaled_green,riesz_split\n";
  out << fraclap::format_double(x) << ',' << fraclap::format_double(y) << ','
      << fraclap::format_double(probe.x_snap) << ','
      << fraclap::format_double(probe.y_snap) << ','
      << fraclap::format_double(probe.raw) << ','
      << fraclap::format_double(probe.scaled_green) << ','
      << fraclap::format_double(probe.riesz_split) << '\n';
  return out.str();
}

std::string run_green(const CommonOpts& c, std::size_t n,
                      std::pair<double, double> window) {
  const auto alpha = make_alpha(c);
  if (n < 1) throw fraclap::DomainError("green: need --n >= 1");
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = 0.5 * (window.first + window.second);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = window.first + (window.second - window.first) *
                                 static_cast<double>(i) /
                                 static_cast<double>(n - 1);
    }
  }
  const fraclap::KernelEvaluator ev(alpha, c.tol, common_panels_floor(c));
  const auto table = fraclap::tabulate(ev, xs, xs);
  return c.format == "json" ? fraclap::to_json(table)
                            : fraclap::to_csv(table);
}

std::string run_solve(const CommonOpts& c, std::size_t n, const RhsChoice& rhs,
                      std::pair<double, double> window) {
  const auto alpha = make_alpha(c);
  fraclap::SolverOptions opt;
  opt.tol = c.tol;
  opt.max_panels = common_panels_floor(c);
  const auto report = fraclap::full_solve(alpha, rhs.spec(), n, window, opt);
  return c.format == "json" ? fraclap::to_json(report)
                            : fraclap::to_csv(report);
}

std::string run_convergence(const CommonOpts& c, const std::string& experiment,
                            const std::vector<std::size_t>& sweep,
                            const RhsChoice& rhs, double x, double y) {
  const auto alpha = make_alpha(c);
  std::vector<double> errors;
  errors.reserve(sweep.size());

  if (experiment == "apply") {
    const double reference =
      continuous_reference(alpha, rhs, x, c.tol, c.panels);
    const auto f = rhs.callable();
    for (std::size_t n : sweep) {
      const auto grid = fraclap::GridFunction::sample(f, n);
      errors.push_back(
          std::abs(fraclap::apply_discrete(alpha, grid, x) - reference));
    }
  } else if (experiment == "invgreen") {
    const fraclap::KernelEvaluator ev(alpha, c.tol, common_panels_floor(c));
    for (std::size_t n : sweep) {
      const auto probe = fraclap::scaled_inverse_probe(alpha, n, x, y);
      const double g = fraclap::green_G(ev, probe.x_snap, probe.y_snap);
      errors.push_back(std::abs(probe.scaled_green - g));
    }
  } else if (experiment == "solver") {
    fraclap::SolverOptions opt;
    opt.tol = c.tol;
    opt.max_panels = common_panels_floor(c);
    for (std::size_t n : sweep) {
      const auto report =
          fraclap::full_solve(alpha, rhs.spec(), n, {0.2, 0.8}, opt);
      const double mx = report.interior_max();
      const double sup = std::max({report.pairwise_sup_dg,
                                   report.pairwise_sup_dr,
                                   report.pairwise_sup_gr});
      errors.push_back(mx > 0.0 ? sup / mx : 0.0);
    }
  } else {
    throw fraclap::DomainError(
        "--experiment must be apply, invgreen or solver");
  }

  // Least-squares slope of log(error) against log(n); meaningless for a
  // single row or exact zeros.
  std::optional<double> slope;
  if (sweep.size() >= 2 &&
      std::all_of(errors.begin(), errors.end(),
                  [](double e) { return e > 0.0; })) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(sweep.size());
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      const double lx = std::log(static_cast<double>(sweep[i]));
      const double ly = std::log(errors[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }

  if (c.format == "json") {
    ordered_json j;
    j["experiment"] = experiment;
    j["alpha"] = alpha.value();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      rows.push_back({{"n", sweep[i]}, {"error", errors[i]}});
    }
    j["rows"] = std::move(rows);
    j["slope"] = slope ? ordered_json(*slope) : ordered_json(nullptr);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,error\n";
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    out << sweep[i] << ',' << fraclap::format_double(errors[i]) << '\n';
  }
  out << "# slope," << (slope ? fraclap::format_double(*slope) : "nan")
      << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("FRACLAP_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0') {
      fraclap::set_max_threads(static_cast<unsigned>(v));
    }
  }

  CLI::App app{"fraclap: fractional Laplacian on ]0,1[ via Toeplitz matrices"};
  app.require_subcommand(1);

  CommonOpts common;
  std::size_t n = 1024;
  double x = 0.5, y = 0.6;
  std::string window_text = "0.2,0.8";
  std::string sweep_text = "512,1024,2048,4096";
  RhsChoice rhs;
  std::string experiment = "apply";
  std::string config_path;

  // Config precedence: explicit flags > config file > built-in defaults.
  // The file is applied to the bound variables before parsing, so any flag
  // simply overwrites it.
  const auto apply_config = [&](const std::string& path) {
    for (const auto& [key, value] : read_config(path)) {
      try {
        if (key == "alpha") common.alpha = std::stod(value);
        else if (key == "n") n = static_cast<std::size_t>(std::stoul(value));
        else if (key == "x") x = std::stod(value);
        else if (key == "y") y = std::stod(value);
        else if (key == "a") rhs.a = std::stod(value);
        else if (key == "b") rhs.b = std::stod(value);
        else if (key == "tol") common.tol = std::stod(value);
        else if (key == "panels") common.panels = std::stoi(value);
        else if (key == "format") common.format = value;
        else if (key == "out") common.out = value;
        else if (key == "window") window_text = value;
        else if (key == "sweep") sweep_text = value;
        else if (key == "experiment") experiment = value;
        else if (key == "function") rhs.name = value;
        else if (key == "meta") common.meta = (value == "true" || value == "1");
        else if (key == "unchecked-alpha")
          common.unchecked_alpha = (value == "true" || value == "1");
        else
          throw fraclap::DomainError("unknown config key: " + key);
      } catch (const std::invalid_argument&) {
        throw fraclap::DomainError("bad config value for " + key + ": " +
                                   value);
      }
    }
  };

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", common.alpha, "Fractional order");
    sub->add_flag("--unchecked-alpha", common.unchecked_alpha,
                  "Skip alpha domain validation (integer-order cross-checks)");
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "Output path ('-' for stdout)");
    sub->add_flag("--meta", common.meta,
                  "Also write <out>.meta.json with run metadata");
    sub->add_option("--tol", common.tol, "Quadrature tolerance");
    sub->add_option("--panels", common.panels,
                    "Adaptive panel budget per integral");
    sub->add_option("--config", config_path,
                    "Flat key=value config file (flags win)");
  };

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Symbol and binomial coefficients plus constants");
  add_common(coeffs);
  coeffs->add_option("--n", n, "Highest coefficient index");

  CLI::App* apply = app.add_subcommand(
      "apply", "Discrete operator row-sum vs continuous reference");
  add_common(apply);
  apply->add_option("--n", n, "Grid order");
  apply->add_option("--x", x, "Evaluation point in (0,1)");
  apply->add_option("--function", rhs.name, "hat, bump or zero");
  apply->add_option("--a", rhs.a, "Support lower end");
  apply->add_option("--b", rhs.b, "Support upper end");

  CLI::App* invtable = app.add_subcommand(
      "invtable", "Scaled Toeplitz-inverse probe at ([nx],[ny])");
  add_common(invtable);
  invtable->add_option("--n", n, "Matrix order");
  invtable->add_option("--x", x, "First coordinate in (0,1)");
  invtable->add_option("--y", y, "Second coordinate in (0,1)");

  CLI::App* green = app.add_subcommand(
      "green", "Kernel table G/K/H over a square grid");
  add_common(green);
  green->add_option("--n", n, "Points per side");
  green->add_option("--window", window_text, "Grid range lo,hi");

  CLI::App* solve = app.add_subcommand(
      "solve", "Three-route solve with cross-validation report");
  add_common(solve);
  solve->add_option("--n", n, "Discrete grid order");
  solve->add_option("--function", rhs.name, "hat or bump");
  solve->add_option("--a", rhs.a, "Support lower end");
  solve->add_option("--b", rhs.b, "Support upper end");
  solve->add_option("--window", window_text, "Comparison window lo,hi");

  CLI::App* convergence = app.add_subcommand(
      "convergence", "Error sweep over n with log-log slope");
  add_common(convergence);
  convergence->add_option("--experiment", experiment,
                          "apply, invgreen or solver");
  convergence->add_option("--sweep", sweep_text, "Comma list of grid orders");
  convergence->add_option("--x", x, "Evaluation point");
  convergence->add_option("--y", y, "Second point (invgreen)");
  convergence->add_option("--function", rhs.name, "hat, bump or zero");
  convergence->add_option("--a", rhs.a, "Support lower end");
  convergence->add_option("--b", rhs.b, "Support upper end");

  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        apply_config(argv[i + 1]);
        break;
      }
      if (arg.rfind("--config=", 0) == 0) {
        apply_config(arg.substr(9));
        break;
      }
    }
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fraclap::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    std::string payload;
    std::string command;
    if (coeffs->parsed()) {
      command = "coeffs";
      payload = run_coeffs(common, n);
    } else if (apply->parsed()) {
      command = "apply";
      payload = run_apply(common, n, x, rhs);
    } else if (invtable->parsed()) {
      command = "invtable";
      payload = run_invtable(common, n, x, y);
    } else if (green->parsed()) {
      command = "green";
      payload = run_green(common, n, parse_window(window_text));
    } else if (solve->parsed()) {
      command = "solve";
      payload = run_solve(common, n, rhs, parse_window(window_text));
    } else if (convergence->parsed()) {
      command = "convergence";
      payload = run_convergence(common, experiment, parse_sweep(sweep_text),
                                rhs, x, y);
    }
    write_output(common.out, payload);
    write_meta(common, command, argc, argv);
  } catch (const fraclap::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fraclap::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
