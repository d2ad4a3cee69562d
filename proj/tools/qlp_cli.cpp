// Copyright 2026 The qlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: runs verification suites, evaluates divergences of
// states read from files, and prints kernel values.
//
// Exit status: 0 when every check passes, 1 when a violation was found, 2 on
// a configuration, parse or input error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlp/error.hpp"
#include "qlp/io.hpp"
#include "qlp/renyi.hpp"
#include "qlp/strip.hpp"
#include "qlp/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& field, const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw qlp::Error(qlp::ErrorKind::ConfigError, field + ": '" + s + "' is not a number");
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct VerifyArgs {
  std::string suite;
  std::string dims;
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::string p_grid;
  std::vector<std::string> tol;
  std::string out;
  int threads = 0;
  std::optional<double> quad_t;
  std::optional<double> quad_step;
};

qlp::SuiteConfig build_config(const VerifyArgs& a) {
  qlp::SuiteConfig cfg = qlp::default_config(a.suite);
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  if (a.trials) cfg.trials = *a.trials;
  if (!a.dims.empty()) {
    cfg.dims.clear();
    for (const auto& d : split(a.dims, ',')) {
      const double v = parse_number("dims", d);
      if (v != std::floor(v) || std::isinf(v)) {
        throw qlp::Error(qlp::ErrorKind::ConfigError, "dims: '" + d + "' is not an integer");
      }
      cfg.dims.push_back(static_cast<std::int64_t>(v));
    }
  }
  if (!a.p_grid.empty()) {
    cfg.p_grid.clear();
    for (const auto& p : split(a.p_grid, ',')) cfg.p_grid.push_back(parse_number("p_grid", p));
  }
  for (const auto& kv : a.tol) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw qlp::Error(qlp::ErrorKind::ConfigError, "tol: expected key=value, got '" + kv + "'");
    }
    cfg.tolerance_overrides[kv.substr(0, eq)] = parse_number("tol", kv.substr(eq + 1));
  }
  if (a.quad_t) cfg.quadrature_half_width = *a.quad_t;
  if (a.quad_step) cfg.quadrature_step = *a.quad_step;
  return cfg;
}

int run_verify(const VerifyArgs& a) {
  const qlp::SuiteConfig cfg = build_config(a);
  const qlp::VerificationReport report = qlp::run_suite(cfg);
  for (const auto& c : report.checks) {
    std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "  max_violation=" << fmt(c.max_violation)
              << "  tolerance=" << fmt(c.tolerance) << "  n=" << c.count << "\n";
  }
  std::cout << report.suite << ": " << (report.pass ? "PASS" : "FAIL") << " ("
            << report.trials.size() << " trials, " << report.wall_time << " s)\n";
  if (!a.out.empty()) qlp::save_report(report, a.out);
  return report.pass ? kPass : kViolation;
}

int run_divergence(const std::string& rho_path, const std::string& sigma_path, double p) {
  const qlp::FaithfulState rho{qlp::HermitianMatrix(qlp::load_matrix(rho_path))};
  const qlp::FaithfulState sigma{qlp::HermitianMatrix(qlp::load_matrix(sigma_path))};
  std::cout << fmt(qlp::sandwiched_divergence(rho, sigma, p)) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Schatten-norm and Renyi-divergence inequalities"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(qlp::suite_names()));
  verify->add_option("--dims", va.dims, "comma-separated dimensions");
  verify->add_option("--trials", va.trials, "trials per dimension");
  verify->add_option("--seed", va.seed, "master seed");
  verify->add_option("--p-grid", va.p_grid, "comma-separated exponents, 'inf' allowed");
  verify->add_option("--tol", va.tol, "tolerance override key=value (repeatable)");
  verify->add_option("--out", va.out, "write the JSON report here");
  verify->add_option("--threads", va.threads, "worker threads (0 = all cores)");
  verify->add_option("--quad-T", va.quad_t, "quadrature half-width");
  verify->add_option("--quad-step", va.quad_step, "quadrature step");

  std::string rho_path, sigma_path;
  double p = 0.0;
  auto* div = app.add_subcommand("divergence", "sandwiched Renyi divergence of two states");
  div->add_option("--rho", rho_path, "matrix file for rho")->required();
  div->add_option("--sigma", sigma_path, "matrix file for sigma")->required();
  div->add_option("--p", p, "order p in (0,1) or (1,inf)")->required();

  double theta = 0.0, t = 0.0;
  auto* kernel = app.add_subcommand("kernel", "print beta_theta(t)");
  kernel->add_option("--theta", theta, "theta in (0,1)")->required();
  kernel->add_option("--t", t, "real t")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*div) return run_divergence(rho_path, sigma_path, p);
    if (*kernel) {
      std::cout << fmt(qlp::hirschman_kernel(theta, t)) << "\n";
      return kPass;
    }
  } catch (const qlp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
