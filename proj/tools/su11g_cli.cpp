/*
 * Copyright 2026 The su11g Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// su11g-cli: tabulate wave functions, dump spectra and Gram matrices, run the
// verification suites. Talks to the library only through the C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su11g/su11g.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct RunConfig {
  std::string command;
  double a = 1.0;
  double c = 1.0;
  double b = 0.0;
  int nmax = 16;
  double x_min = -5.0;
  double x_max = 5.0;
  double x_step = 0.02;
  std::string out = "-";
  std::string format = "csv";
  std::optional<double> tol;
};

struct CliError {
  int exit_code;
  std::string message;
};

using ParamsPtr = std::unique_ptr<su11g_params, decltype(&su11g_params_destroy)>;

void check(su11g_status s, int exit_code = kExitRuntime) {
  if (s != SU11G_OK) throw CliError{exit_code, std::string(su11g_status_string(s)) + ": " + su11g_last_error()};
}

ParamsPtr make_params(const RunConfig& cfg) {
  su11g_params* p = nullptr;
  check(su11g_params_create(cfg.a, cfg.c, cfg.b, &p), kExitUsage);
  return {p, &su11g_params_destroy};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> grid_of(const RunConfig& cfg) {
  if (!(cfg.x_min < cfg.x_max)) throw CliError{kExitUsage, "x-min must be smaller than x-max"};
  if (!(cfg.x_step > 0.0)) throw CliError{kExitUsage, "x-step must be positive"};
  const auto count = static_cast<long>(std::floor((cfg.x_max - cfg.x_min) / cfg.x_step + 1e-9));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(count) + 1);
  for (long k = 0; k <= count; ++k) g.push_back(cfg.x_min + static_cast<double>(k) * cfg.x_step);
  return g;
}

// The whole document is produced in memory first; one write at the end.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitRuntime, "cannot open " + path};
  f << text;
  if (!f) throw CliError{kExitRuntime, "write failed: " + path};
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

int cmd_tabulate(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  const auto grid = grid_of(cfg);
  if (cfg.nmax < 0) throw CliError{kExitUsage, "nmax must be >= 0"};
  std::vector<double> table(grid.size() * static_cast<std::size_t>(cfg.nmax + 1));
  check(su11g_tabulate(params.get(), SU11G_FAMILY_PSI, cfg.nmax, grid.data(), grid.size(), table.data()));

  std::string text;
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= cfg.nmax; ++n)
      for (std::size_t k = 0; k < grid.size(); ++k)
        rows.push_back({{"x", grid[k]}, {"n", n}, {"psi", table[n * grid.size() + k]}});
    text = nlohmann::json{{"rows", rows}}.dump() + "\n";
  } else {
    text = "x,n,psi\n";
    for (int n = 0; n <= cfg.nmax; ++n)
      for (std::size_t k = 0; k < grid.size(); ++k)
        text += fmt(grid[k]) + "," + std::to_string(n) + "," + fmt(table[n * grid.size() + k]) + "\n";
  }
  emit(cfg.out, text);
  return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  if (cfg.nmax < 1) throw CliError{kExitUsage, "spectrum needs nmax >= 1"};
  std::vector<double> ev(static_cast<std::size_t>(cfg.nmax));
  check(su11g_q_eigenvalues(params.get(), cfg.nmax, ev.data()));

  if (cfg.format == "json") {
    nlohmann::json energies = nlohmann::json::array(), q = nlohmann::json::array();
    for (int n = 0; n < cfg.nmax; ++n) energies.push_back({{"n", n}, {"energy", n + cfg.a}});
    for (int k = 0; k < cfg.nmax; ++k) q.push_back({{"k", k}, {"q_eigenvalue", ev[k]}});
    emit(cfg.out, nlohmann::json{{"energies", energies}, {"q_eigenvalues", q}}.dump() + "\n");
    return 0;
  }
  std::string energies = "n,energy\n", qtext = "k,q_eigenvalue\n";
  for (int n = 0; n < cfg.nmax; ++n) energies += std::to_string(n) + "," + fmt(n + cfg.a) + "\n";
  for (int k = 0; k < cfg.nmax; ++k) qtext += std::to_string(k) + "," + fmt(ev[k]) + "\n";
  if (cfg.out == "-") {
    emit("-", energies + "\n" + qtext);
  } else {
    emit(cfg.out, energies);
    emit(sibling_path(cfg.out, "_q"), qtext);
  }
  return 0;
}

int cmd_gram(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  if (cfg.nmax < 0) throw CliError{kExitUsage, "nmax must be >= 0"};
  const int d = cfg.nmax + 1;
  std::vector<double> g(static_cast<std::size_t>(d) * d);
  double dev = 0.0;
  check(su11g_gram(params.get(), cfg.nmax, g.data(), &dev));
  if (cfg.format == "json") {
    nlohmann::json m = nlohmann::json::array();
    for (int i = 0; i < d; ++i) m.push_back(std::vector<double>(g.begin() + i * d, g.begin() + (i + 1) * d));
    emit(cfg.out, nlohmann::json{{"matrix", m}, {"max_deviation", dev}}.dump() + "\n");
  } else {
    std::string text = "m,n,g\n";
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) text += std::to_string(i) + "," + std::to_string(j) + "," + fmt(g[i * d + j]) + "\n";
    emit(cfg.out, text);
  }
  if (cfg.tol && !(dev <= *cfg.tol)) {
    std::cerr << "gram: max |G - I| = " << fmt(dev) << " exceeds " << fmt(*cfg.tol) << "\n";
    return kExitFailed;
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  su11g_verify_options opts = su11g_verify_default_options();
  opts.nmax = cfg.nmax;
  if (cfg.tol) opts.gram_tolerance = *cfg.tol;
  su11g_report_set* raw = nullptr;
  check(su11g_verify(params.get(), &opts, &raw));
  std::unique_ptr<su11g_report_set, decltype(&su11g_report_set_destroy)> set(raw, &su11g_report_set_destroy);
  emit(cfg.out, std::string(su11g_report_set_json(set.get())) + "\n");
  const std::size_t failed = su11g_report_set_failed_count(set.get());
  for (std::size_t k = 0; k < failed; ++k) std::cerr << "FAILED " << su11g_report_set_failed_id(set.get(), k) << "\n";
  return su11g_report_set_passed(set.get()) ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(1,1)_gamma deformed oscillator: wave functions, spectra and verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--a", cfg.a, "representation parameter a > 0")->capture_default_str();
  app.add_option("--c", cfg.c, "deformation parameter c > 0")->capture_default_str();
  app.add_option("--b", cfg.b, "third parameter b >= 0")->capture_default_str();
  app.add_option("--nmax", cfg.nmax, "highest level (spectrum: number of levels)")->capture_default_str();
  app.add_option("--x-min", cfg.x_min, "grid start")->capture_default_str();
  app.add_option("--x-max", cfg.x_max, "grid end")->capture_default_str();
  app.add_option("--x-step", cfg.x_step, "grid step")->capture_default_str();
  app.add_option("--out", cfg.out, "output file, - for stdout")->capture_default_str();
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--tol", cfg.tol, "override the Gram tolerance");

  for (const char* name : {"tabulate", "verify", "spectrum", "gram"}) {
    app.add_subcommand(name)->fallthrough()->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (cfg.command == "tabulate") return cmd_tabulate(cfg);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg);
    if (cfg.command == "gram") return cmd_gram(cfg);
    return cmd_verify(cfg);
  } catch (const CliError& e) {
    std::cerr << "su11g-cli: " << e.message << "\n";
    return e.exit_code;
  }
}
