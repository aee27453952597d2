// Copyright 2026 The colltomo authors
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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colltomo/commands.hpp"
#include "colltomo/errors.hpp"
#include "colltomo/phase_space.hpp"

namespace {

colltomo::RunConfig make_config(int n, double xi_re, double xi_im,
                                bool xi_set, std::uint64_t seed,
                                const std::string& out,
                                const std::string& format,
                                const std::vector<std::string>& tolerances) {
  colltomo::RunConfig config;
  config.n_qubits = n;
  if (xi_set) {
    config.xi = colltomo::Complex(xi_re, xi_im);
  }
  config.seed = seed;
  config.out_dir = out;
  config.format = format;
  for (const std::string& spec : tolerances) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw colltomo::DomainError("tolerance must be name=value: " + spec);
    }
    config.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-qubit state tomography from collective measurements"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 2;
  double xi_re = 0.0, xi_im = 0.0;
  std::uint64_t seed = 12345;
  std::string out = "out";
  std::string format = "csv";
  std::vector<std::string> tolerances;

  app.add_option("--n", n, "number of qubits")->check(CLI::Range(1, 10));
  app.add_option("--xi-re", xi_re, "fiducial parameter, real part");
  app.add_option("--xi-im", xi_im, "fiducial parameter, imaginary part");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out, "output directory");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", tolerances,
                 "tolerance override name=value (repeatable)");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::string profile = "all";
  verify->add_option("--profile", profile, "check profile")
      ->check(CLI::IsMember({"all", "binary-pauli", "phase-space",
                             "special-fn", "collective", "dicke"}));

  auto* reconstruct =
      app.add_subcommand("reconstruct", "reconstruct a density matrix");
  std::string input;
  std::string mode = "collective";
  reconstruct->add_option("--input", input, "matrix JSON file")->required();
  reconstruct->add_option("--mode", mode, "reconstruction mode")
      ->check(CLI::IsMember({"collective", "dicke"}));

  auto* sweep =
      app.add_subcommand("fidelity-sweep", "sweep a pure-state family");
  std::string family = "2q";
  int grid_points = 50;
  int inner_grid = 16;
  sweep->add_option("--family", family, "state family")
      ->check(CLI::IsMember({"2q", "3q"}));
  sweep->add_option("--grid", grid_points, "points per swept parameter")
      ->check(CLI::Range(2, 10000));
  sweep->add_option("--inner-grid", inner_grid,
                    "3q only: points per averaged parameter")
      ->check(CLI::Range(16, 256));

  auto* dicke = app.add_subcommand("dicke", "Dicke-subspace pipeline");
  std::string dicke_input;
  dicke->add_option("--input", dicke_input,
                    "symmetric (N+1)-dim matrix JSON file");

  auto* special = app.add_subcommand("special-fn", "dump a function table");
  std::string table = "g";
  special->add_option("--table", table, "which table")
      ->check(CLI::IsMember({"g", "f", "psi"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? colltomo::kExitOk : colltomo::kExitUsage;
  }

  try {
    const bool xi_set = app.count("--xi-re") + app.count("--xi-im") > 0;
    colltomo::RunConfig config =
        make_config(n, xi_re, xi_im, xi_set, seed, out, format, tolerances);
    if (*verify) {
      return colltomo::cmd_verify(config, profile);
    }
    if (*reconstruct) {
      return colltomo::cmd_reconstruct(config, input, mode);
    }
    if (*sweep) {
      return colltomo::cmd_fidelity_sweep(config, family, grid_points,
                                          inner_grid);
    }
    if (*dicke) {
      std::optional<std::filesystem::path> path;
      if (!dicke_input.empty()) {
        path = dicke_input;
      }
      return colltomo::cmd_dicke(config, path);
    }
    if (*special) {
      return colltomo::cmd_special_fn(config, table);
    }
  } catch (const colltomo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return colltomo::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return colltomo::kExitUsage;
  }
  return colltomo::kExitUsage;
}
