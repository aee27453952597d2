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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  int n_qubits = 2;
  Complex xi;
  std::uint64_t seed = 12345;
  std::map<std::string, double> tolerances;
  std::filesystem::path out_dir = "out";
  /// Applies to artifacts whose format is not pinned by their interface
  /// (currently the Dicke probability table).
  std::string format = "csv";

  RunConfig();
};

/// Runs the module invariant suites and writes out/verify_report.json.
/// Returns kExitCheckFailure when any check fails.
int cmd_verify(const RunConfig& config, const std::string& profile);

/// Reconstructs a density matrix read from `input` through the collective
/// ("collective") or Dicke-subspace ("dicke") protocol. Writes the
/// reconstructed matrix and a metrics file.
int cmd_reconstruct(const RunConfig& config,
                    const std::filesystem::path& input,
                    const std::string& mode);

/// Sweeps the 2- or 3-qubit pure-state family and writes a CSV comparing the
/// pipeline fidelity with the closed-form value.
int cmd_fidelity_sweep(const RunConfig& config, const std::string& family,
                       int grid_points, int inner_grid);

/// Dicke-subspace pipeline for a random (or provided) symmetric state:
/// probability table, reconstruction, and the rank report of the
/// probability-constraint matrix.
int cmd_dicke(const RunConfig& config,
              const std::optional<std::filesystem::path>& input);

/// Dumps one of the special-function tables ("g", "f" or "psi") as CSV.
int cmd_special_fn(const RunConfig& config, const std::string& table);

}  // namespace colltomo
