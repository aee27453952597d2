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
#include <map>
#include <string>
#include <vector>

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

struct CheckResult {
  std::string name;
  int n_qubits = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int n_qubits = 2;
  Complex xi;
  std::uint64_t seed = 12345;
  /// "all" or one of: binary-pauli, phase-space, special-fn, collective,
  /// dicke.
  std::string profile = "all";
  /// Overrides by check name; the key "all" rebinds every check.
  std::map<std::string, double> tolerance_overrides;

  VerifyOptions();
};

/// Runs the invariant suites of every module at the configured N. Exhaustive
/// checks fall back to deterministic sampling once N makes them impractical.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// Names of all checks a profile can emit (for validating overrides).
std::vector<std::string> known_check_names();

}  // namespace colltomo
