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

#include <filesystem>
#include <string>
#include <vector>

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

/// Formats a double with 17 significant digits, enough to round-trip.
std::string format_double(double value);

/// Complex matrix file: {"dim": d, "layout": "row-major",
/// "entries": [[re, im], ...]} with dim^2 entries.
void save_matrix_json(const Matrix& m, const std::filesystem::path& path);
Matrix load_matrix_json(const std::filesystem::path& path);

/// Minimal CSV emitter; all floats go through format_double.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& columns);
  ~CsvWriter();

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void write_row(const std::vector<std::string>& fields);

  static std::string field(double value) { return format_double(value); }
  static std::string field(std::int64_t value) { return std::to_string(value); }
  static std::string field(int value) { return std::to_string(value); }

 private:
  struct Impl;
  Impl* impl_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace colltomo
