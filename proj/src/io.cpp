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

#include "colltomo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace colltomo {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void save_matrix_json(const Matrix& m, const std::filesystem::path& path) {
  if (m.rows() != m.cols()) {
    throw DimensionError("save_matrix_json: matrix must be square");
  }
  nlohmann::json j;
  j["dim"] = m.rows();
  j["layout"] = "row-major";
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) {
    throw Error("save_matrix_json: cannot open " + path.string());
  }
  out << j.dump(2) << "\n";
}

Matrix load_matrix_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("load_matrix_json: cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_matrix_json: malformed JSON in " + path.string() +
                ": " + e.what());
  }
  if (!j.contains("dim") || !j.contains("entries") ||
      j.value("layout", "") != "row-major") {
    throw Error("load_matrix_json: missing dim/layout/entries in " +
                path.string());
  }
  const Eigen::Index dim = j["dim"].get<Eigen::Index>();
  const auto& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error("load_matrix_json: expected dim^2 entries in " +
                path.string());
  }
  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++idx) {
      const auto& e = entries[idx];
      if (!e.is_array() || e.size() != 2) {
        throw Error("load_matrix_json: entry is not a [re, im] pair");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out) {
    delete impl_;
    throw Error("CsvWriter: cannot open " + path.string());
  }
  write_row(columns);
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) {
      line += ',';
    }
    line += fields[i];
  }
  impl_->out << line << "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("read_file: cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace colltomo
