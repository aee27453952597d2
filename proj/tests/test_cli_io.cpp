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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "colltomo/collective.hpp"
#include "colltomo/commands.hpp"
#include "colltomo/dicke.hpp"
#include "colltomo/io.hpp"
#include "colltomo/phase_space.hpp"
#include "colltomo/random_states.hpp"
#include "colltomo/special_fn.hpp"
#include "colltomo/verify.hpp"

using namespace colltomo;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir =
      std::filesystem::temp_directory_path() / ("colltomo_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path schema_dir() {
  return std::filesystem::path(COLLTOMO_SOURCE_DIR) / "schemas";
}

// Validates an output file against the checked-in schema of the same stem.
void check_schema(const std::filesystem::path& output,
                  const std::string& schema_name) {
  std::ifstream schema_in(schema_dir() / (schema_name + ".schema.json"));
  REQUIRE(schema_in.good());
  nlohmann::json schema;
  schema_in >> schema;
  if (schema["kind"] == "json") {
    std::ifstream in(output);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    for (const auto& key : schema["required"]) {
      CAPTURE(key.get<std::string>());
      CHECK(j.contains(key.get<std::string>()));
    }
    if (schema.contains("check_required")) {
      for (const auto& check : j["checks"]) {
        for (const auto& key : schema["check_required"]) {
          CHECK(check.contains(key.get<std::string>()));
        }
      }
    }
  } else {
    std::ifstream in(output);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    std::string expected;
    for (const auto& col : schema["columns"]) {
      if (!expected.empty()) {
        expected += ',';
      }
      expected += col.get<std::string>();
    }
    CHECK(header == expected);
  }
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) {
        return static_cast<int>(i);
      }
    }
    REQUIRE(false);
    return -1;
  }
};

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  CsvTable table;
  std::string line;
  std::getline(in, line);
  std::stringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) {
    table.columns.push_back(field);
  }
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
      row.push_back(std::strtod(field.c_str(), nullptr));
    }
    REQUIRE(row.size() == table.columns.size());
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("doubles format round-trippably") {
  const double values[] = {1.0 / 3.0, 0.1, -2.5e-17, M_PI, 1e300,
                           -0.0,      7.0, 6.02e23};
  for (const double v : values) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("matrix files round trip exactly") {
  const auto dir = fresh_dir("matrix");
  StateSampler sampler(61);
  const Matrix m = sampler.density_matrix(4);
  const auto path = dir / "m.json";
  save_matrix_json(m, path);
  check_schema(path, "matrix_file");
  const Matrix back = load_matrix_json(path);
  REQUIRE(back.rows() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(back(r, c) == m(r, c));
    }
  }
}

TEST_CASE("matrix file errors") {
  const auto dir = fresh_dir("matrix_err");
  {
    std::ofstream out(dir / "bad.json");
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_matrix_json(dir / "bad.json"), Error);
  {
    std::ofstream out(dir / "short.json");
    out << R"({"dim": 2, "layout": "row-major", "entries": [[1, 0]]})";
  }
  CHECK_THROWS_AS(load_matrix_json(dir / "short.json"), Error);
  CHECK_THROWS_AS(load_matrix_json(dir / "absent.json"), Error);
}

TEST_CASE("verify passes at the default configuration") {
  RunConfig config;
  config.out_dir = fresh_dir("verify_ok");
  CHECK(cmd_verify(config, "all") == kExitOk);
  const auto report = read_json(config.out_dir / "verify_report.json");
  CHECK(report["all_pass"] == true);
  CHECK(report["N"] == 2);
  CHECK(report["checks"].size() > 20);
  CHECK(report["omega_rank_report"]["rank"] == 1);
  check_schema(config.out_dir / "verify_report.json", "verify_report");
}

TEST_CASE("verify reports controlled failures under tightened tolerances") {
  RunConfig config;
  config.n_qubits = 3;
  config.tolerances["all"] = 1e-15;
  config.out_dir = fresh_dir("verify_tight");
  CHECK(cmd_verify(config, "all") == kExitCheckFailure);
  const auto report = read_json(config.out_dir / "verify_report.json");
  CHECK(report["all_pass"] == false);
  bool some_pass = false, some_fail = false;
  for (const auto& check : report["checks"]) {
    (check["pass"] == true ? some_pass : some_fail) = true;
  }
  CHECK(some_pass);
  CHECK(some_fail);
}

TEST_CASE("verify dicke profile at N=5 reports the rank") {
  RunConfig config;
  config.n_qubits = 5;
  config.out_dir = fresh_dir("verify_dicke5");
  CHECK(cmd_verify(config, "dicke") == kExitOk);
  const auto report = read_json(config.out_dir / "verify_report.json");
  CHECK(report["omega_rank_report"]["N"] == 5);
  CHECK(report["omega_rank_report"]["rank"] == 20);
  CHECK(report["omega_rank_report"]["independent_count"] == 35);
}

TEST_CASE("verify rejects unknown names") {
  RunConfig config;
  config.out_dir = fresh_dir("verify_bad");
  CHECK_THROWS_AS(cmd_verify(config, "nonsense"), DomainError);
  config.tolerances["no_such_check"] = 1.0;
  CHECK_THROWS_AS(cmd_verify(config, "all"), DomainError);
}

TEST_CASE("reconstruct command on the singlet") {
  RunConfig config;
  config.out_dir = fresh_dir("rec_singlet");
  Vector singlet = Vector::Zero(4);
  singlet[1] = 1.0 / std::sqrt(2.0);
  singlet[2] = -1.0 / std::sqrt(2.0);
  const Matrix rho = singlet * singlet.adjoint();
  save_matrix_json(rho, config.out_dir / "input.json");
  CHECK(cmd_reconstruct(config, config.out_dir / "input.json",
                        "collective") == kExitOk);
  const auto metrics =
      read_json(config.out_dir / "reconstruct_metrics.json");
  CHECK(std::abs(metrics["fidelity"].get<double>() - 1.0) < 1e-9);
  CHECK(std::abs(metrics["trace"].get<double>() - 1.0) < 1e-10);
  check_schema(config.out_dir / "reconstruct_metrics.json",
               "reconstruct_metrics");
  check_schema(config.out_dir / "reconstructed.json", "matrix_file");

  // the measured data table comes along; its total mass is sum_ab Q = 2^N
  check_schema(config.out_dir / "projected_q.csv", "projected_q");
  const CsvTable q_table = read_csv(config.out_dir / "projected_q.csv");
  REQUIRE(q_table.rows.size() == 10);
  double mass = 0.0;
  for (const auto& row : q_table.rows) {
    mass += row[q_table.column("value")];
  }
  CHECK(std::abs(mass - 4.0) < 1e-10);
}

TEST_CASE("reconstruct command at the fidelity minimum") {
  RunConfig config;
  config.out_dir = fresh_dir("rec_min");
  ParamState2Q p;
  p.theta = M_PI / 4.0;
  p.beta = 1.3;
  p.alpha1 = 0.4;
  p.alpha2 = 0.8;
  p.gamma1 = 2.7;
  p.gamma2 = 5.1;
  const Vector psi = state_2q(p);
  save_matrix_json(psi * psi.adjoint(), config.out_dir / "input.json");
  CHECK(cmd_reconstruct(config, config.out_dir / "input.json",
                        "collective") == kExitOk);
  const auto metrics =
      read_json(config.out_dir / "reconstruct_metrics.json");
  CHECK(std::abs(metrics["fidelity"].get<double>() - 0.5) < 1e-9);
}

TEST_CASE("reconstruct command in dicke mode") {
  RunConfig config;
  config.n_qubits = 3;
  config.out_dir = fresh_dir("rec_dicke");
  StateSampler sampler(67);
  const Matrix rho = sampler.density_matrix(4);
  save_matrix_json(rho, config.out_dir / "input.json");
  CHECK(cmd_reconstruct(config, config.out_dir / "input.json", "dicke") ==
        kExitOk);
  const auto metrics =
      read_json(config.out_dir / "reconstruct_metrics.json");
  CHECK(std::abs(metrics["fidelity"].get<double>() - 1.0) < 1e-9);

  // wrong dimension and invalid states are rejected
  save_matrix_json(Matrix::Identity(2, 2), config.out_dir / "wrong.json");
  CHECK_THROWS_AS(
      cmd_reconstruct(config, config.out_dir / "wrong.json", "dicke"),
      DimensionError);
  save_matrix_json(Matrix::Identity(4, 4), config.out_dir / "invalid.json");
  CHECK_THROWS_AS(
      cmd_reconstruct(config, config.out_dir / "invalid.json", "dicke"),
      ValidationError);
}

TEST_CASE("two-qubit fidelity sweep output") {
  RunConfig config;
  config.out_dir = fresh_dir("sweep2q");
  CHECK(cmd_fidelity_sweep(config, "2q", 50, 16) == kExitOk);
  const auto path = config.out_dir / "fidelity_sweep_2q.csv";
  check_schema(path, "fidelity_sweep_2q");
  const CsvTable table = read_csv(path);
  REQUIRE(table.rows.size() == 50);
  const int diff = table.column("abs_diff");
  const int numeric = table.column("fidelity_numeric");
  double max_diff = 0.0;
  for (const auto& row : table.rows) {
    max_diff = std::max(max_diff, row[diff]);
  }
  CHECK(max_diff <= 1e-10);
  // theta = 0 is a symmetric state: exact reconstruction
  CHECK(std::abs(table.rows.front()[numeric] - 1.0) < 1e-10);

  CHECK_THROWS_AS(cmd_fidelity_sweep(config, "2q", 1, 16), DomainError);
  CHECK_THROWS_AS(cmd_fidelity_sweep(config, "4q", 10, 16), DomainError);
}

TEST_CASE("three-qubit fidelity sweep output") {
  RunConfig config;
  config.out_dir = fresh_dir("sweep3q");
  CHECK(cmd_fidelity_sweep(config, "3q", 3, 16) == kExitOk);
  const auto path = config.out_dir / "fidelity_sweep_3q.csv";
  check_schema(path, "fidelity_sweep_3q");
  const CsvTable table = read_csv(path);
  REQUIRE(table.rows.size() == 9);
  const int formula = table.column("fidelity_formula");
  const int diff = table.column("abs_diff");
  for (const auto& row : table.rows) {
    CHECK(row[diff] <= 1e-3);
  }
  // (theta=0, alpha=pi/4): the worst case of the law, value 3/4
  CHECK(std::abs(table.rows[1][formula] - 0.75) < 1e-12);
  // (theta=0, alpha=pi/2): a single spin-1/2 component, value 1
  CHECK(std::abs(table.rows[2][formula] - 1.0) < 1e-12);
}

TEST_CASE("dicke command") {
  RunConfig config;
  config.n_qubits = 3;
  config.out_dir = fresh_dir("dicke_cmd");
  CHECK(cmd_dicke(config, std::nullopt) == kExitOk);
  check_schema(config.out_dir / "dicke_probabilities.csv",
               "dicke_probabilities");
  check_schema(config.out_dir / "dicke_reconstructed.json", "matrix_file");
  check_schema(config.out_dir / "dicke_rank.json", "dicke_rank");
  const auto rank = read_json(config.out_dir / "dicke_rank.json");
  CHECK(rank["N"] == 3);
  CHECK(rank["T"] == 20);
  CHECK(rank["rank"] == 4);
  CHECK(rank["independent_count"] == 15);

  // the reconstruction written out round-trips the sampled state
  StateSampler sampler(config.seed);
  const Matrix rho = sampler.density_matrix(4);
  const Matrix rec =
      load_matrix_json(config.out_dir / "dicke_reconstructed.json");
  CHECK(max_abs(rec - rho) < 1e-9);

  // the probability table can be emitted as JSON instead
  config.format = "json";
  CHECK(cmd_dicke(config, std::nullopt) == kExitOk);
  check_schema(config.out_dir / "dicke_probabilities.json",
               "dicke_probabilities_json");
  const auto probs = read_json(config.out_dir / "dicke_probabilities.json");
  CHECK(probs["rows"].size() == 20);
}

TEST_CASE("special function dumps") {
  RunConfig config;
  config.out_dir = fresh_dir("special");
  CHECK(cmd_special_fn(config, "g") == kExitOk);
  CHECK(cmd_special_fn(config, "f") == kExitOk);
  CHECK(cmd_special_fn(config, "psi") == kExitOk);
  check_schema(config.out_dir / "special_fn_g.csv", "special_fn_g");
  check_schema(config.out_dir / "special_fn_f.csv", "special_fn_f");
  check_schema(config.out_dir / "special_fn_psi.csv", "special_fn_psi");

  const CsvTable g = read_csv(config.out_dir / "special_fn_g.csv");
  REQUIRE(g.rows.size() == 100);  // 10 triples squared at N=2
  for (const auto& row : g.rows) {
    const HammingTriple sub{int(row[0]), int(row[1]), int(row[2])};
    const HammingTriple arg{int(row[3]), int(row[4]), int(row[5])};
    CHECK(row[6] == static_cast<double>(g_bruteforce(2, sub, arg)));
  }

  const CsvTable psi = read_csv(config.out_dir / "special_fn_psi.csv");
  for (const auto& row : psi.rows) {
    const HammingTriple arg{int(row[1]), int(row[2]), int(row[3])};
    const Complex expected =
        psi_bruteforce(2, int(row[0]), arg, config.xi);
    CHECK(std::abs(Complex(row[4], row[5]) - expected) < 1e-15);
  }

  CHECK_THROWS_AS(cmd_special_fn(config, "h"), DomainError);
}

TEST_CASE("outputs are byte-identical across reruns") {
  RunConfig a, b;
  a.out_dir = fresh_dir("det_a");
  b.out_dir = fresh_dir("det_b");
  CHECK(cmd_verify(a, "all") == kExitOk);
  CHECK(cmd_verify(b, "all") == kExitOk);
  CHECK(read_file(a.out_dir / "verify_report.json") ==
        read_file(b.out_dir / "verify_report.json"));

  CHECK(cmd_fidelity_sweep(a, "2q", 25, 16) == kExitOk);
  CHECK(cmd_fidelity_sweep(b, "2q", 25, 16) == kExitOk);
  CHECK(read_file(a.out_dir / "fidelity_sweep_2q.csv") ==
        read_file(b.out_dir / "fidelity_sweep_2q.csv"));

  a.n_qubits = b.n_qubits = 2;
  CHECK(cmd_dicke(a, std::nullopt) == kExitOk);
  CHECK(cmd_dicke(b, std::nullopt) == kExitOk);
  CHECK(read_file(a.out_dir / "dicke_probabilities.csv") ==
        read_file(b.out_dir / "dicke_probabilities.csv"));
  CHECK(read_file(a.out_dir / "dicke_reconstructed.json") ==
        read_file(b.out_dir / "dicke_reconstructed.json"));

  // a different seed must change the sampled artifacts
  b.seed = 999;
  CHECK(cmd_dicke(b, std::nullopt) == kExitOk);
  CHECK(read_file(a.out_dir / "dicke_probabilities.csv") !=
        read_file(b.out_dir / "dicke_probabilities.csv"));
}
