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

#include "colltomo/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "colltomo/collective.hpp"
#include "colltomo/dicke.hpp"
#include "colltomo/io.hpp"
#include "colltomo/phase_space.hpp"
#include "colltomo/random_states.hpp"
#include "colltomo/special_fn.hpp"
#include "colltomo/verify.hpp"

namespace colltomo {

RunConfig::RunConfig() : xi(default_xi()) {}

namespace {

void ensure_out_dir(const RunConfig& config) {
  std::filesystem::create_directories(config.out_dir);
}

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open " + path.string());
  }
  out << j.dump(2) << "\n";
}

/// Uhlmann fidelity between two density matrices; for a pure sigma this is
/// <psi|rho|psi>. Eigenvalues below the noise floor are zeroed so their
/// square roots do not pollute the trace.
double state_fidelity(const Matrix& rho, const Matrix& sigma) {
  const auto clamp = [](const Eigen::VectorXd& values) {
    const double floor = 1e-13 * std::max(1.0, values.cwiseAbs().maxCoeff());
    Eigen::VectorXd out = values;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      if (out[i] < floor) {
        out[i] = 0.0;
      }
    }
    return out;
  };
  Eigen::SelfAdjointEigenSolver<Matrix> rho_eig(rho);
  const Eigen::VectorXd rho_vals = clamp(rho_eig.eigenvalues());
  const Matrix sqrt_rho = rho_eig.eigenvectors() *
                          rho_vals.cwiseSqrt().asDiagonal() *
                          rho_eig.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> mid(sqrt_rho * sigma * sqrt_rho);
  const double root_sum = clamp(mid.eigenvalues()).cwiseSqrt().sum();
  return root_sum * root_sum;
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

int cmd_verify(const RunConfig& config, const std::string& profile) {
  ensure_out_dir(config);
  VerifyOptions options;
  options.n_qubits = config.n_qubits;
  options.xi = config.xi;
  options.seed = config.seed;
  options.profile = profile;
  options.tolerance_overrides = config.tolerances;
  const std::vector<CheckResult> results = run_verify(options);

  bool all_pass = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    checks.push_back({{"check_name", r.name},
                      {"N", r.n_qubits},
                      {"max_error", r.max_error},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
              << " (N=" << r.n_qubits << ", max_error=" << r.max_error
              << ", tolerance=" << r.tolerance << ")\n";
  }
  nlohmann::json report = {{"N", config.n_qubits},
                           {"profile", profile},
                           {"seed", config.seed},
                           {"checks", checks},
                           {"all_pass", all_pass}};
  if ((profile == "dicke" || profile == "all") &&
      std::abs(config.xi - default_xi()) < 1e-12) {
    const OmegaRankReport rank = omega_rank_report(config.n_qubits, config.xi);
    report["omega_rank_report"] = {{"N", rank.n_qubits},
                                   {"T", rank.table_size},
                                   {"rank", rank.rank},
                                   {"independent_count",
                                    rank.independent_count}};
  }
  write_json(report, config.out_dir / "verify_report.json");
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_reconstruct(const RunConfig& config,
                    const std::filesystem::path& input,
                    const std::string& mode) {
  ensure_out_dir(config);
  const Matrix rho = load_matrix_json(input);
  const int n = config.n_qubits;
  Matrix rec;
  if (mode == "collective") {
    if (rho.rows() != (1 << n)) {
      throw DimensionError("cmd_reconstruct: expected a 2^N-dim matrix");
    }
    validate_density(rho);
    rec = reconstruct_collective(collective_expectations(rho));
    // the measured data itself: the Q function binned by weight triple
    const FiducialState fid(n, config.xi);
    const ProjectedQTable table = project_q(q_symbol(rho, fid));
    CsvWriter csv(config.out_dir / "projected_q.csv",
                  {"m", "n", "k", "value"});
    for (const HammingTriple& t : enumerate_triples(n)) {
      csv.write_row({CsvWriter::field(t.m), CsvWriter::field(t.n),
                     CsvWriter::field(t.k),
                     CsvWriter::field(table.values.at(t))});
    }
  } else if (mode == "dicke") {
    if (rho.rows() != n + 1) {
      throw DimensionError("cmd_reconstruct: expected an (N+1)-dim matrix");
    }
    validate_density(rho);
    const PovmElementTable povm = build_povm(n, config.xi);
    rec = reconstruct_symmetric(measure_probabilities(rho, povm), n,
                                config.xi);
  } else {
    throw DomainError("cmd_reconstruct: mode must be collective or dicke");
  }
  save_matrix_json(rec, config.out_dir / "reconstructed.json");
  const double fid_value = state_fidelity(rho, rec);
  nlohmann::json metrics = {{"mode", mode},
                            {"N", n},
                            {"fidelity", fid_value},
                            {"trace", rec.trace().real()},
                            {"min_eigenvalue", min_eigenvalue(rec)}};
  write_json(metrics, config.out_dir / "reconstruct_metrics.json");
  std::cout << "fidelity " << format_double(fid_value) << "\n";
  return kExitOk;
}

int cmd_fidelity_sweep(const RunConfig& config, const std::string& family,
                       int grid_points, int inner_grid) {
  ensure_out_dir(config);
  if (grid_points < 2) {
    throw DomainError("cmd_fidelity_sweep: need at least 2 grid points");
  }
  StateSampler sampler(config.seed);
  if (family == "2q") {
    CsvWriter csv(config.out_dir / "fidelity_sweep_2q.csv",
                  {"theta", "beta", "alpha1", "alpha2", "gamma1", "gamma2",
                   "fidelity_numeric", "fidelity_formula", "abs_diff"});
    for (int i = 0; i < grid_points; ++i) {
      ParamState2Q p;
      p.theta = i * (M_PI / 2.0) / (grid_points - 1);
      p.beta = sampler.uniform() * 2.0 * M_PI;
      p.alpha1 = sampler.uniform() * M_PI / 2.0;
      p.alpha2 = sampler.uniform() * M_PI / 2.0;
      p.gamma1 = sampler.uniform() * 2.0 * M_PI;
      p.gamma2 = sampler.uniform() * 2.0 * M_PI;
      const Vector psi = state_2q(p);
      const Matrix rec = reconstruct_collective(
          collective_expectations(psi * psi.adjoint()));
      const double numeric = fidelity(rec, psi);
      const double formula = fidelity_2q_formula(p.theta);
      csv.write_row({CsvWriter::field(p.theta), CsvWriter::field(p.beta),
                     CsvWriter::field(p.alpha1), CsvWriter::field(p.alpha2),
                     CsvWriter::field(p.gamma1), CsvWriter::field(p.gamma2),
                     CsvWriter::field(numeric), CsvWriter::field(formula),
                     CsvWriter::field(std::abs(numeric - formula))});
    }
    return kExitOk;
  }
  if (family == "3q") {
    CsvWriter csv(config.out_dir / "fidelity_sweep_3q.csv",
                  {"theta", "alpha", "fidelity_numeric", "fidelity_formula",
                   "abs_diff"});
    for (int i = 0; i < grid_points; ++i) {
      const double theta = i * (M_PI / 2.0) / (grid_points - 1);
      for (int j = 0; j < grid_points; ++j) {
        const double alpha = j * (M_PI / 2.0) / (grid_points - 1);
        const double numeric = avg_fidelity_3q(theta, alpha, inner_grid);
        const double formula = avg_fidelity_3q_formula(theta, alpha);
        csv.write_row({CsvWriter::field(theta), CsvWriter::field(alpha),
                       CsvWriter::field(numeric), CsvWriter::field(formula),
                       CsvWriter::field(std::abs(numeric - formula))});
      }
    }
    return kExitOk;
  }
  throw DomainError("cmd_fidelity_sweep: family must be 2q or 3q");
}

int cmd_dicke(const RunConfig& config,
              const std::optional<std::filesystem::path>& input) {
  ensure_out_dir(config);
  const int n = config.n_qubits;
  Matrix rho;
  if (input) {
    rho = load_matrix_json(*input);
    if (rho.rows() != n + 1) {
      throw DimensionError("cmd_dicke: expected an (N+1)-dim matrix");
    }
    validate_density(rho);
  } else {
    StateSampler sampler(config.seed);
    rho = sampler.density_matrix(n + 1);
  }
  const PovmElementTable povm = build_povm(n, config.xi);
  const auto probs = measure_probabilities(rho, povm);
  if (config.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const HammingTriple& t : enumerate_triples(n)) {
      rows.push_back({{"m", t.m},
                      {"n", t.n},
                      {"k", t.k},
                      {"probability", probs.at(t)}});
    }
    write_json({{"N", n}, {"rows", rows}},
               config.out_dir / "dicke_probabilities.json");
  } else {
    CsvWriter csv(config.out_dir / "dicke_probabilities.csv",
                  {"m", "n", "k", "probability"});
    for (const HammingTriple& t : enumerate_triples(n)) {
      csv.write_row({CsvWriter::field(t.m), CsvWriter::field(t.n),
                     CsvWriter::field(t.k),
                     CsvWriter::field(probs.at(t))});
    }
  }
  const Matrix rec = reconstruct_symmetric(probs, n, config.xi);
  save_matrix_json(rec, config.out_dir / "dicke_reconstructed.json");
  const OmegaRankReport report = omega_rank_report(n, config.xi);
  nlohmann::json rank = {{"N", report.n_qubits},
                         {"T", report.table_size},
                         {"rank", report.rank},
                         {"independent_count", report.independent_count}};
  write_json(rank, config.out_dir / "dicke_rank.json");
  std::cout << "rank " << report.rank << " independent "
            << report.independent_count << "\n";
  return kExitOk;
}

int cmd_special_fn(const RunConfig& config, const std::string& table) {
  ensure_out_dir(config);
  const int n = config.n_qubits;
  const auto triples = enumerate_triples(n);
  if (table == "g") {
    const GTable& g = g_table(n);
    CsvWriter csv(config.out_dir / "special_fn_g.csv",
                  {"m", "n", "k", "mp", "np", "kp", "value"});
    for (const auto& sub : triples) {
      for (const auto& arg : triples) {
        csv.write_row({CsvWriter::field(sub.m), CsvWriter::field(sub.n),
                       CsvWriter::field(sub.k), CsvWriter::field(arg.m),
                       CsvWriter::field(arg.n), CsvWriter::field(arg.k),
                       CsvWriter::field(g.value(sub, arg))});
      }
    }
    return kExitOk;
  }
  if (table == "f") {
    const FTable& f = f_table(n);
    // f has two indices; the middle index column is fixed to 0.
    CsvWriter csv(config.out_dir / "special_fn_f.csv",
                  {"m", "n", "k", "mp", "np", "kp", "value"});
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& arg : triples) {
          csv.write_row({CsvWriter::field(m), CsvWriter::field(0),
                         CsvWriter::field(k), CsvWriter::field(arg.m),
                         CsvWriter::field(arg.n), CsvWriter::field(arg.k),
                         CsvWriter::field(f.value(m, k, arg))});
        }
      }
    }
    return kExitOk;
  }
  if (table == "psi") {
    const PsiTable& psi = psi_table(n, config.xi);
    CsvWriter csv(config.out_dir / "special_fn_psi.csv",
                  {"ell", "mp", "np", "kp", "value_re", "value_im"});
    for (int ell = 0; ell <= n; ++ell) {
      for (const auto& arg : triples) {
        const Complex v = psi.value(ell, arg);
        csv.write_row({CsvWriter::field(ell), CsvWriter::field(arg.m),
                       CsvWriter::field(arg.n), CsvWriter::field(arg.k),
                       CsvWriter::field(v.real()),
                       CsvWriter::field(v.imag())});
      }
    }
    return kExitOk;
  }
  throw DomainError("cmd_special_fn: table must be g, f or psi");
}

}  // namespace colltomo
