// Copyright 2026 The ybx developers
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

// Command-line front end.  All math goes through the shared library's C
// interface; this file only does argument plumbing, file I/O and report
// assembly.  Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

[[noreturn]] void die(const std::string& message) { throw UsageError{message}; }

void check(ybx_status s, const char* context) {
  if (s != YBX_OK) die(std::string(context) + ": " + ybx_last_error());
}

struct CStr {
  char* s = nullptr;
  ~CStr() { ybx_string_free(s); }
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
};

struct Params {
  ybx_params* p = nullptr;
  ~Params() { ybx_params_free(p); }
  Params() = default;
  Params(const Params&) = delete;
  Params& operator=(const Params&) = delete;
};

struct Matrix {
  ybx_matrix* m = nullptr;
  ~Matrix() { ybx_matrix_free(m); }
  Matrix() = default;
  Matrix(const Matrix&) = delete;
  Matrix& operator=(const Matrix&) = delete;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) die("cannot read file: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot open file for writing: " + path);
  out << text;
  if (!out.good()) die("cannot write file: " + path);
}

// Shared input options: either a parameter file or (n, seed, backend).
struct ParamSource {
  std::string params_path;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string backend = "exact";

  void attach(CLI::App* cmd, bool with_backend = true) {
    auto* file_opt = cmd->add_option("--params", params_path,
                                     "Parameter file (JSON) to load");
    auto* n_opt =
        cmd->add_option("--n", n, "Side length for deterministic random parameters");
    cmd->add_option("--seed", seed, "Seed for deterministic random parameters");
    if (with_backend)
      cmd->add_option("--backend", backend, "Scalar backend: exact or float")
          ->check(CLI::IsMember({"exact", "float"}));
    file_opt->excludes(n_opt);
  }

  // Loads from the file when given, otherwise draws deterministically.
  ybx_params* resolve(bool unitary_fallback = false) const {
    ybx_params* p = nullptr;
    if (!params_path.empty()) {
      const std::string text = read_file(params_path);
      check(ybx_params_parse_json(text.c_str(), &p), "parsing parameter file");
      return p;
    }
    if (n < 1) die("give either --params or --n");
    if (unitary_fallback) {
      check(ybx_params_sample_unitary(n, seed, &p), "sampling unitary parameters");
      return p;
    }
    const ybx_backend b = backend == "float" ? YBX_BACKEND_FLOAT : YBX_BACKEND_EXACT;
    check(ybx_params_random(n, seed, b, &p), "drawing random parameters");
    return p;
  }
};

ybx_backend params_backend(const ybx_params* p) {
  ybx_backend b = YBX_BACKEND_EXACT;
  check(ybx_params_backend(p, &b), "reading parameter backend");
  return b;
}

std::int64_t params_n(const ybx_params* p) {
  std::int64_t n = 0;
  check(ybx_params_n(p, &n), "reading parameter side length");
  return n;
}

// The exact backend only admits tolerance 0; float keeps the given value.
// The note fires only for a tolerance the user actually asked for.
double resolve_tol(const ybx_params* p, double tol, bool tol_given) {
  if (params_backend(p) == YBX_BACKEND_EXACT) {
    if (tol_given && tol != 0.0)
      std::cerr << "note: exact backend forces tolerance 0\n";
    return 0.0;
  }
  return tol;
}

void emit_matrix(ybx_matrix* m, const std::string& out_path, const std::string& format,
                 const std::string& command, const ybx_params* p) {
  CStr text;
  if (format == "json")
    check(ybx_matrix_to_json(m, &text.s), "serializing matrix");
  else
    check(ybx_matrix_to_market(m, &text.s), "serializing matrix");
  if (out_path.empty()) {
    std::cout << text.s;
    return;
  }
  write_file(out_path, text.s);
  std::int64_t dim = 0, nnz = 0;
  check(ybx_matrix_dim(m, &dim), "reading matrix dim");
  check(ybx_matrix_nnz(m, &nnz), "reading matrix nnz");
  ordered_json rep;
  rep["command"] = command;
  if (p) {
    rep["n"] = params_n(p);
    rep["backend"] = params_backend(p) == YBX_BACKEND_EXACT ? "exact" : "float";
  }
  rep["dim"] = dim;
  rep["nnz"] = nnz;
  rep["out"] = out_path;
  rep["format"] = format;
  std::cout << rep.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse parametric solutions of the constant Yang-Baxter equation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(ybx_version()); });

  // gen-r / gen-rhat / gen-s
  ParamSource gen_r_src, gen_rhat_src;
  std::string gen_r_out, gen_r_format = "mm";
  std::string gen_rhat_out, gen_rhat_format = "mm";
  std::string gen_s_out, gen_s_format = "mm", gen_s_backend = "exact";
  std::int64_t gen_s_n = 0;

  auto* gen_r = app.add_subcommand("gen-r", "Build the parametric operator R");
  gen_r_src.attach(gen_r);
  gen_r->add_option("--out", gen_r_out, "Output file (stdout when omitted)");
  gen_r->add_option("--format", gen_r_format, "Matrix format: mm or json")
      ->check(CLI::IsMember({"mm", "json"}));

  auto* gen_rhat = app.add_subcommand("gen-rhat", "Build the companion operator R o digit-swap");
  gen_rhat_src.attach(gen_rhat);
  gen_rhat->add_option("--out", gen_rhat_out, "Output file (stdout when omitted)");
  gen_rhat->add_option("--format", gen_rhat_format, "Matrix format: mm or json")
      ->check(CLI::IsMember({"mm", "json"}));

  auto* gen_s = app.add_subcommand("gen-s", "Build the digit-swap permutation S");
  gen_s->add_option("--n", gen_s_n, "Side length")->required();
  gen_s->add_option("--backend", gen_s_backend, "Scalar backend: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  gen_s->add_option("--out", gen_s_out, "Output file (stdout when omitted)");
  gen_s->add_option("--format", gen_s_format, "Matrix format: mm or json")
      ->check(CLI::IsMember({"mm", "json"}));

  // verify-braid / verify-quantum / braid-check
  ParamSource braid_src, quantum_src, rep_src;
  double braid_tol = 1e-12, quantum_tol = 1e-12, rep_tol = 1e-12;
  std::int64_t rep_strands = 3;

  auto* verify_braid =
      app.add_subcommand("verify-braid", "Check the braid-form equation for R");
  braid_src.attach(verify_braid);
  auto* braid_tol_opt =
      verify_braid->add_option("--tol", braid_tol, "Residual tolerance (float backend)");

  auto* verify_quantum =
      app.add_subcommand("verify-quantum", "Check the quantum-form equation for R o digit-swap");
  quantum_src.attach(verify_quantum);
  auto* quantum_tol_opt =
      verify_quantum->add_option("--tol", quantum_tol, "Residual tolerance (float backend)");

  auto* braid_check =
      app.add_subcommand("braid-check", "Check the braid-group relations on several strands");
  rep_src.attach(braid_check);
  braid_check->add_option("--strands", rep_strands, "Number of strands (default 3)");
  auto* rep_tol_opt =
      braid_check->add_option("--tol", rep_tol, "Residual tolerance (float backend)");

  // check-unitary / sample-unitary
  ParamSource unitary_src;
  double unitary_tol = 1e-12;
  auto* check_unitary =
      app.add_subcommand("check-unitary", "Evaluate the closed-form unitarity residuals");
  unitary_src.attach(check_unitary);
  auto* unitary_tol_opt =
      check_unitary->add_option("--tol", unitary_tol, "Residual tolerance (float backend)");

  std::int64_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  auto* sample_unitary =
      app.add_subcommand("sample-unitary", "Draw parameters that are unitary by construction");
  sample_unitary->add_option("--n", sample_n, "Side length")->required();
  sample_unitary->add_option("--seed", sample_seed, "Seed");
  sample_unitary->add_option("--out", sample_out, "Parameter file to write (stdout when omitted)");

  // check-factor / check-entangling
  ParamSource factor_src;
  double factor_tol = 1e-12;
  auto* check_factor =
      app.add_subcommand("check-factor", "Test R and R o digit-swap for tensor-product splits");
  factor_src.attach(check_factor);
  auto* factor_tol_opt =
      check_factor->add_option("--tol", factor_tol, "Split tolerance (float backend)");

  ParamSource entangling_src;
  double entangling_tol = 1e-12;
  std::int64_t entangling_trials = 64;
  auto* check_entangling =
      app.add_subcommand("check-entangling", "Decide the entangling-gate property");
  entangling_src.attach(check_entangling, /*with_backend=*/false);
  auto* entangling_tol_opt =
      check_entangling->add_option("--tol", entangling_tol, "Analysis tolerance (float backend)");
  check_entangling->add_option("--trials", entangling_trials,
                               "Random product states tried in the witness search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Prints help/version or the parse error, as appropriate.
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  if (gen_r->parsed()) {
    Params p;
    p.p = gen_r_src.resolve();
    Matrix r;
    check(ybx_build_r(p.p, &r.m), "building R");
    emit_matrix(r.m, gen_r_out, gen_r_format, "gen-r", p.p);
    return kExitPass;
  }

  if (gen_rhat->parsed()) {
    Params p;
    p.p = gen_rhat_src.resolve();
    Matrix rhat;
    check(ybx_build_rhat(p.p, YBX_RHAT_PRODUCT, &rhat.m), "building R o digit-swap");
    emit_matrix(rhat.m, gen_rhat_out, gen_rhat_format, "gen-rhat", p.p);
    return kExitPass;
  }

  if (gen_s->parsed()) {
    Matrix s;
    const ybx_backend b = gen_s_backend == "float" ? YBX_BACKEND_FLOAT : YBX_BACKEND_EXACT;
    check(ybx_build_s(gen_s_n, b, &s.m), "building S");
    emit_matrix(s.m, gen_s_out, gen_s_format, "gen-s", nullptr);
    return kExitPass;
  }

  if (verify_braid->parsed()) {
    Params p;
    p.p = braid_src.resolve();
    Matrix r;
    check(ybx_build_r(p.p, &r.m), "building R");
    int passed = 0;
    CStr report;
    check(ybx_verify_braid(r.m, params_n(p.p),
                           resolve_tol(p.p, braid_tol, braid_tol_opt->count() > 0), 0, &passed,
                           &report.s),
          "verifying braid-form equation");
    std::cout << report.s;
    return passed ? kExitPass : kExitFail;
  }

  if (verify_quantum->parsed()) {
    Params p;
    p.p = quantum_src.resolve();
    Matrix rhat;
    check(ybx_build_rhat(p.p, YBX_RHAT_PRODUCT, &rhat.m), "building R o digit-swap");
    int passed = 0;
    CStr report;
    check(ybx_verify_quantum(rhat.m, params_n(p.p),
                             resolve_tol(p.p, quantum_tol, quantum_tol_opt->count() > 0), 0,
                             &passed, &report.s),
          "verifying quantum-form equation");
    std::cout << report.s;
    return passed ? kExitPass : kExitFail;
  }

  if (braid_check->parsed()) {
    Params p;
    p.p = rep_src.resolve();
    Matrix r;
    check(ybx_build_r(p.p, &r.m), "building R");
    int passed = 0;
    CStr report;
    check(ybx_braid_rep_check(r.m, params_n(p.p), rep_strands,
                              resolve_tol(p.p, rep_tol, rep_tol_opt->count() > 0), 0, 0, &passed,
                              &report.s),
          "checking braid-group relations");
    std::cout << report.s;
    return passed ? kExitPass : kExitFail;
  }

  if (check_unitary->parsed()) {
    Params p;
    p.p = unitary_src.resolve();
    int passed = 0;
    CStr report;
    check(ybx_check_unitary(p.p, resolve_tol(p.p, unitary_tol, unitary_tol_opt->count() > 0),
                            &passed, &report.s),
          "checking unitarity residuals");
    std::cout << report.s;
    return passed ? kExitPass : kExitFail;
  }

  if (sample_unitary->parsed()) {
    Params p;
    check(ybx_params_sample_unitary(sample_n, sample_seed, &p.p), "sampling unitary parameters");
    CStr text;
    check(ybx_params_to_json(p.p, &text.s), "serializing parameters");
    if (sample_out.empty()) {
      std::cout << text.s;
    } else {
      write_file(sample_out, text.s);
      ordered_json rep;
      rep["command"] = "sample-unitary";
      rep["n"] = sample_n;
      rep["seed"] = sample_seed;
      rep["backend"] = "float";
      rep["out"] = sample_out;
      std::cout << rep.dump(2) << "\n";
    }
    return kExitPass;
  }

  if (check_factor->parsed()) {
    Params p;
    p.p = factor_src.resolve();
    const std::int64_t n = params_n(p.p);
    const double tol = resolve_tol(p.p, factor_tol, factor_tol_opt->count() > 0);
    Matrix r, s, rs;
    check(ybx_build_r(p.p, &r.m), "building R");
    check(ybx_build_s(n, params_backend(p.p), &s.m), "building S");
    check(ybx_matmul(r.m, s.m, 0, &rs.m), "composing R with the digit swap");
    int r_split = 0, rs_split = 0;
    CStr r_report, rs_report;
    check(ybx_tensor_factor(r.m, n, tol, &r_split, &r_report.s), "factoring R");
    check(ybx_tensor_factor(rs.m, n, tol, &rs_split, &rs_report.s),
          "factoring R o digit-swap");
    ordered_json rep;
    rep["command"] = "check-factor";
    rep["n"] = n;
    rep["backend"] = params_backend(p.p) == YBX_BACKEND_EXACT ? "exact" : "float";
    rep["factor_of_r"] = ordered_json::parse(std::string(r_report.s))["witness"];
    rep["factor_of_rs"] = ordered_json::parse(std::string(rs_report.s))["witness"];
    rep["factored"] = r_split != 0 || rs_split != 0;
    std::cout << rep.dump(2) << "\n";
    return (r_split || rs_split) ? kExitPass : kExitFail;
  }

  if (check_entangling->parsed()) {
    Params p;
    p.p = entangling_src.resolve(/*unitary_fallback=*/true);
    int entangling = 0;
    CStr report;
    check(ybx_check_entangling(
              p.p, resolve_tol(p.p, entangling_tol, entangling_tol_opt->count() > 0),
              entangling_trials, entangling_src.seed, 0, &entangling, &report.s),
          "checking the entangling-gate property");
    std::cout << report.s;
    return entangling ? kExitPass : kExitFail;
  }

  die("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
