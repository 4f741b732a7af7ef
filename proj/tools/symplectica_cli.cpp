// Copyright 2026 The Symplectica Authors
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

// Command-line front end. Every command prints one JSON result document on
// stdout (schema "symplectica.result/1"); diagnostics go to stderr. The exit
// code is the library status code, 0 on success and 64 for usage errors.

#include <symplectica/symplectica.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "symplectica.result/1";
constexpr int kUsageError = 64;
constexpr double kStructureTolerance = 1e-12;
constexpr std::uint64_t kDefaultSeed = 1;

// Library failure carrying its status code.
struct Failure {
  sym_status status;
  std::string message;
};

void check(sym_status status) {
  if (status != SYM_OK) throw Failure{status, sym_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using MatrixPtr = std::unique_ptr<sym_matrix, Deleter<sym_matrix, sym_matrix_free>>;
using DecouplingPtr = std::unique_ptr<sym_decoupling, Deleter<sym_decoupling, sym_decoupling_free>>;
using SpectrumPtr = std::unique_ptr<sym_spectrum, Deleter<sym_spectrum, sym_spectrum_free>>;
using NormalFormPtr = std::unique_ptr<sym_normal_form, Deleter<sym_normal_form, sym_normal_form_free>>;
using BeamPtr = std::unique_ptr<sym_matched_beam, Deleter<sym_matched_beam, sym_matched_free>>;
using SelfTestPtr = std::unique_ptr<sym_selftest, Deleter<sym_selftest, sym_selftest_free>>;

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

json matrix_json(const sym_matrix* m) {
  json rows = json::array();
  for (size_t r = 0; r < sym_matrix_rows(m); ++r) {
    json row = json::array();
    for (size_t c = 0; c < sym_matrix_cols(m); ++c) row.push_back(sym_matrix_get(m, r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* class_name(sym_eigen_class c) {
  switch (c) {
    case SYM_ELLIPTIC: return "elliptic";
    case SYM_HYPERBOLIC: return "hyperbolic";
    case SYM_DEGENERATE: return "degenerate-zero";
  }
  return "unknown";
}

void write_matrix(const sym_matrix* m, const std::string& path) { check(sym_matrix_write(m, path.c_str())); }

struct Options {
  std::string input;
  int strategy = 1;
  double tolerance = 1e-12;
  long max_sweeps = 0;
  double structure_tolerance = kStructureTolerance;
  std::string emit_transform;
  std::string result_path;
  std::string out_path;
  std::vector<double> emittances;
  long samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string samples_out = "-";
  double tau = 0.7;
  double table_tolerance = 1e-12;
};

sym_decouple_options decouple_options(const Options& o) {
  sym_decouple_options d;
  sym_decouple_options_init(&d);
  d.strategy = o.strategy;
  d.tolerance = o.tolerance;
  d.max_steps = o.max_sweeps;
  return d;
}

json defaults_json() {
  sym_decouple_options d;
  sym_decouple_options_init(&d);
  return {{"structure_tolerance", kStructureTolerance},
          {"decouple_tolerance", d.tolerance},
          {"strategy", d.strategy},
          {"max_sweeps", "64 n^2"},
          {"selftest_tau", 0.7},
          {"selftest_tolerance", 1e-12},
          {"seed", kDefaultSeed},
          {"rng", "mt19937_64 + Box-Muller"}};
}

json decouple_options_json(const Options& o) {
  return {{"strategy", o.strategy}, {"tolerance", o.tolerance}, {"max_sweeps", o.max_sweeps}};
}

// Reads the input file, records its checksum in the document and parses it.
MatrixPtr load_input(const Options& o, json& doc) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw Failure{SYM_ERR_IO, "cannot open '" + o.input + "' for reading"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  doc["input"] = {{"path", o.input}, {"checksum", fnv1a64(text)}};
  sym_matrix* m = nullptr;
  check(sym_matrix_parse(text.c_str(), &m));
  MatrixPtr owned(m);
  doc["input"]["dimension"] = sym_matrix_rows(m);
  return owned;
}

json spectrum_json(const sym_spectrum* s) {
  json pairs = json::array();
  for (size_t i = 0; i < sym_spectrum_size(s); ++i) {
    sym_eigenpair p;
    check(sym_spectrum_get(s, i, &p));
    pairs.push_back({{"re", p.re}, {"im", p.im}, {"omega", p.omega}, {"class", class_name(p.cls)}});
  }
  return pairs;
}

void emit_transform(const Options& o, const sym_matrix* forward, const sym_matrix* inverse, json& doc) {
  if (o.emit_transform.empty()) return;
  const std::string f = o.emit_transform + ".forward.txt";
  const std::string i = o.emit_transform + ".inverse.txt";
  write_matrix(forward, f);
  write_matrix(inverse, i);
  doc["transform_files"] = {{"forward", f}, {"inverse", i}};
  doc["transform"] = matrix_json(forward);
  doc["transform_inverse"] = matrix_json(inverse);
}

void cmd_check(const Options& o, json& doc) {
  doc["options"] = {{"tolerance", o.structure_tolerance}};
  MatrixPtr m = load_input(o, doc);
  sym_structure s;
  check(sym_check_structure(m.get(), o.structure_tolerance, &s));
  doc["structure"] = {{"hamiltonian", s.hamiltonian != 0},
                      {"skew_hamiltonian", s.skew_hamiltonian != 0},
                      {"symplectic", s.symplectic != 0}};
  doc["residuals"] = {{"hamiltonian", s.hamiltonian_residual},
                      {"skew_hamiltonian", s.skew_hamiltonian_residual},
                      {"symplectic", s.symplectic_residual}};
  if (sym_matrix_rows(m.get()) == 4) {
    double c[16];
    check(sym_dirac_coefficients(m.get(), c));
    json coefficients = json::array();
    for (double v : c) coefficients.push_back(v);
    doc["dirac_coefficients"] = coefficients;
  }
}

void cmd_decouple(const Options& o, json& doc) {
  doc["options"] = decouple_options_json(o);
  MatrixPtr m = load_input(o, doc);
  const sym_decouple_options d = decouple_options(o);
  sym_decoupling* raw = nullptr;
  check(sym_decouple(m.get(), &d, &raw));
  DecouplingPtr r(raw);
  doc["structure"] = sym_decoupling_skew(raw) ? "skew-hamiltonian" : "hamiltonian";
  doc["steps"] = sym_decoupling_steps(raw);
  doc["skipped_pairs"] = sym_decoupling_skipped_pairs(raw);
  json history = json::array();
  for (size_t i = 0; i < sym_decoupling_history_size(raw); ++i) history.push_back(sym_decoupling_history(raw, i));
  doc["residuals"] = {{"off_block_relative", sym_decoupling_residual(raw)}, {"history", history}};
  doc["result"] = matrix_json(sym_decoupling_result(raw));
  if (!o.result_path.empty()) {
    write_matrix(sym_decoupling_result(raw), o.result_path);
    doc["result_file"] = o.result_path;
  }
  emit_transform(o, sym_decoupling_transform(raw), sym_decoupling_inverse(raw), doc);
}

void cmd_eig(const Options& o, json& doc) {
  doc["options"] = decouple_options_json(o);
  MatrixPtr m = load_input(o, doc);
  const sym_decouple_options d = decouple_options(o);
  if (sym_matrix_rows(m.get()) == 4) {
    double k1 = 0.0, k2 = 0.0;
    check(sym_invariants4(m.get(), &k1, &k2));
    doc["invariants"] = {{"k1", k1}, {"k2", k2}};
  }
  sym_spectrum* raw = nullptr;
  check(sym_eigenvalues(m.get(), &d, &raw));
  SpectrumPtr s(raw);
  doc["eigenpairs"] = spectrum_json(raw);
}

void cmd_normalform(const Options& o, json& doc) {
  doc["options"] = decouple_options_json(o);
  MatrixPtr m = load_input(o, doc);
  const sym_decouple_options d = decouple_options(o);
  sym_normal_form* raw = nullptr;
  check(sym_normal_form_compute(m.get(), &d, &raw));
  NormalFormPtr nf(raw);
  json blocks = json::array();
  for (size_t i = 0; i < sym_normal_form_blocks(raw); ++i) {
    sym_block_form b;
    check(sym_normal_form_block(raw, i, &b));
    blocks.push_back({{"omega", b.omega}, {"class", class_name(b.cls)}, {"extension", b.extension != 0}});
  }
  doc["steps"] = sym_normal_form_steps(raw);
  doc["blocks"] = blocks;
  doc["result"] = matrix_json(sym_normal_form_result(raw));
  if (!o.result_path.empty()) {
    write_matrix(sym_normal_form_result(raw), o.result_path);
    doc["result_file"] = o.result_path;
  }
  emit_transform(o, sym_normal_form_transform(raw), sym_normal_form_inverse(raw), doc);
}

void cmd_exp_log(const Options& o, json& doc, bool logarithm) {
  doc["options"] = decouple_options_json(o);
  MatrixPtr m = load_input(o, doc);
  const sym_decouple_options d = decouple_options(o);
  sym_matrix* raw = nullptr;
  check(logarithm ? sym_log(m.get(), &d, &raw) : sym_exp(m.get(), &d, &raw));
  MatrixPtr r(raw);
  sym_structure s;
  check(sym_check_structure(raw, o.structure_tolerance, &s));
  doc["residuals"] = logarithm ? json{{"hamiltonian", s.hamiltonian_residual}}
                               : json{{"symplectic", s.symplectic_residual}};
  doc["result"] = matrix_json(raw);
  if (!o.out_path.empty()) {
    write_matrix(raw, o.out_path);
    doc["result_file"] = o.out_path;
  }
}

// Returns the sample rows to stream after the document, if any.
std::string cmd_matched(const Options& o, json& doc) {
  std::uint64_t seed = o.seed;
  std::string seed_source = "option";
  if (const char* env = std::getenv("SYMPLECTICA_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 0);
    if (end == env || *end != '\0') throw Failure{SYM_ERR_INVALID_ARGUMENT, "SYMPLECTICA_SEED is not an integer"};
    seed = value;
    seed_source = "SYMPLECTICA_SEED";
  }
  json options = decouple_options_json(o);
  options["emittances"] = o.emittances;
  options["samples"] = o.samples;
  options["seed"] = seed;
  options["seed_source"] = seed_source;
  options["samples_out"] = o.samples_out;
  doc["options"] = options;
  if (o.samples < 0) throw Failure{SYM_ERR_INVALID_ARGUMENT, "--samples must be non-negative"};

  MatrixPtr m = load_input(o, doc);
  const sym_decouple_options d = decouple_options(o);
  sym_matched_beam* raw = nullptr;
  check(sym_matched_sigma(m.get(), o.emittances.data(), o.emittances.size(), &d, &raw));
  BeamPtr beam(raw);

  const size_t pairs = sym_matrix_rows(m.get()) / 2;
  json modes = json::array();
  for (size_t i = 0; i < pairs; ++i) {
    modes.push_back({{"pair", i},
                     {"emittance", sym_matched_emittance(raw, i)},
                     {"phase_advance", sym_matched_phase_advance(raw, i)}});
  }
  doc["modes"] = modes;
  doc["sigma"] = matrix_json(sym_matched_sigma_matrix(raw));
  doc["s"] = matrix_json(sym_matched_s_matrix(raw));
  emit_transform(o, sym_matched_transform(raw), sym_matched_inverse(raw), doc);

  if (o.samples == 0) return {};
  sym_matrix* samples_raw = nullptr;
  check(sym_sample_matched(raw, static_cast<size_t>(o.samples), seed, &samples_raw));
  MatrixPtr samples(samples_raw);
  doc["sample_count"] = o.samples;
  if (o.samples_out != "-") {
    write_matrix(samples.get(), o.samples_out);
    doc["samples_file"] = o.samples_out;
    return {};
  }
  char* text = sym_matrix_format(samples.get());
  if (text == nullptr) throw Failure{SYM_ERR_INTERNAL, "cannot format samples"};
  std::string rows(text);
  sym_string_free(text);
  return rows;
}

void cmd_selftest(const Options& o, json& doc) {
  doc["options"] = {{"tau", o.tau}, {"tolerance", o.table_tolerance}};
  sym_selftest* raw = nullptr;
  check(sym_selftest_run(o.tau, o.table_tolerance, &raw));
  SelfTestPtr t(raw);
  json counts = json::object();
  for (const char* table : {"classification", "rotations", "boosts", "scalar-products"}) {
    counts[table] = sym_selftest_count(raw, table);
  }
  json cells = json::array();
  for (size_t i = 0; i < sym_selftest_size(raw); ++i) {
    const char* table = nullptr;
    const char* label = nullptr;
    int pass = 0;
    double error = 0.0;
    check(sym_selftest_cell(raw, i, &table, &label, &pass, &error));
    cells.push_back({{"table", table}, {"cell", label}, {"pass", pass != 0}, {"error", error}});
    if (!pass) std::cerr << "FAIL " << table << " " << label << " error " << error << "\n";
  }
  const size_t failures = sym_selftest_failures(raw);
  doc["counts"] = counts;
  doc["cells_total"] = sym_selftest_size(raw);
  doc["failures"] = failures;
  doc["cells"] = cells;
  std::cerr << "selftest: " << sym_selftest_size(raw) - failures << "/" << sym_selftest_size(raw)
            << " cells pass\n";
  if (failures > 0) {
    throw Failure{SYM_ERR_SELFTEST_FAILURE, std::to_string(failures) + " table cells failed"};
  }
}

void add_decouple_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--strategy", o.strategy, "Decoupling strategy (1: bivector boost, 2: vector boost)")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--tol", o.tolerance, "Relative off-block residual at which decoupling stops")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-sweeps", o.max_sweeps, "Block-step limit, 0 for 64 n^2")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic block-diagonalization, spectra and matched beams"};
  app.set_version_flag("--version", sym_version());
  app.require_subcommand(1);
  Options o;

  auto* check_cmd = app.add_subcommand("check", "Report structure predicates and Dirac coefficients");
  check_cmd->add_option("matrix", o.input, "Matrix file")->required();
  check_cmd->add_option("--tol", o.structure_tolerance, "Absolute predicate tolerance")->check(CLI::NonNegativeNumber);

  auto* decouple_cmd = app.add_subcommand("decouple", "Block-diagonalize a (skew-)Hamiltonian matrix");
  decouple_cmd->add_option("matrix", o.input, "Matrix file")->required();
  add_decouple_flags(decouple_cmd, o);
  decouple_cmd->add_option("--emit-transform", o.emit_transform,
                           "Write PREFIX.forward.txt and PREFIX.inverse.txt");
  decouple_cmd->add_option("--result", o.result_path, "Write the block-diagonal matrix to this file");

  auto* eig_cmd = app.add_subcommand("eig", "Eigenvalue pairs of a Hamiltonian matrix");
  eig_cmd->add_option("matrix", o.input, "Matrix file")->required();
  add_decouple_flags(eig_cmd, o);

  auto* nf_cmd = app.add_subcommand("normalform", "Block-diagonalize and bring each block to normal form");
  nf_cmd->add_option("matrix", o.input, "Matrix file")->required();
  add_decouple_flags(nf_cmd, o);
  nf_cmd->add_option("--emit-transform", o.emit_transform, "Write PREFIX.forward.txt and PREFIX.inverse.txt");
  nf_cmd->add_option("--result", o.result_path, "Write the normal form to this file");

  auto* exp_cmd = app.add_subcommand("exp", "Matrix exponential of a Hamiltonian matrix");
  exp_cmd->add_option("matrix", o.input, "Matrix file")->required();
  add_decouple_flags(exp_cmd, o);
  exp_cmd->add_option("--out", o.out_path, "Write the result to this file");

  auto* log_cmd = app.add_subcommand("log", "Hamiltonian logarithm of a symplectic matrix");
  log_cmd->add_option("matrix", o.input, "Matrix file")->required();
  add_decouple_flags(log_cmd, o);
  log_cmd->add_option("--out", o.out_path, "Write the result to this file");

  auto* matched_cmd = app.add_subcommand("matched", "Matched second moments and Gaussian samples");
  matched_cmd->add_option("matrix", o.input, "One-turn transfer matrix file")->required();
  add_decouple_flags(matched_cmd, o);
  matched_cmd->add_option("--emittances", o.emittances, "One emittance per pair, by descending phase advance")
      ->required()
      ->delimiter(',');
  matched_cmd->add_option("--samples", o.samples, "Number of phase-space points to draw");
  matched_cmd->add_option("--seed", o.seed, "Seed (SYMPLECTICA_SEED overrides)");
  matched_cmd->add_option("--samples-out", o.samples_out, "Sample file, '-' for stdout after the document");
  matched_cmd->add_option("--emit-transform", o.emit_transform, "Write PREFIX.forward.txt and PREFIX.inverse.txt");

  auto* selftest_cmd = app.add_subcommand("selftest", "Regenerate and verify the reference tables");
  selftest_cmd->add_option("--tau", o.tau, "Transformation parameter");
  selftest_cmd->add_option("--tol", o.table_tolerance, "Absolute cell tolerance")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsageError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  json doc;
  doc["schema"] = kSchema;
  doc["version"] = sym_version();
  doc["command"] = cmd->get_name();
  doc["defaults"] = defaults_json();

  std::string trailing;
  sym_status status = SYM_OK;
  std::string message;
  try {
    const std::string& name = cmd->get_name();
    if (name == "check") cmd_check(o, doc);
    else if (name == "decouple") cmd_decouple(o, doc);
    else if (name == "eig") cmd_eig(o, doc);
    else if (name == "normalform") cmd_normalform(o, doc);
    else if (name == "exp") cmd_exp_log(o, doc, false);
    else if (name == "log") cmd_exp_log(o, doc, true);
    else if (name == "matched") trailing = cmd_matched(o, doc);
    else if (name == "selftest") cmd_selftest(o, doc);
  } catch (const Failure& f) {
    status = f.status;
    message = f.message;
  } catch (const std::exception& e) {
    status = SYM_ERR_INTERNAL;
    message = e.what();
  }
  doc["status"] = {{"code", static_cast<int>(status)}, {"name", sym_status_name(status)}, {"message", message}};
  if (status != SYM_OK) std::cerr << "symplectica " << cmd->get_name() << ": " << sym_status_name(status) << ": " << message << "\n";

  if (trailing.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# " << doc.dump() << "\n" << trailing;
  }
  std::cout.flush();
  return static_cast<int>(status);
}
