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

#include "symplectica/symplectica.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "symplectica/beams.hpp"
#include "symplectica/clifford.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/jacobi.hpp"
#include "symplectica/matrix_io.hpp"
#include "symplectica/selftest.hpp"
#include "symplectica/spectrum.hpp"
#include "symplectica/symplectic.hpp"

namespace sy = symplectica;

struct sym_matrix {
  sy::Matrix m;
};

struct sym_decoupling {
  sy::JacobiReport report;
  sym_matrix result, transform, inverse;
};

struct sym_spectrum {
  sy::Spectrum spectrum;
};

struct sym_normal_form {
  sy::NormalForm form;
  sym_matrix result, transform, inverse;
};

struct sym_matched_beam {
  sy::MatchedBeam beam;
  sym_matrix sigma, s, transform, inverse;
};

struct sym_selftest {
  sy::SelfTestReport report;
};

namespace {

thread_local std::string last_error;

sym_status fail(sym_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
sym_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SYM_OK;
  } catch (const sy::Error& e) {
    return fail(static_cast<sym_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SYM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SYM_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw sy::Error(sy::ErrorCode::kInvalidArgument, what);
}

sy::JacobiConfig config_from(const sym_decouple_options* options) {
  sy::JacobiConfig config;
  if (options == nullptr) return config;
  require(options->strategy == 1 || options->strategy == 2, "strategy must be 1 or 2");
  require(options->tolerance >= 0.0, "tolerance must be non-negative");
  require(options->max_steps >= 0, "max_steps must be non-negative");
  config.strategy = static_cast<sy::Strategy>(options->strategy);
  config.tolerance = options->tolerance;
  config.max_sweeps = options->max_steps;
  return config;
}

sym_eigen_class class_of(sy::EigenClass c) {
  switch (c) {
    case sy::EigenClass::kElliptic: return SYM_ELLIPTIC;
    case sy::EigenClass::kHyperbolic: return SYM_HYPERBOLIC;
    case sy::EigenClass::kDegenerateZero: return SYM_DEGENERATE;
  }
  return SYM_DEGENERATE;
}

sym_status emit(sy::Matrix m, sym_matrix** out) {
  *out = new sym_matrix{std::move(m)};
  return SYM_OK;
}

}  // namespace

extern "C" {

const char* sym_version(void) { return "0.1.0"; }

const char* sym_status_name(sym_status status) {
  if (status == SYM_OK) return "Ok";
  if (status == SYM_ERR_INTERNAL) return "Internal";
  static thread_local std::string name;
  name = std::string(sy::error_name(static_cast<sy::ErrorCode>(status)));
  return name.c_str();
}

const char* sym_last_error(void) { return last_error.c_str(); }

sym_status sym_matrix_new(size_t rows, size_t cols, const double* values, sym_matrix** out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    sy::Matrix m = sy::Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    if (values != nullptr) {
      for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m(r, c) = values[r * cols + c];
    }
    emit(std::move(m), out);
  });
}

sym_status sym_matrix_parse(const char* text, sym_matrix** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    emit(sy::parse_matrix(text), out);
  });
}

sym_status sym_matrix_read(const char* path, sym_matrix** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "null argument");
    emit(sy::read_matrix_file(path), out);
  });
}

sym_status sym_matrix_write(const sym_matrix* m, const char* path) {
  return guard([&] {
    require(m != nullptr && path != nullptr, "null argument");
    sy::write_matrix_file(path, m->m);
  });
}

char* sym_matrix_format(const sym_matrix* m) {
  if (m == nullptr) return nullptr;
  try {
    const std::string text = sy::format_matrix(m->m);
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
  } catch (...) {
    return nullptr;
  }
}

void sym_string_free(char* s) { std::free(s); }

void sym_matrix_free(sym_matrix* m) { delete m; }

size_t sym_matrix_rows(const sym_matrix* m) { return m ? static_cast<size_t>(m->m.rows()) : 0; }

size_t sym_matrix_cols(const sym_matrix* m) { return m ? static_cast<size_t>(m->m.cols()) : 0; }

double sym_matrix_get(const sym_matrix* m, size_t row, size_t col) {
  if (m == nullptr || row >= sym_matrix_rows(m) || col >= sym_matrix_cols(m)) return 0.0;
  return m->m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

sym_status sym_matrix_copy_to(const sym_matrix* m, double* out, size_t capacity) {
  return guard([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const size_t rows = sym_matrix_rows(m), cols = sym_matrix_cols(m);
    require(capacity >= rows * cols, "output buffer too small");
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) out[r * cols + c] = m->m(r, c);
  });
}

sym_status sym_check_structure(const sym_matrix* m, double tolerance, sym_structure* out) {
  return guard([&] {
    require(m != nullptr && out != nullptr, "null argument");
    require(tolerance >= 0.0, "tolerance must be non-negative");
    sy::require_phase_matrix(m->m, "check_structure");
    out->hamiltonian_residual = sy::hamiltonian_residual(m->m);
    out->skew_hamiltonian_residual = sy::skew_hamiltonian_residual(m->m);
    out->symplectic_residual = sy::symplectic_residual(m->m);
    out->hamiltonian = out->hamiltonian_residual <= tolerance;
    out->skew_hamiltonian = out->skew_hamiltonian_residual <= tolerance;
    out->symplectic = out->symplectic_residual <= tolerance;
  });
}

sym_status sym_dirac_coefficients(const sym_matrix* m, double out[16]) {
  return guard([&] {
    require(m != nullptr && out != nullptr, "null argument");
    if (m->m.rows() != 4 || m->m.cols() != 4) {
      throw sy::Error(sy::ErrorCode::kDimensionMismatch, "Dirac coefficients need a 4x4 matrix");
    }
    const sy::DiracCoefficients c = sy::decompose4(m->m);
    for (int k = 0; k < 16; ++k) out[k] = c.m[k];
  });
}

sym_status sym_generator(int k, double tau, sym_matrix** out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    emit(sy::generator_matrix(sy::GeneratorId(k), tau), out);
  });
}

void sym_decouple_options_init(sym_decouple_options* options) {
  if (options == nullptr) return;
  const sy::JacobiConfig defaults;
  options->strategy = static_cast<int>(defaults.strategy);
  options->tolerance = defaults.tolerance;
  options->max_steps = defaults.max_sweeps;
}

sym_status sym_decouple(const sym_matrix* m, const sym_decouple_options* options, sym_decoupling** out) {
  return guard([&] {
    require(m != nullptr && out != nullptr, "null argument");
    auto* d = new sym_decoupling;
    try {
      d->report = sy::jacobi_decouple(m->m, config_from(options));
    } catch (...) {
      delete d;
      throw;
    }
    d->result.m = d->report.result;
    d->transform.m = d->report.transform.forward;
    d->inverse.m = d->report.transform.inverse;
    *out = d;
  });
}

const sym_matrix* sym_decoupling_result(const sym_decoupling* d) { return d ? &d->result : nullptr; }
const sym_matrix* sym_decoupling_transform(const sym_decoupling* d) { return d ? &d->transform : nullptr; }
const sym_matrix* sym_decoupling_inverse(const sym_decoupling* d) { return d ? &d->inverse : nullptr; }
long sym_decoupling_steps(const sym_decoupling* d) { return d ? d->report.steps : 0; }
long sym_decoupling_skipped_pairs(const sym_decoupling* d) { return d ? d->report.skipped_pairs : 0; }
int sym_decoupling_skew(const sym_decoupling* d) {
  return d && d->report.structure == sy::Structure::kSkewHamiltonian;
}
double sym_decoupling_residual(const sym_decoupling* d) { return d ? d->report.residual() : 0.0; }
size_t sym_decoupling_history_size(const sym_decoupling* d) {
  return d ? d->report.residual_history.size() : 0;
}
double sym_decoupling_history(const sym_decoupling* d, size_t i) {
  return d && i < d->report.residual_history.size() ? d->report.residual_history[i] : 0.0;
}
void sym_decoupling_free(sym_decoupling* d) { delete d; }

sym_status sym_eigenvalues(const sym_matrix* h, const sym_decouple_options* options, sym_spectrum** out) {
  return guard([&] {
    require(h != nullptr && out != nullptr, "null argument");
    sy::Spectrum s = sy::eigenvalues(h->m, config_from(options));
    *out = new sym_spectrum{std::move(s)};
  });
}

size_t sym_spectrum_size(const sym_spectrum* s) { return s ? s->spectrum.pairs.size() : 0; }

sym_status sym_spectrum_get(const sym_spectrum* s, size_t i, sym_eigenpair* out) {
  return guard([&] {
    require(s != nullptr && out != nullptr, "null argument");
    require(i < s->spectrum.pairs.size(), "index out of range");
    const sy::EigenPair& p = s->spectrum.pairs[i];
    *out = sym_eigenpair{p.re, p.im, p.omega, class_of(p.cls)};
  });
}

void sym_spectrum_free(sym_spectrum* s) { delete s; }

sym_status sym_invariants4(const sym_matrix* h, double* k1, double* k2) {
  return guard([&] {
    require(h != nullptr && k1 != nullptr && k2 != nullptr, "null argument");
    if (h->m.rows() != 4 || h->m.cols() != 4) {
      throw sy::Error(sy::ErrorCode::kDimensionMismatch, "invariants need a 4x4 matrix");
    }
    const sy::Invariants4 k = sy::k_invariants(h->m);
    *k1 = k.k1;
    *k2 = k.k2;
  });
}

sym_status sym_normal_form_compute(const sym_matrix* h, const sym_decouple_options* options, sym_normal_form** out) {
  return guard([&] {
    require(h != nullptr && out != nullptr, "null argument");
    sy::NormalForm form = sy::normal_form(h->m, config_from(options));
    auto* nf = new sym_normal_form;
    nf->result.m = form.result;
    nf->transform.m = form.transform.forward;
    nf->inverse.m = form.transform.inverse;
    nf->form = std::move(form);
    *out = nf;
  });
}

const sym_matrix* sym_normal_form_result(const sym_normal_form* nf) { return nf ? &nf->result : nullptr; }
const sym_matrix* sym_normal_form_transform(const sym_normal_form* nf) {
  return nf ? &nf->transform : nullptr;
}
const sym_matrix* sym_normal_form_inverse(const sym_normal_form* nf) { return nf ? &nf->inverse : nullptr; }
size_t sym_normal_form_blocks(const sym_normal_form* nf) { return nf ? nf->form.blocks.size() : 0; }

sym_status sym_normal_form_block(const sym_normal_form* nf, size_t i, sym_block_form* out) {
  return guard([&] {
    require(nf != nullptr && out != nullptr, "null argument");
    require(i < nf->form.blocks.size(), "index out of range");
    const sy::NormalForm2& b = nf->form.blocks[i];
    *out = sym_block_form{b.omega, class_of(b.cls), b.extension ? 1 : 0};
  });
}

long sym_normal_form_steps(const sym_normal_form* nf) { return nf ? nf->form.decoupling.steps : 0; }
void sym_normal_form_free(sym_normal_form* nf) { delete nf; }

sym_status sym_exp(const sym_matrix* h, const sym_decouple_options* options, sym_matrix** out) {
  return guard([&] {
    require(h != nullptr && out != nullptr, "null argument");
    emit(sy::sympl_exp(h->m, config_from(options)), out);
  });
}

sym_status sym_log(const sym_matrix* m, const sym_decouple_options* options, sym_matrix** out) {
  return guard([&] {
    require(m != nullptr && out != nullptr, "null argument");
    emit(sy::sympl_log(m->m, config_from(options)), out);
  });
}

sym_status sym_matched_sigma(const sym_matrix* transfer, const double* emittances, size_t count,
                             const sym_decouple_options* options, sym_matched_beam** out) {
  return guard([&] {
    require(transfer != nullptr && out != nullptr, "null argument");
    require(emittances != nullptr || count == 0, "emittances is null");
    sy::MatchedBeam beam = sy::matched_sigma(
        transfer->m, std::vector<double>(emittances, emittances + count), config_from(options));
    auto* b = new sym_matched_beam;
    b->sigma.m = beam.moments.sigma;
    b->s.m = beam.moments.s;
    b->transform.m = beam.normalizing.forward;
    b->inverse.m = beam.normalizing.inverse;
    b->beam = std::move(beam);
    *out = b;
  });
}

const sym_matrix* sym_matched_sigma_matrix(const sym_matched_beam* beam) { return beam ? &beam->sigma : nullptr; }
const sym_matrix* sym_matched_s_matrix(const sym_matched_beam* beam) { return beam ? &beam->s : nullptr; }
const sym_matrix* sym_matched_transform(const sym_matched_beam* beam) {
  return beam ? &beam->transform : nullptr;
}
const sym_matrix* sym_matched_inverse(const sym_matched_beam* beam) { return beam ? &beam->inverse : nullptr; }

double sym_matched_emittance(const sym_matched_beam* beam, size_t i) {
  return beam && i < beam->beam.emittances.size() ? beam->beam.emittances[i] : 0.0;
}

double sym_matched_phase_advance(const sym_matched_beam* beam, size_t i) {
  return beam && i < beam->beam.phase_advances.size() ? beam->beam.phase_advances[i] : 0.0;
}

sym_status sym_sample_matched(const sym_matched_beam* beam, size_t count, uint64_t seed, sym_matrix** out) {
  return guard([&] {
    require(beam != nullptr && out != nullptr, "null argument");
    emit(sy::sample_matched(beam->beam, static_cast<Eigen::Index>(count), seed), out);
  });
}

void sym_matched_free(sym_matched_beam* beam) { delete beam; }

sym_status sym_selftest_run(double tau, double tolerance, sym_selftest** out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    require(tolerance >= 0.0, "tolerance must be non-negative");
    *out = new sym_selftest{sy::run_selftest(sy::dirac_basis(), tau, tolerance)};
  });
}

size_t sym_selftest_size(const sym_selftest* t) { return t ? t->report.cells.size() : 0; }

size_t sym_selftest_failures(const sym_selftest* t) {
  return t ? static_cast<size_t>(t->report.failures()) : 0;
}

size_t sym_selftest_count(const sym_selftest* t, const char* table) {
  if (t == nullptr || table == nullptr) return 0;
  for (auto which : {sy::SelfTestTable::kClassification, sy::SelfTestTable::kRotations,
                     sy::SelfTestTable::kBoosts, sy::SelfTestTable::kScalarProducts}) {
    if (std::strcmp(table, sy::selftest_table_name(which)) == 0) {
      return static_cast<size_t>(t->report.count(which));
    }
  }
  return 0;
}

sym_status sym_selftest_cell(const sym_selftest* t, size_t i, const char** table, const char** label,
                             int* pass, double* error) {
  return guard([&] {
    require(t != nullptr, "null argument");
    require(i < t->report.cells.size(), "index out of range");
    const sy::SelfTestCell& c = t->report.cells[i];
    if (table) *table = sy::selftest_table_name(c.table);
    if (label) *label = c.label.c_str();
    if (pass) *pass = c.pass ? 1 : 0;
    if (error) *error = c.error;
  });
}

void sym_selftest_free(sym_selftest* t) { delete t; }

}  // extern "C"
