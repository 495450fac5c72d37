/*
 * Copyright 2026 The su11g Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "su11g/su11g.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "su11g/error.hpp"
#include "su11g/orthopoly.hpp"
#include "su11g/repalgebra.hpp"
#include "su11g/specfun.hpp"
#include "su11g/verification.hpp"
#include "su11g/wavefunctions.hpp"

struct su11g_params {
  su11g::ModelParams value;
};

struct su11g_operator {
  su11g::OperatorMatrix value;
};

struct su11g_report_set {
  bool passed = false;
  std::string json;
  std::vector<std::string> failed;
};

namespace {

thread_local std::string g_last_error;

su11g_status fail(su11g_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

su11g_status status_of(su11g::ErrorCode code) {
  switch (code) {
    case su11g::ErrorCode::domain: return SU11G_ERR_DOMAIN;
    case su11g::ErrorCode::pole: return SU11G_ERR_POLE;
    case su11g::ErrorCode::dimension: return SU11G_ERR_DIMENSION;
    case su11g::ErrorCode::convergence: return SU11G_ERR_CONVERGENCE;
    case su11g::ErrorCode::io: return SU11G_ERR_IO;
  }
  return SU11G_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes at the boundary.
template <class F>
su11g_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SU11G_OK;
  } catch (const su11g::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SU11G_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SU11G_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SU11G_ERR_INTERNAL, "unknown error");
  }
}

#define SU11G_REQUIRE(cond, what) \
  if (!(cond)) return fail(SU11G_ERR_INVALID_ARGUMENT, what)

std::optional<su11g::OperatorKind> kind_of(su11g_operator_kind k) {
  switch (k) {
    case SU11G_OP_R: return su11g::OperatorKind::R;
    case SU11G_OP_J0: return su11g::OperatorKind::J0;
    case SU11G_OP_JPLUS: return su11g::OperatorKind::Jplus;
    case SU11G_OP_JMINUS: return su11g::OperatorKind::Jminus;
    case SU11G_OP_Q: return su11g::OperatorKind::Q;
    case SU11G_OP_P: return su11g::OperatorKind::P;
    case SU11G_OP_H: return su11g::OperatorKind::H;
  }
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* su11g_last_error(void) { return g_last_error.c_str(); }

const char* su11g_status_string(su11g_status status) {
  switch (status) {
    case SU11G_OK: return "ok";
    case SU11G_ERR_DOMAIN: return "domain error";
    case SU11G_ERR_POLE: return "pole";
    case SU11G_ERR_DIMENSION: return "dimension mismatch";
    case SU11G_ERR_CONVERGENCE: return "no convergence";
    case SU11G_ERR_IO: return "i/o error";
    case SU11G_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SU11G_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

su11g_status su11g_ln_gamma(double re, double im, double* out_re, double* out_im) {
  SU11G_REQUIRE(out_re && out_im, "su11g_ln_gamma: null output");
  return guarded([&] {
    const auto v = su11g::ln_gamma({re, im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

su11g_status su11g_abs_gamma_sq(double re, double im, double* out) {
  SU11G_REQUIRE(out, "su11g_abs_gamma_sq: null output");
  return guarded([&] { *out = su11g::abs_gamma_sq({re, im}); });
}

su11g_status su11g_cdh(int n, double x2, double a, double b, double c, double* out) {
  SU11G_REQUIRE(out, "su11g_cdh: null output");
  return guarded([&] { *out = su11g::cdh({n, x2, a, b, c}); });
}

su11g_status su11g_params_create(double a, double c, double b, su11g_params** out) {
  SU11G_REQUIRE(out, "su11g_params_create: null output");
  *out = nullptr;
  return guarded([&] { *out = new su11g_params{su11g::make_params(a, c, b)}; });
}

void su11g_params_destroy(su11g_params* params) { delete params; }

double su11g_params_gamma(const su11g_params* params) { return params ? params->value.gamma() : 0.0; }

int su11g_params_physically_acceptable(const su11g_params* params) {
  return params && params->value.physically_acceptable() ? 1 : 0;
}

su11g_status su11g_allowed_a_intervals(double gamma, double* lo, double* hi, size_t capacity, size_t* count) {
  SU11G_REQUIRE(count, "su11g_allowed_a_intervals: null count");
  SU11G_REQUIRE(capacity == 0 || (lo && hi), "su11g_allowed_a_intervals: null output");
  return guarded([&] {
    const auto iv = su11g::allowed_a_interval(gamma);
    *count = iv.size();
    for (size_t k = 0; k < iv.size() && k < capacity; ++k) {
      lo[k] = iv[k].lo;
      hi[k] = iv[k].hi;
    }
  });
}

su11g_status su11g_weight(const su11g_params* params, double x, double* out) {
  SU11G_REQUIRE(params && out, "su11g_weight: null argument");
  return guarded([&] { *out = su11g::weight_w(x, params->value); });
}

su11g_status su11g_psi(const su11g_params* params, int n, double x, double* out) {
  SU11G_REQUIRE(params && out, "su11g_psi: null argument");
  return guarded([&] { *out = su11g::psi_closed(n, x, params->value); });
}

su11g_status su11g_psi_vector(const su11g_params* params, int nmax, double x, double* out) {
  SU11G_REQUIRE(params && out, "su11g_psi_vector: null argument");
  return guarded([&] {
    const auto v = su11g::psi_vector(x, nmax, params->value);
    std::copy(v.begin(), v.end(), out);
  });
}

su11g_status su11g_phi_mp(int n, double x, double a, double* out) {
  SU11G_REQUIRE(out, "su11g_phi_mp: null output");
  return guarded([&] { *out = su11g::phi_mp_fn(n, x, a); });
}

su11g_status su11g_psi_paraboson(int n, double xi, double a, double* out) {
  SU11G_REQUIRE(out, "su11g_psi_paraboson: null output");
  return guarded([&] { *out = su11g::psi_paraboson(n, xi, a); });
}

su11g_status su11g_tabulate(const su11g_params* params, su11g_family family, int nmax, const double* grid,
                            size_t grid_size, double* out) {
  SU11G_REQUIRE(params && (grid_size == 0 || (grid && out)), "su11g_tabulate: null argument");
  su11g::WaveFamily fam;
  switch (family) {
    case SU11G_FAMILY_PSI: fam = su11g::WaveFamily::psi; break;
    case SU11G_FAMILY_PHI_MP: fam = su11g::WaveFamily::phi_mp; break;
    case SU11G_FAMILY_PARABOSON: fam = su11g::WaveFamily::psi_paraboson; break;
    default: return fail(SU11G_ERR_INVALID_ARGUMENT, "su11g_tabulate: unknown family");
  }
  return guarded([&] {
    const auto samples = su11g::tabulate(fam, nmax, std::span<const double>(grid, grid_size), params->value);
    for (size_t k = 0; k < samples.size(); ++k) out[k] = samples[k].value;
  });
}

su11g_status su11g_operator_build(const su11g_params* params, su11g_operator_kind kind, int dim,
                                  su11g_operator** out) {
  SU11G_REQUIRE(params && out, "su11g_operator_build: null argument");
  *out = nullptr;
  const auto k = kind_of(kind);
  SU11G_REQUIRE(k.has_value(), "su11g_operator_build: unknown operator kind");
  return guarded([&] { *out = new su11g_operator{su11g::build_operator(*k, params->value, dim)}; });
}

void su11g_operator_destroy(su11g_operator* op) { delete op; }

int su11g_operator_dim(const su11g_operator* op) { return op ? op->value.dim() : 0; }

su11g_status su11g_operator_entry(const su11g_operator* op, int row, int col, double* re, double* im) {
  SU11G_REQUIRE(op && re && im, "su11g_operator_entry: null argument");
  const int d = op->value.dim();
  if (row < 0 || col < 0 || row >= d || col >= d) return fail(SU11G_ERR_DIMENSION, "su11g_operator_entry: index out of range");
  const auto v = op->value(row, col);
  *re = v.real();
  *im = v.imag();
  return SU11G_OK;
}

su11g_status su11g_q_eigenvalues(const su11g_params* params, int dim, double* out) {
  SU11G_REQUIRE(params && out, "su11g_q_eigenvalues: null argument");
  return guarded([&] {
    const auto ev = su11g::q_truncated_eigenvalues(params->value, dim);
    std::copy(ev.begin(), ev.end(), out);
  });
}

su11g_status su11g_gram(const su11g_params* params, int nmax, double* matrix, double* max_deviation) {
  SU11G_REQUIRE(params, "su11g_gram: null params");
  return guarded([&] {
    const auto g = su11g::gram_matrix(nmax, params->value);
    if (matrix) {
      const int d = nmax + 1;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) matrix[i * d + j] = g.matrix(i, j);
    }
    if (max_deviation) *max_deviation = g.report.residual;
  });
}

su11g_verify_options su11g_verify_default_options(void) {
  const su11g::VerifyOptions d;
  return {d.nmax, d.gram_tolerance, d.parallel ? 1 : 0};
}

su11g_status su11g_verify(const su11g_params* params, const su11g_verify_options* options, su11g_report_set** out) {
  SU11G_REQUIRE(params && out, "su11g_verify: null argument");
  *out = nullptr;
  return guarded([&] {
    su11g::VerifyOptions opts;
    if (options) {
      if (options->nmax < 0) throw su11g::DomainError("su11g_verify: nmax must be >= 0");
      if (!(options->gram_tolerance > 0.0)) throw su11g::DomainError("su11g_verify: tolerance must be positive");
      opts.nmax = options->nmax;
      opts.gram_tolerance = options->gram_tolerance;
      opts.parallel = options->parallel != 0;
    }
    const auto suites = su11g::run_verification(params->value, opts);
    auto set = std::make_unique<su11g_report_set>();
    set->passed = true;
    for (const auto& s : suites) {
      set->passed = set->passed && s.passed();
      for (const auto& r : s.reports)
        if (!r.passed) set->failed.push_back(r.check_id);
    }
    set->json = su11g::suites_to_json(params->value, suites);
    *out = set.release();
  });
}

void su11g_report_set_destroy(su11g_report_set* set) { delete set; }

int su11g_report_set_passed(const su11g_report_set* set) { return set && set->passed ? 1 : 0; }

const char* su11g_report_set_json(const su11g_report_set* set) { return set ? set->json.c_str() : ""; }

size_t su11g_report_set_failed_count(const su11g_report_set* set) { return set ? set->failed.size() : 0; }

const char* su11g_report_set_failed_id(const su11g_report_set* set, size_t index) {
  if (!set || index >= set->failed.size()) return nullptr;
  return set->failed[index].c_str();
}

}  // extern "C"
