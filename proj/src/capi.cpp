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

#include "ybx.h"

#include <complex>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "ybx/analyze.hpp"
#include "ybx/construct.hpp"
#include "ybx/errors.hpp"
#include "ybx/matrix_io.hpp"
#include "ybx/params_io.hpp"
#include "ybx/report_io.hpp"
#include "ybx/verify.hpp"

using Cx = std::complex<double>;

struct ybx_params {
  ybx::AnyParamSet v;
};

struct ybx_matrix {
  ybx::AnySparseMatrix v;
};

namespace {

thread_local std::string g_last_error;

ybx_status fail(ybx_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
ybx_status guarded(F&& f) {
  try {
    return f();
  } catch (const ybx::ParseError& e) {
    return fail(YBX_ERR_PARSE, e.what());
  } catch (const ybx::LimitError& e) {
    return fail(YBX_ERR_LIMIT, e.what());
  } catch (const ybx::NotInvertibleError& e) {
    return fail(YBX_ERR_NOT_INVERTIBLE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(YBX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(YBX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(YBX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(YBX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(YBX_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ybx_backend backend_of(const ybx::AnyParamSet& v) {
  return std::holds_alternative<ybx::ParamSet<ybx::GaussianRational>>(v) ? YBX_BACKEND_EXACT
                                                                         : YBX_BACKEND_FLOAT;
}

ybx_backend backend_of(const ybx::AnySparseMatrix& v) {
  return std::holds_alternative<ybx::SparseMatrix<ybx::GaussianRational>>(v) ? YBX_BACKEND_EXACT
                                                                             : YBX_BACKEND_FLOAT;
}

// Converts the double tolerance of the C surface into the backend's
// magnitude type; the exact backend admits only 0.
template <class T>
ybx::mag_t<T> convert_tol(double tol) {
  if constexpr (ybx::scalar_traits<T>::is_exact) {
    if (tol != 0.0)
      throw std::invalid_argument("tolerance must be 0 for the exact backend");
    return ybx::Rational(0);
  } else {
    if (!(tol >= 0)) throw std::invalid_argument("tolerance must be non-negative");
    return tol;
  }
}

ybx_status require(bool cond, const char* msg) {
  return cond ? YBX_OK : fail(YBX_ERR_INVALID_ARGUMENT, msg);
}

// Verifiers take the side length n and an n^2-dim operator; a mismatch is
// a dimension error at the C surface, not a generic invalid argument.
template <class Fn>
ybx_status run_verifier(const ybx_matrix* m, int64_t n, double tol, int* out_passed,
                        char** out_report, Fn&& fn) {
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& sm) -> ybx_status {
          if (n >= 1 && sm.dim() != n * n)
            return fail(YBX_ERR_DIMENSION_MISMATCH, "verifier: operator dim must be n^2");
          using Scalar = typename std::decay_t<decltype(sm)>::scalar_type;
          const auto rep = fn(sm, convert_tol<Scalar>(tol));
          *out_passed = rep.passed ? 1 : 0;
          if (out_report)
            *out_report = dup_string(ybx::verification_report_json(rep).dump(2) + "\n");
          return YBX_OK;
        },
        m->v);
  });
}

}  // namespace

extern "C" {

const char* ybx_version(void) { return "0.1.0"; }

const char* ybx_last_error(void) { return g_last_error.c_str(); }

void ybx_string_free(char* s) { delete[] s; }

/* ---- parameter sets ---------------------------------------------------- */

ybx_status ybx_params_random(int64_t n, uint64_t seed, ybx_backend backend, ybx_params** out) {
  if (auto s = require(out != nullptr, "ybx_params_random: out is NULL")) return s;
  return guarded([&] {
    if (backend == YBX_BACKEND_EXACT)
      *out = new ybx_params{ybx::random_params<ybx::GaussianRational>(n, seed)};
    else if (backend == YBX_BACKEND_FLOAT)
      *out = new ybx_params{ybx::random_params<Cx>(n, seed)};
    else
      return fail(YBX_ERR_INVALID_ARGUMENT, "ybx_params_random: bad backend");
    return YBX_OK;
  });
}

ybx_status ybx_params_sample_unitary(int64_t n, uint64_t seed, ybx_params** out) {
  if (auto s = require(out != nullptr, "ybx_params_sample_unitary: out is NULL")) return s;
  return guarded([&] {
    *out = new ybx_params{ybx::sample_unitary_params(n, seed)};
    return YBX_OK;
  });
}

ybx_status ybx_params_parse_json(const char* text, ybx_params** out) {
  if (auto s = require(text != nullptr && out != nullptr, "ybx_params_parse_json: NULL argument"))
    return s;
  return guarded([&] {
    *out = new ybx_params{ybx::params_from_json(text)};
    return YBX_OK;
  });
}

ybx_status ybx_params_to_json(const ybx_params* p, char** out) {
  if (auto s = require(p != nullptr && out != nullptr, "ybx_params_to_json: NULL argument"))
    return s;
  return guarded([&] {
    *out = dup_string(std::visit([](const auto& ps) { return ybx::params_to_json(ps); }, p->v));
    return YBX_OK;
  });
}

ybx_status ybx_params_n(const ybx_params* p, int64_t* out) {
  if (auto s = require(p != nullptr && out != nullptr, "ybx_params_n: NULL argument")) return s;
  *out = std::visit([](const auto& ps) { return ps.n; }, p->v);
  return YBX_OK;
}

ybx_status ybx_params_backend(const ybx_params* p, ybx_backend* out) {
  if (auto s = require(p != nullptr && out != nullptr, "ybx_params_backend: NULL argument"))
    return s;
  *out = backend_of(p->v);
  return YBX_OK;
}

void ybx_params_free(ybx_params* p) { delete p; }

/* ---- operator construction --------------------------------------------- */

ybx_status ybx_build_r(const ybx_params* p, ybx_matrix** out) {
  if (auto s = require(p != nullptr && out != nullptr, "ybx_build_r: NULL argument")) return s;
  return guarded([&] {
    *out = new ybx_matrix{std::visit(
        [](const auto& ps) { return ybx::AnySparseMatrix{ybx::build_r(ps)}; }, p->v)};
    return YBX_OK;
  });
}

ybx_status ybx_build_s(int64_t n, ybx_backend backend, ybx_matrix** out) {
  if (auto s = require(out != nullptr, "ybx_build_s: out is NULL")) return s;
  return guarded([&] {
    if (backend == YBX_BACKEND_EXACT)
      *out = new ybx_matrix{ybx::build_s<ybx::GaussianRational>(n)};
    else if (backend == YBX_BACKEND_FLOAT)
      *out = new ybx_matrix{ybx::build_s<Cx>(n)};
    else
      return fail(YBX_ERR_INVALID_ARGUMENT, "ybx_build_s: bad backend");
    return YBX_OK;
  });
}

ybx_status ybx_build_rhat(const ybx_params* p, ybx_rhat_method method, ybx_matrix** out) {
  if (auto s = require(p != nullptr && out != nullptr, "ybx_build_rhat: NULL argument")) return s;
  if (auto s = require(method == YBX_RHAT_PRODUCT || method == YBX_RHAT_DIRECT,
                       "ybx_build_rhat: bad method"))
    return s;
  return guarded([&] {
    const auto m = method == YBX_RHAT_PRODUCT ? ybx::RhatMethod::Product : ybx::RhatMethod::Direct;
    *out = new ybx_matrix{std::visit(
        [m](const auto& ps) { return ybx::AnySparseMatrix{ybx::build_rhat(ps, m)}; }, p->v)};
    return YBX_OK;
  });
}

/* ---- sparse matrix operations ------------------------------------------ */

ybx_status ybx_matrix_dim(const ybx_matrix* m, int64_t* out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_matrix_dim: NULL argument")) return s;
  *out = std::visit([](const auto& sm) { return sm.dim(); }, m->v);
  return YBX_OK;
}

ybx_status ybx_matrix_nnz(const ybx_matrix* m, int64_t* out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_matrix_nnz: NULL argument")) return s;
  *out = std::visit([](const auto& sm) { return sm.nnz(); }, m->v);
  return YBX_OK;
}

ybx_status ybx_matrix_backend(const ybx_matrix* m, ybx_backend* out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_matrix_backend: NULL argument"))
    return s;
  *out = backend_of(m->v);
  return YBX_OK;
}

void ybx_matrix_free(ybx_matrix* m) { delete m; }

ybx_status ybx_matmul(const ybx_matrix* a, const ybx_matrix* b, int workers, ybx_matrix** out) {
  if (auto s = require(a != nullptr && b != nullptr && out != nullptr,
                       "ybx_matmul: NULL argument"))
    return s;
  if (backend_of(a->v) != backend_of(b->v))
    return fail(YBX_ERR_BACKEND_MISMATCH, "ybx_matmul: operands use different backends");
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& ma) -> ybx_status {
          using M = std::decay_t<decltype(ma)>;
          const auto& mb = std::get<M>(b->v);
          if (ma.dim() != mb.dim())
            return fail(YBX_ERR_DIMENSION_MISMATCH, "ybx_matmul: dimension mismatch");
          *out = new ybx_matrix{ybx::matmul(ma, mb, workers)};
          return YBX_OK;
        },
        a->v);
  });
}

ybx_status ybx_dagger(const ybx_matrix* m, ybx_matrix** out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_dagger: NULL argument")) return s;
  return guarded([&] {
    *out = new ybx_matrix{std::visit(
        [](const auto& sm) { return ybx::AnySparseMatrix{ybx::dagger(sm)}; }, m->v)};
    return YBX_OK;
  });
}

ybx_status ybx_kron_identity(const ybx_matrix* m, int64_t k, ybx_kron_side side,
                             ybx_matrix** out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_kron_identity: NULL argument"))
    return s;
  if (auto s = require(side == YBX_KRON_LEFT || side == YBX_KRON_RIGHT,
                       "ybx_kron_identity: bad side"))
    return s;
  return guarded([&] {
    const auto ks = side == YBX_KRON_LEFT ? ybx::KronSide::Left : ybx::KronSide::Right;
    *out = new ybx_matrix{std::visit(
        [&](const auto& sm) { return ybx::AnySparseMatrix{ybx::kron_identity(sm, k, ks)}; },
        m->v)};
    return YBX_OK;
  });
}

ybx_status ybx_max_abs_diff(const ybx_matrix* a, const ybx_matrix* b, char** out) {
  if (auto s = require(a != nullptr && b != nullptr && out != nullptr,
                       "ybx_max_abs_diff: NULL argument"))
    return s;
  if (backend_of(a->v) != backend_of(b->v))
    return fail(YBX_ERR_BACKEND_MISMATCH, "ybx_max_abs_diff: operands use different backends");
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& ma) -> ybx_status {
          using M = std::decay_t<decltype(ma)>;
          const auto& mb = std::get<M>(b->v);
          if (ma.dim() != mb.dim())
            return fail(YBX_ERR_DIMENSION_MISMATCH, "ybx_max_abs_diff: dimension mismatch");
          const auto d = ybx::max_abs_diff(ma, mb);
          *out = dup_string(ybx::scalar_traits<typename M::scalar_type>::mag_str(d));
          return YBX_OK;
        },
        a->v);
  });
}

ybx_status ybx_matrix_equal(const ybx_matrix* a, const ybx_matrix* b, int* out) {
  if (auto s = require(a != nullptr && b != nullptr && out != nullptr,
                       "ybx_matrix_equal: NULL argument"))
    return s;
  if (backend_of(a->v) != backend_of(b->v))
    return fail(YBX_ERR_BACKEND_MISMATCH, "ybx_matrix_equal: operands use different backends");
  return std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        const auto& mb = std::get<M>(b->v);
        if (ma.dim() != mb.dim())
          return fail(YBX_ERR_DIMENSION_MISMATCH, "ybx_matrix_equal: operands have different dimensions");
        *out = ma == mb ? 1 : 0;
        return YBX_OK;
      },
      a->v);
}

/* ---- matrix serialization ---------------------------------------------- */

ybx_status ybx_matrix_to_market(const ybx_matrix* m, char** out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_matrix_to_market: NULL argument"))
    return s;
  return guarded([&] {
    *out = dup_string(
        std::visit([](const auto& sm) { return ybx::to_matrix_market(sm); }, m->v));
    return YBX_OK;
  });
}

ybx_status ybx_matrix_to_json(const ybx_matrix* m, char** out) {
  if (auto s = require(m != nullptr && out != nullptr, "ybx_matrix_to_json: NULL argument"))
    return s;
  return guarded([&] {
    *out =
        dup_string(std::visit([](const auto& sm) { return ybx::matrix_to_json(sm); }, m->v));
    return YBX_OK;
  });
}

ybx_status ybx_matrix_parse_market(const char* text, ybx_matrix** out) {
  if (auto s = require(text != nullptr && out != nullptr,
                       "ybx_matrix_parse_market: NULL argument"))
    return s;
  return guarded([&] {
    *out = new ybx_matrix{ybx::matrix_from_market(text)};
    return YBX_OK;
  });
}

ybx_status ybx_matrix_parse_json(const char* text, ybx_matrix** out) {
  if (auto s = require(text != nullptr && out != nullptr, "ybx_matrix_parse_json: NULL argument"))
    return s;
  return guarded([&] {
    *out = new ybx_matrix{ybx::matrix_from_json(text)};
    return YBX_OK;
  });
}

/* ---- verification ------------------------------------------------------ */

ybx_status ybx_verify_braid(const ybx_matrix* m, int64_t n, double tol, int workers,
                            int* out_passed, char** out_report) {
  if (auto s = require(m != nullptr && out_passed != nullptr, "ybx_verify_braid: NULL argument"))
    return s;
  return run_verifier(m, n, tol, out_passed, out_report, [&](const auto& sm, auto t) {
    return ybx::braid_residual(sm, n, t, workers);
  });
}

ybx_status ybx_verify_quantum(const ybx_matrix* m, int64_t n, double tol, int workers,
                              int* out_passed, char** out_report) {
  if (auto s = require(m != nullptr && out_passed != nullptr, "ybx_verify_quantum: NULL argument"))
    return s;
  return run_verifier(m, n, tol, out_passed, out_report, [&](const auto& sm, auto t) {
    return ybx::quantum_residual(sm, n, t, workers);
  });
}

ybx_status ybx_braid_rep_check(const ybx_matrix* m, int64_t n, int64_t strands, double tol,
                               int workers, int64_t max_dim, int* out_passed,
                               char** out_report) {
  if (auto s = require(m != nullptr && out_passed != nullptr,
                       "ybx_braid_rep_check: NULL argument"))
    return s;
  const int64_t limit = max_dim <= 0 ? 4096 : max_dim;
  return run_verifier(m, n, tol, out_passed, out_report, [&](const auto& sm, auto t) {
    return ybx::braid_rep_check(sm, n, strands, t, workers, limit);
  });
}

/* ---- analysis ----------------------------------------------------------- */

ybx_status ybx_check_unitary(const ybx_params* p, double tol, int* out_passed,
                             char** out_report) {
  if (auto s = require(p != nullptr && out_passed != nullptr, "ybx_check_unitary: NULL argument"))
    return s;
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& ps) -> ybx_status {
          using Scalar = typename std::decay_t<decltype(ps)>::scalar_type;
          const auto t = convert_tol<Scalar>(tol);
          const auto u = ybx::unitarity_residuals(ps);
          *out_passed = u.passed(t) ? 1 : 0;
          if (out_report)
            *out_report = dup_string(ybx::unitarity_report_json(u, t).dump(2) + "\n");
          return YBX_OK;
        },
        p->v);
  });
}

ybx_status ybx_tensor_factor(const ybx_matrix* m, int64_t n, double tol, int* out_factored,
                             char** out_report) {
  if (auto s = require(m != nullptr && out_factored != nullptr,
                       "ybx_tensor_factor: NULL argument"))
    return s;
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& sm) -> ybx_status {
          if (n >= 1 && sm.dim() != n * n)
            return fail(YBX_ERR_DIMENSION_MISMATCH, "ybx_tensor_factor: matrix dim must be n^2");
          using Scalar = typename std::decay_t<decltype(sm)>::scalar_type;
          const auto w = ybx::tensor_factor(sm, n, convert_tol<Scalar>(tol));
          *out_factored = w.has_value() ? 1 : 0;
          if (out_report)
            *out_report = dup_string(ybx::factor_report_json(n, w).dump(2) + "\n");
          return YBX_OK;
        },
        m->v);
  });
}

ybx_status ybx_check_entangling(const ybx_params* p, double tol, int64_t trials, uint64_t seed,
                                int assume_invertible, int* out_passed, char** out_report) {
  if (auto s = require(p != nullptr && out_passed != nullptr,
                       "ybx_check_entangling: NULL argument"))
    return s;
  const int64_t budget = trials <= 0 ? 64 : trials;
  return guarded([&]() -> ybx_status {
    return std::visit(
        [&](const auto& ps) -> ybx_status {
          using Scalar = typename std::decay_t<decltype(ps)>::scalar_type;
          const auto rep = ybx::entangling_check(ps, convert_tol<Scalar>(tol), budget, seed,
                                                 assume_invertible != 0);
          *out_passed = rep.entangling ? 1 : 0;
          if (out_report)
            *out_report = dup_string(ybx::entangling_report_json(rep).dump(2) + "\n");
          return YBX_OK;
        },
        p->v);
  });
}

}  // extern "C"
