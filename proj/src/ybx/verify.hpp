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

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ybx/construct.hpp"
#include "ybx/errors.hpp"
#include "ybx/sparse.hpp"

namespace ybx {

enum class Equation { Braid, Quantum, BraidRelations };

inline const char* equation_name(Equation e) {
  switch (e) {
    case Equation::Braid: return "braid";
    case Equation::Quantum: return "quantum";
    case Equation::BraidRelations: return "braid-relations";
  }
  return "?";
}

template <class T>
struct VerificationReport {
  Equation equation = Equation::Braid;
  index_t n = 0;
  index_t dims = 0;
  index_t strands = 0;  // braid-relations checks only
  mag_t<T> residual = scalar_traits<T>::mag_zero();
  mag_t<T> tolerance = scalar_traits<T>::mag_zero();
  bool passed = false;
  double elapsed_ms = 0;
};

namespace detail {

class StopWatch {
public:
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

template <class T>
void require_valid_tol(const mag_t<T>& tol) {
  if constexpr (scalar_traits<T>::is_exact) {
    if (!(tol == scalar_traits<T>::mag_zero()))
      throw std::invalid_argument("tolerance must be 0 for the exact backend");
  } else {
    if (!(tol >= 0)) throw std::invalid_argument("tolerance must be non-negative");
  }
}

template <class T>
bool within(const mag_t<T>& residual, const mag_t<T>& tol) {
  return !(tol < residual);
}

}  // namespace detail

// Residual of the braid-form equation for an n^2 x n^2 operator R:
// max entry magnitude of (R(x)I)(I(x)R)(R(x)I) - (I(x)R)(R(x)I)(I(x)R)
// on the n^3-dimensional space.
template <class T>
VerificationReport<T> braid_residual(const SparseMatrix<T>& r, index_t n,
                                     mag_t<T> tol = scalar_traits<T>::default_tolerance(),
                                     int workers = 0) {
  detail::StopWatch clock;
  if (n < 1) throw std::invalid_argument("braid_residual: n must be positive");
  if (r.dim() != n * n) throw std::invalid_argument("braid_residual: operator dim must be n^2");
  detail::require_valid_tol<T>(tol);
  const SparseMatrix<T> a = kron_identity(r, n, KronSide::Right);
  const SparseMatrix<T> b = kron_identity(r, n, KronSide::Left);
  const SparseMatrix<T> lhs = matmul(matmul(a, b, workers), a, workers);
  const SparseMatrix<T> rhs = matmul(matmul(b, a, workers), b, workers);
  VerificationReport<T> rep;
  rep.equation = Equation::Braid;
  rep.n = n;
  rep.dims = n * n * n;
  rep.residual = max_abs_diff(lhs, rhs);
  rep.tolerance = tol;
  rep.passed = detail::within<T>(rep.residual, tol);
  rep.elapsed_ms = clock.ms();
  return rep;
}

// Residual of the quantum-form equation for an n^2 x n^2 operator Q:
// max entry magnitude of Q12 Q13 Q23 - Q23 Q13 Q12, where
// Q12 = Q(x)I, Q23 = I(x)Q and Q13 conjugates Q12 by the digit swap on
// the last two factors.
template <class T>
VerificationReport<T> quantum_residual(const SparseMatrix<T>& q, index_t n,
                                       mag_t<T> tol = scalar_traits<T>::default_tolerance(),
                                       int workers = 0) {
  detail::StopWatch clock;
  if (n < 1) throw std::invalid_argument("quantum_residual: n must be positive");
  if (q.dim() != n * n) throw std::invalid_argument("quantum_residual: operator dim must be n^2");
  detail::require_valid_tol<T>(tol);
  const SparseMatrix<T> q12 = kron_identity(q, n, KronSide::Right);
  const SparseMatrix<T> q23 = kron_identity(q, n, KronSide::Left);
  const SparseMatrix<T> is = kron_identity(build_s<T>(n), n, KronSide::Left);
  const SparseMatrix<T> q13 = matmul(matmul(is, q12, workers), is, workers);
  const SparseMatrix<T> lhs = matmul(matmul(q12, q13, workers), q23, workers);
  const SparseMatrix<T> rhs = matmul(matmul(q23, q13, workers), q12, workers);
  VerificationReport<T> rep;
  rep.equation = Equation::Quantum;
  rep.n = n;
  rep.dims = n * n * n;
  rep.residual = max_abs_diff(lhs, rhs);
  rep.tolerance = tol;
  rep.passed = detail::within<T>(rep.residual, tol);
  rep.elapsed_ms = clock.ms();
  return rep;
}

// Verifies the defining relations of the braid group on `strands` strands
// in the representation sending generator i to
// I^(i-1) (x) R (x) I^(strands-1-i) on n^strands dimensions:
//   (a) g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}
//   (b) g_i g_j = g_j g_i for |i - j| >= 2.
// The residual is the max over all relation instances.
template <class T>
VerificationReport<T> braid_rep_check(const SparseMatrix<T>& r, index_t n, index_t strands,
                                      mag_t<T> tol = scalar_traits<T>::default_tolerance(),
                                      int workers = 0, index_t max_dim = 4096) {
  detail::StopWatch clock;
  if (n < 1) throw std::invalid_argument("braid_rep_check: n must be positive");
  if (r.dim() != n * n) throw std::invalid_argument("braid_rep_check: operator dim must be n^2");
  if (strands < 2) throw std::invalid_argument("braid_rep_check: strands must be at least 2");
  detail::require_valid_tol<T>(tol);

  index_t dim = 1;
  for (index_t i = 0; i < strands; ++i) {
    if (dim > max_dim / n)
      throw LimitError("braid_rep_check: n^strands exceeds the configured limit of " +
                       std::to_string(max_dim));
    dim *= n;
  }

  std::vector<SparseMatrix<T>> gen;
  gen.reserve(static_cast<std::size_t>(strands - 1));
  index_t left = 1;
  for (index_t i = 1; i <= strands - 1; ++i) {
    index_t right = dim / (left * n * n);
    gen.push_back(kron_identity(kron_identity(r, left, KronSide::Left), right, KronSide::Right));
    left *= n;
  }

  mag_t<T> residual = scalar_traits<T>::mag_zero();
  auto consider = [&residual](mag_t<T> v) {
    if (residual < v) residual = v;
  };
  for (std::size_t i = 0; i + 1 < gen.size(); ++i) {
    const auto& gi = gen[i];
    const auto& gj = gen[i + 1];
    consider(max_abs_diff(matmul(matmul(gi, gj, workers), gi, workers),
                          matmul(matmul(gj, gi, workers), gj, workers)));
  }
  for (std::size_t i = 0; i + 2 < gen.size(); ++i) {
    for (std::size_t j = i + 2; j < gen.size(); ++j) {
      consider(max_abs_diff(matmul(gen[i], gen[j], workers), matmul(gen[j], gen[i], workers)));
    }
  }

  VerificationReport<T> rep;
  rep.equation = Equation::BraidRelations;
  rep.n = n;
  rep.dims = dim;
  rep.strands = strands;
  rep.residual = residual;
  rep.tolerance = tol;
  rep.passed = detail::within<T>(rep.residual, tol);
  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace ybx
