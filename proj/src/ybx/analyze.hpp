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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ybx/construct.hpp"
#include "ybx/errors.hpp"
#include "ybx/verify.hpp"

namespace ybx {

// Small dense matrix, row-major, 1-based accessors.  Used for factor
// witnesses and reshaped state vectors.
template <class T>
struct DenseMatrix {
  index_t rows = 0, cols = 0;
  std::vector<T> data;

  static DenseMatrix zero(index_t rows, index_t cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("DenseMatrix: bad shape");
    DenseMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.data.assign(static_cast<std::size_t>(rows * cols), scalar_traits<T>::zero());
    return m;
  }

  T& at(index_t r, index_t c) {
    check(r, c);
    return data[static_cast<std::size_t>((r - 1) * cols + (c - 1))];
  }
  const T& at(index_t r, index_t c) const {
    check(r, c);
    return data[static_cast<std::size_t>((r - 1) * cols + (c - 1))];
  }

private:
  void check(index_t r, index_t c) const {
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw std::out_of_range("DenseMatrix: index out of range");
  }
};

// Tensor product of two square dense matrices as a sparse operator.
template <class T>
SparseMatrix<T> kron(const DenseMatrix<T>& x, const DenseMatrix<T>& y) {
  if (x.rows != x.cols || y.rows != y.cols)
    throw std::invalid_argument("kron: factors must be square");
  const index_t p = x.rows, q = y.rows;
  std::vector<Triplet<T>> e;
  for (index_t i = 1; i <= p; ++i)
    for (index_t k = 1; k <= q; ++k)
      for (index_t j = 1; j <= p; ++j)
        for (index_t l = 1; l <= q; ++l) {
          T v = x.at(i, j) * y.at(k, l);
          if (!scalar_traits<T>::is_zero(v))
            e.push_back({(i - 1) * q + k, (j - 1) * q + l, std::move(v)});
        }
  return SparseMatrix<T>::from_triplets(p * q, std::move(e));
}

template <class T>
struct QuadResiduals {
  index_t t = 0, s = 0;
  std::array<mag_t<T>, 4> r{};
};

template <class T>
struct AxialResiduals {
  index_t t = 0;
  std::array<mag_t<T>, 2> r{};
};

// Residuals of the closed-form conditions equivalent to R R^dagger = I.
// Per quad: r1 = |a ac + b bc + x xc + y yc - 1|, r2 = |x ac + a xc + y bc + b yc|,
// r3 = |x bc + b xc + y ac + a yc|, r4 = |a bc + b ac + x yc + y xc|
// (c marks conjugates).  Per axial pair: |a ac + b bc - 1| and
// |a bc + b ac|.  Center: |x xc - 1|.
template <class T>
struct UnitarityResiduals {
  index_t n = 0;
  std::vector<QuadResiduals<T>> quads;
  std::vector<AxialResiduals<T>> axial;
  std::optional<mag_t<T>> center;

  mag_t<T> max_residual() const {
    mag_t<T> best = scalar_traits<T>::mag_zero();
    auto consider = [&best](const mag_t<T>& v) {
      if (best < v) best = v;
    };
    for (const auto& q : quads)
      for (const auto& v : q.r) consider(v);
    for (const auto& a : axial)
      for (const auto& v : a.r) consider(v);
    if (center) consider(*center);
    return best;
  }

  bool passed(const mag_t<T>& tol) const { return !(tol < max_residual()); }
};

template <class T>
UnitarityResiduals<T> unitarity_residuals(const ParamSet<T>& p) {
  p.validate();
  using traits = scalar_traits<T>;
  const T one = traits::one();
  UnitarityResiduals<T> out;
  out.n = p.n;
  const index_t m = p.m();
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      const Quad<T>& q = p.quad(t, s);
      const T ac = conj_scalar(q.a), bc = conj_scalar(q.b);
      const T xc = conj_scalar(q.x), yc = conj_scalar(q.y);
      QuadResiduals<T> r;
      r.t = t;
      r.s = s;
      r.r[0] = traits::entry_mag(q.a * ac + q.b * bc + q.x * xc + q.y * yc - one);
      r.r[1] = traits::entry_mag(q.x * ac + q.a * xc + q.y * bc + q.b * yc);
      r.r[2] = traits::entry_mag(q.x * bc + q.b * xc + q.y * ac + q.a * yc);
      r.r[3] = traits::entry_mag(q.a * bc + q.b * ac + q.x * yc + q.y * xc);
      out.quads.push_back(std::move(r));
    }
  }
  if (p.n % 2 == 1 && p.n > 1) {
    for (index_t t = 1; t <= m; ++t) {
      const AxialPair<T>& a = p.axial_pair(t);
      const T ac = conj_scalar(a.a), bc = conj_scalar(a.b);
      AxialResiduals<T> r;
      r.t = t;
      r.r[0] = traits::entry_mag(a.a * ac + a.b * bc - one);
      r.r[1] = traits::entry_mag(a.a * bc + a.b * ac);
      out.axial.push_back(std::move(r));
    }
  }
  if (p.center) out.center = traits::entry_mag(*p.center * conj_scalar(*p.center) - one);
  return out;
}

// Draws parameters that satisfy the unitarity residuals by construction.
// Each quad comes from two commuting rotations:
//   u = cos(alpha) e^{i phi},  pp = i sin(alpha) e^{i phi},
//   v = cos(beta)  e^{i psi},  qq = i sin(beta)  e^{i psi},
//   a = (u+v)/2, b = (u-v)/2, x = (pp+qq)/2, y = (pp-qq)/2.
// Axial pairs use a = cos(gamma) e^{i chi}, b = i sin(gamma) e^{i chi};
// the center is a phase.  Draw order matches random_params.
inline ParamSet<std::complex<double>> sample_unitary_params(index_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_unitary_params: n must be positive");
  using Cx = std::complex<double>;
  constexpr double two_pi = 6.283185307179586476925286766559;
  Rng g(seed);
  auto phase = [&g, two_pi] {
    double th = g.uniform(0.0, two_pi);
    return Cx{std::cos(th), std::sin(th)};
  };
  ParamSet<Cx> p;
  p.n = n;
  const index_t m = family_m(n);
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      double alpha = g.uniform(0.0, two_pi);
      Cx eph = phase();
      double beta = g.uniform(0.0, two_pi);
      Cx eps = phase();
      Cx u = std::cos(alpha) * eph;
      Cx pp = Cx{0, 1} * std::sin(alpha) * eph;
      Cx v = std::cos(beta) * eps;
      Cx qq = Cx{0, 1} * std::sin(beta) * eps;
      Quad<Cx> q;
      q.a = (u + v) / 2.0;
      q.b = (u - v) / 2.0;
      q.x = (pp + qq) / 2.0;
      q.y = (pp - qq) / 2.0;
      p.quads.push_back(q);
    }
  }
  if (n % 2 == 1) {
    for (index_t t = 1; t <= m; ++t) {
      double gamma = g.uniform(0.0, two_pi);
      Cx ech = phase();
      AxialPair<Cx> a;
      a.a = std::cos(gamma) * ech;
      a.b = Cx{0, 1} * std::sin(gamma) * ech;
      p.axial.push_back(a);
    }
    p.center = phase();
  }
  return p;
}

namespace detail {

inline Rational mag2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
inline double mag2(const std::complex<double>& z) { return std::norm(z); }

}  // namespace detail

// Witness for M = x (x) y.  The pivot entry of x is normalized to 1.
// degenerate marks the zero matrix, which factors trivially.
template <class T>
struct FactorWitness {
  DenseMatrix<T> x, y;
  bool degenerate = false;
};

// Decides whether the n^2 x n^2 operator M splits as x (x) y and, if so,
// produces the factors.  Works on the reshuffled matrix
// T[(i-1)n+j, (k-1)n+l] = M[(i-1)n+k, (j-1)n+l], which is rank one exactly
// when M splits; rank one is tested through the 2x2 minors that contain a
// maximal-magnitude pivot.  Float minors count as zero when
// |minor| <= tol * |pivot|^2.
template <class T>
std::optional<FactorWitness<T>> tensor_factor(const SparseMatrix<T>& m, index_t n,
                                              mag_t<T> tol = scalar_traits<T>::default_tolerance()) {
  if (n < 1) throw std::invalid_argument("tensor_factor: n must be positive");
  if (m.dim() != n * n) throw std::invalid_argument("tensor_factor: operator dim must be n^2");
  detail::require_valid_tol<T>(tol);
  using traits = scalar_traits<T>;

  std::vector<Triplet<T>> shuffled;
  shuffled.reserve(m.entries().size());
  for (const auto& e : m.entries()) {
    const index_t i = (e.row - 1) / n + 1, k = (e.row - 1) % n + 1;
    const index_t j = (e.col - 1) / n + 1, l = (e.col - 1) % n + 1;
    shuffled.push_back({(i - 1) * n + j, (k - 1) * n + l, e.value});
  }
  const auto t = SparseMatrix<T>::from_triplets(n * n, std::move(shuffled));

  FactorWitness<T> w{DenseMatrix<T>::zero(n, n), DenseMatrix<T>::zero(n, n), false};
  if (t.nnz() == 0) {
    w.degenerate = true;
    return w;
  }

  const Triplet<T>* piv = nullptr;
  auto best = detail::mag2(traits::zero());
  for (const auto& e : t.entries()) {
    auto v = detail::mag2(e.value);
    if (piv == nullptr || best < v) {
      piv = &e;
      best = v;
    }
  }

  auto minor_zero = [&](const T& minor) {
    if constexpr (traits::is_exact) {
      return traits::is_zero(minor);
    } else {
      return std::abs(minor) <= tol * best;
    }
  };

  std::vector<std::pair<index_t, T>> xsup, ysup;
  for (const auto& e : t.entries())
    if (e.col == piv->col) xsup.emplace_back(e.row, e.value);
  for (const auto& e : t.row(piv->row)) ysup.emplace_back(e.col, e.value);

  for (const auto& e : t.entries()) {
    const T minor = e.value * piv->value - t.at(e.row, piv->col) * t.at(piv->row, e.col);
    if (!minor_zero(minor)) return std::nullopt;
  }
  for (const auto& [r, xv] : xsup) {
    for (const auto& [c, yv] : ysup) {
      if (!traits::is_zero(t.at(r, c))) continue;  // covered by the entry pass
      const T minor = -(xv * yv);
      if (!minor_zero(minor)) return std::nullopt;
    }
  }

  for (const auto& [r, xv] : xsup) w.x.at((r - 1) / n + 1, (r - 1) % n + 1) = xv / piv->value;
  for (const auto& [c, yv] : ysup) w.y.at((c - 1) / n + 1, (c - 1) % n + 1) = yv;
  return w;
}

// Number of nonzero coefficients in the two-factor decomposition of a
// state on C^n (x) C^n: the rank of the n x n reshape W[i, j] = v[(i-1)n+j].
// Exact states use elimination rank; float states count singular values
// above tol times the largest.
template <class T>
index_t schmidt_rank(const StateVector<T>& v, index_t n,
                     mag_t<T> tol = scalar_traits<T>::default_tolerance()) {
  if (n < 1) throw std::invalid_argument("schmidt_rank: n must be positive");
  if (v.dim != n * n) throw std::invalid_argument("schmidt_rank: state dim must be n^2");
  if (v.is_zero()) throw std::invalid_argument("schmidt_rank: zero state");
  detail::require_valid_tol<T>(tol);

  if constexpr (scalar_traits<T>::is_exact) {
    DenseMatrix<T> w = DenseMatrix<T>::zero(n, n);
    for (index_t i = 1; i <= n; ++i)
      for (index_t j = 1; j <= n; ++j) w.at(i, j) = v.at((i - 1) * n + j);
    index_t rank = 0;
    index_t prow = 1;
    for (index_t col = 1; col <= n && prow <= n; ++col) {
      index_t sel = 0;
      for (index_t r = prow; r <= n; ++r) {
        if (!scalar_traits<T>::is_zero(w.at(r, col))) {
          sel = r;
          break;
        }
      }
      if (sel == 0) continue;
      if (sel != prow)
        for (index_t c = col; c <= n; ++c) std::swap(w.at(sel, c), w.at(prow, c));
      for (index_t r = prow + 1; r <= n; ++r) {
        if (scalar_traits<T>::is_zero(w.at(r, col))) continue;
        const T f = w.at(r, col) / w.at(prow, col);
        for (index_t c = col; c <= n; ++c) w.at(r, c) = w.at(r, c) - f * w.at(prow, c);
      }
      ++rank;
      ++prow;
    }
    return rank;
  } else {
    Eigen::MatrixXcd w(n, n);
    for (index_t i = 1; i <= n; ++i)
      for (index_t j = 1; j <= n; ++j)
        w(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
            v.at((i - 1) * n + j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol * sv(0);
    index_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    return rank;
  }
}

template <class T>
struct EntanglingReport {
  index_t n = 0;
  bool entangling = false;
  std::optional<FactorWitness<T>> factor_of_r;   // set when R itself splits
  std::optional<FactorWitness<T>> factor_of_rs;  // set when R o digit-swap splits
  std::optional<StateVector<T>> witness_state;   // product state with entangled image
  index_t witness_schmidt_rank = 0;
  double elapsed_ms = 0;
};

// Decides whether the gate R built from p is entangling: it is exactly
// when neither R nor R composed with the digit swap splits as a tensor
// product.  Callers must supply parameters passing the unitarity
// residuals (the criterion presumes an invertible gate); set
// assume_invertible to skip that guard.  When the gate is entangling, a
// product state whose image has Schmidt rank >= 2 is searched for: first
// the n^2 basis product states, then seeded random product states.
template <class T>
EntanglingReport<T> entangling_check(const ParamSet<T>& p,
                                     mag_t<T> tol = scalar_traits<T>::default_tolerance(),
                                     index_t witness_trials = 64, std::uint64_t seed = 0,
                                     bool assume_invertible = false) {
  detail::StopWatch clock;
  p.validate();
  detail::require_valid_tol<T>(tol);
  if (!assume_invertible) {
    const auto u = unitarity_residuals(p);
    if (!u.passed(tol))
      throw NotInvertibleError(
          "entangling_check: parameters fail the unitarity residuals; "
          "set assume_invertible to analyze anyway");
  }

  const index_t n = p.n;
  const SparseMatrix<T> r = build_r(p);
  const SparseMatrix<T> rs = matmul(r, build_s<T>(n));

  EntanglingReport<T> rep;
  rep.n = n;
  rep.factor_of_r = tensor_factor(r, n, tol);
  rep.factor_of_rs = tensor_factor(rs, n, tol);
  rep.entangling = !rep.factor_of_r.has_value() && !rep.factor_of_rs.has_value();

  if (rep.entangling) {
    auto try_state = [&](const StateVector<T>& st) {
      const StateVector<T> img = apply(r, st);
      if (img.is_zero()) return false;
      const index_t rank = schmidt_rank(img, n, tol);
      if (rank < 2) return false;
      rep.witness_state = st;
      rep.witness_schmidt_rank = rank;
      return true;
    };
    bool found = false;
    for (index_t i = 1; i <= n && !found; ++i)
      for (index_t j = 1; j <= n && !found; ++j)
        found = try_state(tensor(StateVector<T>::basis(n, i), StateVector<T>::basis(n, j)));
    Rng g(seed);
    for (index_t trial = 0; trial < witness_trials && !found; ++trial) {
      StateVector<T> u = StateVector<T>::zero(n), v = StateVector<T>::zero(n);
      for (index_t i = 1; i <= n; ++i) u.at(i) = detail::param_sampler<T>::draw(g);
      for (index_t i = 1; i <= n; ++i) v.at(i) = detail::param_sampler<T>::draw(g);
      if (u.is_zero() || v.is_zero()) continue;
      found = try_state(tensor(u, v));
    }
  }

  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace ybx
