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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ybx/rng.hpp"
#include "ybx/scalar.hpp"
#include "ybx/sparse.hpp"

namespace ybx {

// Number of independent 4-parameter families for side length n.
inline index_t family_m(index_t n) {
  if (n < 1) throw std::invalid_argument("family_m: n must be positive");
  return n / 2;  // floor(n/2) covers both parities
}

// The four primary positions of family (t, s) inside the n^2 grid, plus
// their mirrored companions under x -> n^2 + 1 - x.
struct IndexQuadruple {
  index_t t = 0, s = 0;
  index_t i = 0, j = 0, k = 0, l = 0;
  index_t it = 0, jt = 0, kt = 0, lt = 0;
};

inline IndexQuadruple index_quadruple(index_t n, index_t t, index_t s) {
  if (n < 2) throw std::invalid_argument("index_quadruple: n must be at least 2");
  const index_t m = family_m(n);
  if (t < 1 || t > m || s < 1 || s > m)
    throw std::out_of_range("index_quadruple: (t, s) out of range");
  const index_t nn = n * n;
  IndexQuadruple q;
  q.t = t;
  q.s = s;
  q.i = (t - 1) * n + s;
  q.j = (s - 1) * n + t;
  q.k = (t - 1) * n + (n - s + 1);
  q.l = (n - s) * n + t;
  q.it = nn + 1 - q.i;
  q.jt = nn + 1 - q.j;
  q.kt = nn + 1 - q.k;
  q.lt = nn + 1 - q.l;
  return q;
}

// Positions of the 2-parameter families on the middle band, odd n only.
struct AxialIndices {
  index_t t = 0;
  index_t i = 0, j = 0;
  index_t it = 0, jt = 0;
};

inline AxialIndices axial_indices(index_t n, index_t t) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("axial_indices: n must be odd and at least 3");
  const index_t m = family_m(n);
  if (t < 1 || t > m) throw std::out_of_range("axial_indices: t out of range");
  const index_t nn = n * n;
  AxialIndices a;
  a.t = t;
  a.i = (t - 1) * n + (n + 1) / 2;
  a.j = ((n - 1) / 2) * n + t;
  a.it = nn + 1 - a.i;
  a.jt = nn + 1 - a.j;
  return a;
}

template <class T>
struct Quad {
  T a, b, x, y;
};

template <class T>
struct AxialPair {
  T a, b;
};

// Full parameter grid for one side length n: m^2 quads (row-major in
// (t, s)), and for odd n additionally m axial pairs and a center value.
template <class T>
struct ParamSet {
  using scalar_type = T;

  index_t n = 0;
  std::vector<Quad<T>> quads;
  std::vector<AxialPair<T>> axial;
  std::optional<T> center;

  static constexpr Backend backend = scalar_traits<T>::backend;

  index_t m() const { return family_m(n); }

  const Quad<T>& quad(index_t t, index_t s) const {
    check_key(t, s);
    return quads[static_cast<std::size_t>((t - 1) * m() + (s - 1))];
  }
  Quad<T>& quad(index_t t, index_t s) {
    check_key(t, s);
    return quads[static_cast<std::size_t>((t - 1) * m() + (s - 1))];
  }
  const AxialPair<T>& axial_pair(index_t t) const {
    if (n % 2 == 0 || t < 1 || t > m()) throw std::out_of_range("ParamSet: axial t out of range");
    return axial[static_cast<std::size_t>(t - 1)];
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("ParamSet: n must be positive");
    const index_t mm = family_m(n);
    if (static_cast<index_t>(quads.size()) != mm * mm)
      throw std::invalid_argument("ParamSet: expected " + std::to_string(mm * mm) + " quads");
    if (n % 2 == 0) {
      if (!axial.empty()) throw std::invalid_argument("ParamSet: axial families require odd n");
      if (center.has_value()) throw std::invalid_argument("ParamSet: center requires odd n");
    } else {
      if (static_cast<index_t>(axial.size()) != mm)
        throw std::invalid_argument("ParamSet: expected " + std::to_string(mm) + " axial pairs");
      if (!center.has_value()) throw std::invalid_argument("ParamSet: center required for odd n");
    }
  }

private:
  void check_key(index_t t, index_t s) const {
    if (t < 1 || t > m() || s < 1 || s > m())
      throw std::out_of_range("ParamSet: quad (t, s) out of range");
  }
};

// Permutation that swaps the two n-ary digits of the index: row (t-1)n+s
// maps to column (s-1)n+t.  Involution.
template <class T>
SparseMatrix<T> build_s(index_t n) {
  if (n < 1) throw std::invalid_argument("build_s: n must be positive");
  std::vector<Triplet<T>> e;
  e.reserve(static_cast<std::size_t>(n * n));
  for (index_t t = 1; t <= n; ++t)
    for (index_t s = 1; s <= n; ++s)
      e.push_back({(t - 1) * n + s, (s - 1) * n + t, scalar_traits<T>::one()});
  return SparseMatrix<T>::from_sorted(n * n, std::move(e));
}

namespace detail {

// The placement rules must never write one position twice; a collision
// here means the index algebra is broken, not the caller's input.
inline void require_distinct_positions(std::vector<std::pair<index_t, index_t>> pos) {
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw std::logic_error("construct: placement rules collided on a position");
}

}  // namespace detail

// The parametric solution family: a sparse n^2 x n^2 operator with at most
// 16 entries per quad, 8 per axial family, and one center entry.
template <class T>
SparseMatrix<T> build_r(const ParamSet<T>& p) {
  p.validate();
  const index_t n = p.n;
  const index_t nn = n * n;
  std::vector<Triplet<T>> e;
  std::vector<std::pair<index_t, index_t>> pos;
  auto put = [&](index_t r, index_t c, const T& v) {
    pos.emplace_back(r, c);
    e.push_back({r, c, v});
  };
  if (n == 1) {
    put(1, 1, *p.center);
    return SparseMatrix<T>::from_triplets(1, std::move(e));
  }
  const index_t m = p.m();
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      const IndexQuadruple q = index_quadruple(n, t, s);
      const Quad<T>& Q = p.quad(t, s);
      put(q.i, q.j, Q.a);
      put(q.k, q.l, Q.a);
      put(q.kt, q.lt, Q.a);
      put(q.it, q.jt, Q.a);
      put(q.i, q.jt, Q.b);
      put(q.k, q.lt, Q.b);
      put(q.kt, q.l, Q.b);
      put(q.it, q.j, Q.b);
      put(q.i, q.lt, Q.x);
      put(q.k, q.jt, Q.x);
      put(q.kt, q.j, Q.x);
      put(q.it, q.l, Q.x);
      put(q.i, q.l, Q.y);
      put(q.k, q.j, Q.y);
      put(q.kt, q.jt, Q.y);
      put(q.it, q.lt, Q.y);
    }
  }
  if (n % 2 == 1) {
    for (index_t t = 1; t <= m; ++t) {
      const AxialIndices ax = axial_indices(n, t);
      const AxialPair<T>& A = p.axial_pair(t);
      put(ax.i, ax.j, A.a);
      put(ax.j, ax.i, A.a);
      put(ax.jt, ax.it, A.a);
      put(ax.it, ax.jt, A.a);
      put(ax.i, ax.jt, A.b);
      put(ax.j, ax.it, A.b);
      put(ax.jt, ax.i, A.b);
      put(ax.it, ax.j, A.b);
    }
    const index_t mid = (nn + 1) / 2;
    put(mid, mid, *p.center);
  }
  detail::require_distinct_positions(std::move(pos));
  return SparseMatrix<T>::from_triplets(nn, std::move(e));
}

enum class RhatMethod { Product, Direct };

// Companion operator: Product composes build_r with the digit swap;
// Direct places the same values straight onto their final positions.
// The two routes must agree entry-for-entry.
template <class T>
SparseMatrix<T> build_rhat(const ParamSet<T>& p, RhatMethod method) {
  p.validate();
  if (method == RhatMethod::Product) return matmul(build_r(p), build_s<T>(p.n));
  const index_t n = p.n;
  const index_t nn = n * n;
  std::vector<Triplet<T>> e;
  std::vector<std::pair<index_t, index_t>> pos;
  auto put = [&](index_t r, index_t c, const T& v) {
    pos.emplace_back(r, c);
    e.push_back({r, c, v});
  };
  if (n == 1) {
    put(1, 1, *p.center);
    return SparseMatrix<T>::from_triplets(1, std::move(e));
  }
  const index_t m = p.m();
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      const IndexQuadruple q = index_quadruple(n, t, s);
      const Quad<T>& Q = p.quad(t, s);
      put(q.i, q.i, Q.a);
      put(q.k, q.k, Q.a);
      put(q.kt, q.kt, Q.a);
      put(q.it, q.it, Q.a);
      put(q.i, q.it, Q.b);
      put(q.k, q.kt, Q.b);
      put(q.kt, q.k, Q.b);
      put(q.it, q.i, Q.b);
      put(q.i, q.kt, Q.x);
      put(q.k, q.it, Q.x);
      put(q.kt, q.i, Q.x);
      put(q.it, q.k, Q.x);
      put(q.i, q.k, Q.y);
      put(q.k, q.i, Q.y);
      put(q.kt, q.it, Q.y);
      put(q.it, q.kt, Q.y);
    }
  }
  if (n % 2 == 1) {
    for (index_t t = 1; t <= m; ++t) {
      const AxialIndices ax = axial_indices(n, t);
      const AxialPair<T>& A = p.axial_pair(t);
      put(ax.i, ax.i, A.a);
      put(ax.j, ax.j, A.a);
      put(ax.jt, ax.jt, A.a);
      put(ax.it, ax.it, A.a);
      put(ax.i, ax.it, A.b);
      put(ax.j, ax.jt, A.b);
      put(ax.jt, ax.j, A.b);
      put(ax.it, ax.i, A.b);
    }
    const index_t mid = (nn + 1) / 2;
    put(mid, mid, *p.center);
  }
  detail::require_distinct_positions(std::move(pos));
  return SparseMatrix<T>::from_triplets(nn, std::move(e));
}

namespace detail {

template <class T>
struct param_sampler;

template <>
struct param_sampler<GaussianRational> {
  static GaussianRational draw(Rng& g) { return g.gaussian_rational(); }
};

template <>
struct param_sampler<std::complex<double>> {
  static std::complex<double> draw(Rng& g) { return g.complex_box(); }
};

}  // namespace detail

// Deterministic parameter grid for (n, seed).  Draw order is fixed: quads
// in row-major (t, s) order with components a, b, x, y, then axial pairs
// (a, b), then the center.  Exact scalars use single-digit numerators and
// denominators; float scalars are uniform in the unit box.
template <class T>
ParamSet<T> random_params(index_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_params: n must be positive");
  Rng g(seed);
  ParamSet<T> p;
  p.n = n;
  const index_t m = family_m(n);
  p.quads.reserve(static_cast<std::size_t>(m * m));
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      Quad<T> q;
      q.a = detail::param_sampler<T>::draw(g);
      q.b = detail::param_sampler<T>::draw(g);
      q.x = detail::param_sampler<T>::draw(g);
      q.y = detail::param_sampler<T>::draw(g);
      p.quads.push_back(std::move(q));
    }
  }
  if (n % 2 == 1) {
    p.axial.reserve(static_cast<std::size_t>(m));
    for (index_t t = 1; t <= m; ++t) {
      AxialPair<T> a;
      a.a = detail::param_sampler<T>::draw(g);
      a.b = detail::param_sampler<T>::draw(g);
      p.axial.push_back(std::move(a));
    }
    p.center = detail::param_sampler<T>::draw(g);
  }
  return p;
}

}  // namespace ybx
