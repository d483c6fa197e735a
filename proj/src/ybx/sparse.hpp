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

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

using index_t = std::int64_t;

template <class T>
struct Triplet {
  index_t row;
  index_t col;
  T value;

  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.row == b.row && a.col == b.col && a.value == b.value;
  }
};

// Square sparse matrix with 1-based indices.  Immutable after construction;
// entries are sorted by (row, col), hold no duplicates and no explicit
// zeros.  A CSR-style row index supports row iteration.
template <class T>
class SparseMatrix {
public:
  using scalar_type = T;

  SparseMatrix() : dim_(0) {}

  static SparseMatrix identity(index_t dim) {
    require_dim(dim);
    std::vector<Triplet<T>> e;
    e.reserve(static_cast<std::size_t>(dim));
    for (index_t i = 1; i <= dim; ++i) e.push_back({i, i, scalar_traits<T>::one()});
    return from_sorted(dim, std::move(e));
  }

  // Sorts, merges duplicate positions by summation, drops zero values.
  // Entries with mag <= drop_tol are also dropped (float cleanup knob).
  static SparseMatrix from_triplets(index_t dim, std::vector<Triplet<T>> entries,
                                    mag_t<T> drop_tol = scalar_traits<T>::mag_zero()) {
    require_dim(dim);
    for (const auto& e : entries) {
      if (e.row < 1 || e.row > dim || e.col < 1 || e.col > dim)
        throw std::out_of_range("SparseMatrix: entry position out of range");
    }
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Triplet<T>> merged;
    merged.reserve(entries.size());
    std::size_t i = 0;
    while (i < entries.size()) {
      index_t r = entries[i].row, c = entries[i].col;
      T sum = entries[i].value;
      for (++i; i < entries.size() && entries[i].row == r && entries[i].col == c; ++i)
        sum += entries[i].value;
      if (scalar_traits<T>::is_zero(sum)) continue;
      if (!(drop_tol == scalar_traits<T>::mag_zero()) && !(scalar_traits<T>::entry_mag(sum) > drop_tol))
        continue;
      merged.push_back({r, c, std::move(sum)});
    }
    return from_sorted(dim, std::move(merged));
  }

  // Fast path for entry lists that are already strictly sorted by
  // (row, col) and free of zeros; validated in one pass.
  static SparseMatrix from_sorted(index_t dim, std::vector<Triplet<T>> entries) {
    require_dim(dim);
    SparseMatrix m;
    m.dim_ = dim;
    m.entries_ = std::move(entries);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) {
      const auto& e = m.entries_[i];
      if (e.row < 1 || e.row > dim || e.col < 1 || e.col > dim)
        throw std::out_of_range("SparseMatrix: entry position out of range");
      if (i > 0) {
        const auto& p = m.entries_[i - 1];
        if (p.row > e.row || (p.row == e.row && p.col >= e.col))
          throw std::logic_error("SparseMatrix: entries not strictly sorted");
      }
      if (scalar_traits<T>::is_zero(e.value))
        throw std::logic_error("SparseMatrix: explicit zero entry");
    }
    m.build_row_index();
    return m;
  }

  index_t dim() const { return dim_; }
  index_t nnz() const { return static_cast<index_t>(entries_.size()); }
  const std::vector<Triplet<T>>& entries() const { return entries_; }

  std::span<const Triplet<T>> row(index_t r) const {
    if (r < 1 || r > dim_) throw std::out_of_range("SparseMatrix: row out of range");
    auto lo = static_cast<std::size_t>(row_start_[static_cast<std::size_t>(r - 1)]);
    auto hi = static_cast<std::size_t>(row_start_[static_cast<std::size_t>(r)]);
    return {entries_.data() + lo, hi - lo};
  }

  // Zero when the position holds no entry.
  T at(index_t r, index_t c) const {
    for (const auto& e : row(r)) {
      if (e.col == c) return e.value;
      if (e.col > c) break;
    }
    return scalar_traits<T>::zero();
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  static void require_dim(index_t dim) {
    if (dim < 1) throw std::invalid_argument("SparseMatrix: dim must be positive");
  }

  void build_row_index() {
    row_start_.assign(static_cast<std::size_t>(dim_) + 1, 0);
    for (const auto& e : entries_) row_start_[static_cast<std::size_t>(e.row)]++;
    for (index_t r = 1; r <= dim_; ++r)
      row_start_[static_cast<std::size_t>(r)] += row_start_[static_cast<std::size_t>(r - 1)];
  }

  index_t dim_;
  std::vector<Triplet<T>> entries_;
  std::vector<index_t> row_start_;
};

namespace detail {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hc, 1u, 4u));
}

// Gathered products for one output row, summed in a fixed order:
// contributions arrive ordered by the inner index k (A's row is sorted by
// column), and the stable sort keys only on the output column, so the sum
// for every cell is evaluated in k order no matter how rows are
// partitioned across workers.
template <class T>
void matmul_row(const SparseMatrix<T>& a, const SparseMatrix<T>& b, index_t r,
                std::vector<std::pair<index_t, T>>& scratch, std::vector<Triplet<T>>& out) {
  scratch.clear();
  for (const auto& ea : a.row(r)) {
    for (const auto& eb : b.row(ea.col)) {
      T prod = ea.value * eb.value;
      scratch.emplace_back(eb.col, std::move(prod));
    }
  }
  std::stable_sort(scratch.begin(), scratch.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t i = 0;
  while (i < scratch.size()) {
    index_t c = scratch[i].first;
    T sum = std::move(scratch[i].second);
    for (++i; i < scratch.size() && scratch[i].first == c; ++i) sum += scratch[i].second;
    if (!scalar_traits<T>::is_zero(sum)) out.push_back({r, c, std::move(sum)});
  }
}

}  // namespace detail

// C = A * B.  Deterministic for any worker count: each output row is
// produced independently and cancellation zeros are dropped.
template <class T>
SparseMatrix<T> matmul(const SparseMatrix<T>& a, const SparseMatrix<T>& b, int workers = 0) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const index_t dim = a.dim();
  int nw = detail::resolve_workers(workers);
  if (dim < 512) nw = 1;

  if (nw <= 1) {
    std::vector<Triplet<T>> out;
    std::vector<std::pair<index_t, T>> scratch;
    for (index_t r = 1; r <= dim; ++r) detail::matmul_row(a, b, r, scratch, out);
    return SparseMatrix<T>::from_sorted(dim, std::move(out));
  }

  const index_t chunk = (dim + nw - 1) / nw;
  std::vector<std::vector<Triplet<T>>> parts(static_cast<std::size_t>(nw));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(nw));
  for (int w = 0; w < nw; ++w) {
    threads.emplace_back([&, w] {
      const index_t lo = 1 + chunk * w;
      const index_t hi = std::min(dim, chunk * (w + 1));
      std::vector<std::pair<index_t, T>> scratch;
      for (index_t r = lo; r <= hi; ++r)
        detail::matmul_row(a, b, r, scratch, parts[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : threads) t.join();

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Triplet<T>> out;
  out.reserve(total);
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return SparseMatrix<T>::from_sorted(dim, std::move(out));
}

enum class KronSide { Left, Right };

// Left:  I_k (x) M, block-diagonal copies of M.
// Right: M (x) I_k, entry (v, w) spread over offsets r = 1..k as
//        (k(v-1)+r, k(w-1)+r).
template <class T>
SparseMatrix<T> kron_identity(const SparseMatrix<T>& m, index_t k, KronSide side) {
  if (k < 1) throw std::invalid_argument("kron_identity: k must be positive");
  const index_t dim = m.dim() * k;
  std::vector<Triplet<T>> out;
  out.reserve(static_cast<std::size_t>(m.nnz() * k));
  if (side == KronSide::Left) {
    for (index_t r = 0; r < k; ++r) {
      const index_t off = m.dim() * r;
      for (const auto& e : m.entries()) out.push_back({e.row + off, e.col + off, e.value});
    }
  } else {
    const auto& es = m.entries();
    std::size_t i = 0;
    while (i < es.size()) {
      std::size_t j = i;
      while (j < es.size() && es[j].row == es[i].row) ++j;
      const index_t v = es[i].row;
      for (index_t r = 1; r <= k; ++r) {
        for (std::size_t q = i; q < j; ++q)
          out.push_back({k * (v - 1) + r, k * (es[q].col - 1) + r, es[q].value});
      }
      i = j;
    }
  }
  return SparseMatrix<T>::from_sorted(dim, std::move(out));
}

// Conjugate transpose.
template <class T>
SparseMatrix<T> dagger(const SparseMatrix<T>& m) {
  std::vector<Triplet<T>> out;
  out.reserve(static_cast<std::size_t>(m.nnz()));
  for (const auto& e : m.entries()) out.push_back({e.col, e.row, conj_scalar(e.value)});
  return SparseMatrix<T>::from_triplets(m.dim(), std::move(out));
}

template <class T>
SparseMatrix<T> scale(const SparseMatrix<T>& m, const T& s) {
  std::vector<Triplet<T>> out;
  out.reserve(static_cast<std::size_t>(m.nnz()));
  for (const auto& e : m.entries()) {
    T v = e.value * s;
    if (!scalar_traits<T>::is_zero(v)) out.push_back({e.row, e.col, std::move(v)});
  }
  return SparseMatrix<T>::from_sorted(m.dim(), std::move(out));
}

// max over positions of the entry magnitude of A - B.
template <class T>
mag_t<T> max_abs_diff(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  using traits = scalar_traits<T>;
  mag_t<T> best = traits::mag_zero();
  auto consider = [&best](mag_t<T> v) {
    if (best < v) best = v;
  };
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  auto pos_less = [](const Triplet<T>& x, const Triplet<T>& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && pos_less(ea[i], eb[j]))) {
      consider(traits::entry_mag(ea[i].value));
      ++i;
    } else if (i == ea.size() || pos_less(eb[j], ea[i])) {
      consider(traits::entry_mag(eb[j].value));
      ++j;
    } else {
      consider(traits::entry_mag(ea[i].value - eb[j].value));
      ++i;
      ++j;
    }
  }
  return best;
}

// Dense column vector with 1-based component access.
template <class T>
struct StateVector {
  index_t dim = 0;
  std::vector<T> comp;

  static StateVector zero(index_t dim) {
    if (dim < 1) throw std::invalid_argument("StateVector: dim must be positive");
    StateVector v;
    v.dim = dim;
    v.comp.assign(static_cast<std::size_t>(dim), scalar_traits<T>::zero());
    return v;
  }

  static StateVector basis(index_t dim, index_t i) {
    StateVector v = zero(dim);
    v.at(i) = scalar_traits<T>::one();
    return v;
  }

  T& at(index_t i) {
    if (i < 1 || i > dim) throw std::out_of_range("StateVector: index out of range");
    return comp[static_cast<std::size_t>(i - 1)];
  }
  const T& at(index_t i) const {
    if (i < 1 || i > dim) throw std::out_of_range("StateVector: index out of range");
    return comp[static_cast<std::size_t>(i - 1)];
  }

  bool is_zero() const {
    for (const auto& c : comp)
      if (!scalar_traits<T>::is_zero(c)) return false;
    return true;
  }
};

// Product state u (x) v, component (i-1)*v.dim + j = u_i * v_j.
template <class T>
StateVector<T> tensor(const StateVector<T>& u, const StateVector<T>& v) {
  StateVector<T> out = StateVector<T>::zero(u.dim * v.dim);
  for (index_t i = 1; i <= u.dim; ++i)
    for (index_t j = 1; j <= v.dim; ++j) out.at((i - 1) * v.dim + j) = u.at(i) * v.at(j);
  return out;
}

template <class T>
StateVector<T> apply(const SparseMatrix<T>& m, const StateVector<T>& v) {
  if (m.dim() != v.dim) throw std::invalid_argument("apply: dimension mismatch");
  StateVector<T> out = StateVector<T>::zero(v.dim);
  for (const auto& e : m.entries()) out.at(e.row) += e.value * v.at(e.col);
  return out;
}

}  // namespace ybx
