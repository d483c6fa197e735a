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

// Acceptance gate.  Each numbered criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero when any criterion fails.  Tolerances and time
// budgets are pinned here, not configurable.

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/goldens.hpp"
#include "support/oracles.hpp"
#include "ybx/analyze.hpp"
#include "ybx/construct.hpp"
#include "ybx/sparse.hpp"
#include "ybx/verify.hpp"

using namespace ybx;
using ybx::testing::LabelGrid;
using Cx = std::complex<double>;
using GR = GaussianRational;

namespace {

const Rational kZero(0);

// pinned tolerances
constexpr double kFloatEquationTol = 1e-12;   // float residuals, criteria 9 and 10
constexpr double kSamplerResidualTol = 1e-14; // closed-form residuals, criterion 6
constexpr double kSamplerProductTol = 1e-12;  // product-vs-identity gap, criterion 6
constexpr double kWitnessTol = 1e-12;         // float factor reconstruction, criterion 7

std::string fmt(double v) {
  std::ostringstream os;
  os << std::scientific << v;
  return os.str();
}

std::string fmt(const Rational& v) { return fmt(v.to_double()); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> faults;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (faults.size() < 12)
      faults.push_back(what);
    else if (faults.size() == 12)
      faults.push_back("(further failures suppressed)");
  }
};

bool run_criterion(int id, const char* name, double budget_s, void (*body)(Outcome&)) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("unhandled exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0)
    out.expect(secs < budget_s,
               "took " + fmt(secs) + " s, budget " + fmt(budget_s) + " s");
  char line[160];
  std::snprintf(line, sizeof(line), "[%s] %2d %s (%.2f s)", out.ok ? "PASS" : "FAIL", id, name,
                secs);
  std::cout << line << "\n";
  for (const auto& f : out.faults) std::cout << "        - " << f << "\n";
  return out.ok;
}

std::string at(index_t r, index_t c) {
  return "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
}

// Random exact parameters with every component forced nonzero, so entry
// counts reach their maxima.
ParamSet<GR> fully_nonzero_params(index_t n, std::uint64_t seed) {
  ParamSet<GR> p = random_params<GR>(n, seed);
  Rng g(seed ^ 0xD1CEBA5Eull);
  auto fix = [&g](GR& v) {
    while (scalar_traits<GR>::is_zero(v)) v = g.gaussian_rational();
  };
  for (auto& q : p.quads) {
    fix(q.a);
    fix(q.b);
    fix(q.x);
    fix(q.y);
  }
  for (auto& a : p.axial) {
    fix(a.a);
    fix(a.b);
  }
  if (p.center) fix(*p.center);
  return p;
}

void check_layout(Outcome& out, const std::string& what, const SparseMatrix<GR>& m,
                  const LabelGrid& grid, const ParamSet<GR>& p) {
  if (m.dim() != static_cast<index_t>(grid.size())) {
    out.expect(false, what + ": dimension " + std::to_string(m.dim()));
    return;
  }
  long bad = 0;
  std::string first;
  for (index_t r = 1; r <= m.dim(); ++r) {
    for (index_t c = 1; c <= m.dim(); ++c) {
      const char* label = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
      const GR want = *label ? ybx::testing::sentinel_value(p, label) : GR{};
      if (!(m.at(r, c) == want)) {
        if (bad == 0) first = at(r, c) + " label '" + std::string(label) + "'";
        ++bad;
      }
    }
  }
  out.expect(bad == 0, what + ": " + std::to_string(bad) + " cells differ, first at " + first);
}

/* 1: sentinel-valued operators reproduce the reference layouts. */
void golden_layouts(Outcome& out) {
  for (index_t n : {2, 3, 4}) {
    const auto p = ybx::testing::sentinel_params<GR>(n);
    const std::string tag = "n=" + std::to_string(n);
    check_layout(out, "operator " + tag, build_r(p), ybx::testing::golden_r_grid(n), p);
    check_layout(out, "companion/direct " + tag, build_rhat(p, RhatMethod::Direct),
                 ybx::testing::golden_rhat_grid(n), p);
    check_layout(out, "companion/product " + tag, build_rhat(p, RhatMethod::Product),
                 ybx::testing::golden_rhat_grid(n), p);
    const auto s = build_s<GR>(n);
    out.expect(s.nnz() == n * n, "swap " + tag + ": nnz " + std::to_string(s.nnz()));
    for (auto [r, c] : ybx::testing::golden_s_ones(n))
      out.expect(s.at(r, c) == GR{Rational(1)}, "swap " + tag + ": missing one at " + at(r, c));
  }
}

/* 2: entry counts match 4n^2 (even) and 4n(n-1)+1 (odd). */
void entry_counts(Outcome& out) {
  for (index_t n = 2; n <= 12; ++n) {
    const auto p = fully_nonzero_params(n, 20000 + static_cast<std::uint64_t>(n));
    const index_t want = n % 2 == 0 ? 4 * n * n : 4 * n * (n - 1) + 1;
    const auto tag = "n=" + std::to_string(n) + " expected " + std::to_string(want);
    out.expect(build_r(p).nnz() == want, "operator " + tag);
    out.expect(build_rhat(p, RhatMethod::Direct).nnz() == want, "companion/direct " + tag);
    out.expect(build_rhat(p, RhatMethod::Product).nnz() == want, "companion/product " + tag);
  }
}

/* 3: both equations hold identically over 140 exact parameter draws. */
void exact_equations(Outcome& out) {
  int checked = 0;
  for (index_t n = 2; n <= 8; ++n) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000 + k;
      const auto p = random_params<GR>(n, seed);
      const auto tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      const auto braid = braid_residual(build_r(p), n, kZero);
      out.expect(braid.passed && braid.residual == kZero, "braid residual nonzero at " + tag);
      const auto quantum = quantum_residual(build_rhat(p, RhatMethod::Direct), n, kZero);
      out.expect(quantum.passed && quantum.residual == kZero,
                 "quantum residual nonzero at " + tag);
      ++checked;
    }
  }
  out.expect(checked == 140, "expected 140 parameter draws");
}

/* 4: companion routes agree on 160 draws; layered rebuild matches. */
void route_agreement(Outcome& out) {
  int agreed = 0;
  for (index_t n = 2; n <= 9; ++n) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000 + k;
      const auto p = random_params<GR>(n, seed);
      if (build_rhat(p, RhatMethod::Product) == build_rhat(p, RhatMethod::Direct))
        ++agreed;
      else
        out.expect(false, "route mismatch at n=" + std::to_string(n) +
                              " seed=" + std::to_string(seed));
    }
  }
  out.expect(agreed == 160, "expected 160 agreeing draws, got " + std::to_string(agreed));
  for (index_t n : {2, 4, 6, 8}) {
    const auto tag = "n=" + std::to_string(n);
    const auto sent = ybx::testing::sentinel_params<GR>(n);
    out.expect(ybx::testing::build_r_layered(sent) == build_r(sent),
               "layered rebuild differs on sentinel values, " + tag);
    const auto p = random_params<GR>(n, static_cast<std::uint64_t>(n) * 1000);
    out.expect(ybx::testing::build_r_layered(p) == build_r(p),
               "layered rebuild differs on random values, " + tag);
  }
}

/* 5: broken operators produce nonzero residuals, confirmed densely. */
void negative_controls(Outcome& out) {
  std::vector<Triplet<GR>> diag = {{1, 1, GR{Rational(1)}},
                                   {2, 2, GR{Rational(2)}},
                                   {3, 3, GR{Rational(2)}},
                                   {4, 4, GR{Rational(1)}}};
  const auto bad = SparseMatrix<GR>::from_triplets(4, std::move(diag));
  const auto rep = braid_residual(bad, 2, kZero);
  out.expect(!rep.passed, "diagonal counterexample must fail");
  out.expect(rep.residual == Rational(2),
             "diagonal counterexample residual " + fmt(rep.residual) + ", want 2");
  out.expect(ybx::testing::dense_braid_residual(bad, 2) == rep.residual,
             "dense 8x8 reference disagrees with the sparse engine");

  const auto p = fully_nonzero_params(3, 5);
  const auto r = build_r(p);
  out.expect(braid_residual(r, 3, kZero).residual == kZero, "unperturbed 9x9 must pass");
  out.expect(ybx::testing::dense_braid_residual(r, 3) == kZero,
             "dense 27x27 reference must vanish on the valid operator");
  std::vector<Triplet<GR>> t(r.entries().begin(), r.entries().end());
  for (auto& e : t)
    if (e.row == 1 && e.col == 1) e.value = e.value + GR{Rational(1)};
  const auto perturbed = SparseMatrix<GR>::from_triplets(9, std::move(t));
  const auto prep = braid_residual(perturbed, 3, kZero);
  out.expect(!prep.passed && kZero < prep.residual,
             "perturbed 9x9 must yield a positive residual");
  out.expect(ybx::testing::dense_braid_residual(perturbed, 3) == prep.residual,
             "dense 27x27 reference disagrees on the perturbed operator");
}

/* 6: sampled unitary parameters pass; the violating quad is rejected. */
void unitarity(Outcome& out) {
  int samples = 0;
  for (index_t n : {2, 3, 4, 5}) {
    const auto id = SparseMatrix<Cx>::identity(n * n);
    for (std::uint64_t k = 0; k < 100; ++k) {
      const std::uint64_t seed = static_cast<std::uint64_t>(n) * 10000 + k;
      const auto p = sample_unitary_params(n, seed);
      const auto tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      const auto u = unitarity_residuals(p);
      out.expect(u.max_residual() < kSamplerResidualTol,
                 "residual " + fmt(u.max_residual()) + " at " + tag);
      const auto r = build_r(p);
      const auto rd = dagger(r);
      const double d1 = max_abs_diff(matmul(rd, r), id);
      const double d2 = max_abs_diff(matmul(r, rd), id);
      out.expect(d1 < kSamplerProductTol && d2 < kSamplerProductTol,
                 "product gap " + fmt(std::max(d1, d2)) + " at " + tag);
      ++samples;
    }
  }
  out.expect(samples == 400, "expected 400 samples");

  ParamSet<GR> v;
  v.n = 2;
  const GR half{Rational(1, 2)};
  v.quads.push_back({half, half, half, half});
  const auto u = unitarity_residuals(v);
  out.expect(!u.passed(kZero), "violating quad must be rejected");
  out.expect(u.quads.at(0).r[3] == Rational(1),
             "violating quad r4 is " + fmt(u.quads.at(0).r[3]) + ", want 1");
}

/* 7: entangling verdicts, factor witnesses, and the 9x9 obstruction. */
void entanglement(Outcome& out) {
  // splitting example: a = b = 1/2, x = i/2, y = -i/2
  ParamSet<GR> p1;
  p1.n = 2;
  p1.quads.push_back({GR{Rational(1, 2)}, GR{Rational(1, 2)}, GR{Rational(0), Rational(1, 2)},
                      GR{Rational(0), Rational(-1, 2)}});
  const auto rep1 = entangling_check(p1, kZero);
  out.expect(!rep1.entangling, "splitting example must not be entangling");
  out.expect(!rep1.factor_of_r.has_value(), "the operator itself must not split");
  out.expect(rep1.factor_of_rs.has_value(), "the swapped product must split");
  if (rep1.factor_of_rs) {
    const auto rs = matmul(build_r(p1), build_s<GR>(2));
    out.expect(max_abs_diff(kron(rep1.factor_of_rs->x, rep1.factor_of_rs->y), rs) == kZero,
               "exact witness must rebuild the swapped product");
  }

  ParamSet<Cx> p1f;
  p1f.n = 2;
  p1f.quads.push_back({Cx{0.5, 0}, Cx{0.5, 0}, Cx{0, 0.5}, Cx{0, -0.5}});
  const auto rep1f = entangling_check(p1f, kWitnessTol);
  out.expect(!rep1f.entangling && rep1f.factor_of_rs.has_value(),
             "float splitting example must produce a witness");
  if (rep1f.factor_of_rs) {
    const auto rs = matmul(build_r(p1f), build_s<Cx>(2));
    const double gap = max_abs_diff(kron(rep1f.factor_of_rs->x, rep1f.factor_of_rs->y), rs);
    out.expect(gap < kWitnessTol, "float witness gap " + fmt(gap));
  }

  // entangling example: a = b = 1/2, x = i e^{i pi/4} / 2, y = -x
  const double c = std::sqrt(2.0) / 4.0;
  ParamSet<Cx> p2;
  p2.n = 2;
  p2.quads.push_back({Cx{0.5, 0}, Cx{0.5, 0}, Cx{-c, c}, Cx{c, -c}});
  const auto rep2 = entangling_check(p2, kWitnessTol);
  out.expect(rep2.entangling, "rotated example must be entangling");
  out.expect(!rep2.factor_of_r.has_value() && !rep2.factor_of_rs.has_value(),
             "rotated example must admit no factor");
  out.expect(rep2.witness_state.has_value(), "rotated example must carry a state witness");
  if (rep2.witness_state) {
    const auto& w = *rep2.witness_state;
    bool first_basis = w.at(1) == Cx{1, 0};
    for (index_t i = 2; i <= 4; ++i) first_basis = first_basis && w.at(i) == Cx{0, 0};
    out.expect(first_basis, "witness must be the first basis product state");
    out.expect(rep2.witness_schmidt_rank == 2, "witness image rank must be 2");
    const auto img = ybx::apply(build_r(p2), w);
    out.expect(schmidt_rank(img, 2, kWitnessTol) == 2, "recomputed witness image rank");
  }

  // 9x9 companion with (axial a)^2 != center * quad a admits no factoring
  const auto p9 = ybx::testing::sentinel_params<GR>(3);
  const GR a2 = p9.axial_pair(1).a;
  const GR a1 = p9.quad(1, 1).a;
  const GR xc = *p9.center;
  out.expect(!(a2 * a2 == xc * a1), "premise: (axial a)^2 differs from center * quad a");
  out.expect(!tensor_factor(build_rhat(p9, RhatMethod::Direct), 3, kZero).has_value(),
             "9x9 companion must admit no factoring under the premise");

  // planted tensor products are recovered exactly
  int recovered = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const index_t n = 2 + static_cast<index_t>(k % 3);
    Rng g(31000 + k);
    auto X = DenseMatrix<GR>::zero(n, n);
    auto Y = DenseMatrix<GR>::zero(n, n);
    for (index_t i = 1; i <= n; ++i)
      for (index_t j = 1; j <= n; ++j) {
        X.at(i, j) = g.gaussian_rational();
        Y.at(i, j) = g.gaussian_rational();
      }
    const auto m = kron(X, Y);
    const auto w = tensor_factor(m, n, kZero);
    if (!w.has_value()) {
      out.expect(false, "planted product not factored, draw " + std::to_string(k));
      continue;
    }
    if (max_abs_diff(kron(w->x, w->y), m) == kZero)
      ++recovered;
    else
      out.expect(false, "planted product rebuilt inexactly, draw " + std::to_string(k));
  }
  out.expect(recovered == 20, "expected 20 exact recoveries, got " + std::to_string(recovered));
}

/* 8: the four-strand relations hold exactly on 16-dimensional matrices. */
void braid_relations(Outcome& out) {
  const auto p = random_params<GR>(2, 42);
  const auto rep = braid_rep_check(build_r(p), 2, 4, kZero);
  out.expect(rep.passed && rep.residual == kZero, "relations residual " + fmt(rep.residual));
  out.expect(rep.dims == 16, "representation dimension " + std::to_string(rep.dims));
  out.expect(rep.strands == 4, "strand count " + std::to_string(rep.strands));
}

/* 9: float run at side length 32 stays sparse and inside budget. */
void performance(Outcome& out) {
  const auto p = random_params<Cx>(32, 1);
  const auto r = build_r(p);
  out.expect(r.nnz() == 4096, "nnz " + std::to_string(r.nnz()) + ", want 4 * 32^2");
  out.expect(kron_identity(r, 32, KronSide::Right).nnz() == 131072,
             "identity-padded nnz must be 4 * 32^3");
  const auto rep = braid_residual(r, 32, kFloatEquationTol, 4);
  out.expect(rep.dims == 32768, "equation dimension " + std::to_string(rep.dims));
  out.expect(rep.passed, "residual " + fmt(rep.residual) + " above " + fmt(kFloatEquationTol));
}

/* 10: seeded sweep across sizes and seeds, both backends. */
void random_sweep(Outcome& out) {
  Rng meta(0xACCE55);
  int exact_runs = 0;
  for (int draw = 0; draw < 30; ++draw) {
    const index_t n = meta.uniform_int(2, 10);
    const std::uint64_t seed = meta.next();
    const auto p = random_params<GR>(n, seed);
    const auto tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    out.expect(braid_residual(build_r(p), n, kZero).residual == kZero,
               "exact braid residual nonzero at " + tag);
    out.expect(quantum_residual(build_rhat(p, RhatMethod::Direct), n, kZero).residual == kZero,
               "exact quantum residual nonzero at " + tag);
    ++exact_runs;
  }
  int float_runs = 0;
  for (int draw = 0; draw < 10; ++draw) {
    const index_t n = meta.uniform_int(2, 16);
    const std::uint64_t seed = meta.next();
    const auto p = random_params<Cx>(n, seed);
    const auto rep = braid_residual(build_r(p), n, kFloatEquationTol);
    out.expect(rep.passed, "float braid residual " + fmt(rep.residual) + " at n=" +
                               std::to_string(n) + " seed=" + std::to_string(seed));
    ++float_runs;
  }
  out.expect(exact_runs == 30 && float_runs == 10, "expected 30 exact and 10 float draws");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "reference layouts for n = 2, 3, 4", 1.0, golden_layouts);
  ok &= run_criterion(2, "entry counts for n = 2..12", 1.0, entry_counts);
  ok &= run_criterion(3, "exact equations over 140 draws", 60.0, exact_equations);
  ok &= run_criterion(4, "construction routes agree over 160 draws", 0, route_agreement);
  ok &= run_criterion(5, "negative controls with dense confirmation", 0, negative_controls);
  ok &= run_criterion(6, "unitarity sampling and rejection", 0, unitarity);
  ok &= run_criterion(7, "entangling verdicts and witnesses", 0, entanglement);
  ok &= run_criterion(8, "braid relations on four strands", 5.0, braid_relations);
  ok &= run_criterion(9, "float equation at side length 32", 10.0, performance);
  ok &= run_criterion(10, "seeded property sweep", 0, random_sweep);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
  return ok ? 0 : 1;
}
