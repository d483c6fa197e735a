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

#include <complex>
#include <string>

#include <json.hpp>

#include "ybx/analyze.hpp"
#include "ybx/params_io.hpp"
#include "ybx/scalar.hpp"
#include "ybx/verify.hpp"

namespace ybx {

// Report serializers.  Key order is fixed so identical runs print
// byte-identical reports; elapsed_ms is the only field that varies.

template <class T>
json verification_report_json(const VerificationReport<T>& rep) {
  using traits = scalar_traits<T>;
  json root;
  root["equation"] = equation_name(rep.equation);
  root["n"] = rep.n;
  root["dims"] = rep.dims;
  if (rep.equation == Equation::BraidRelations) root["strands"] = rep.strands;
  root["backend"] = backend_name(traits::backend);
  root["residual"] = traits::mag_str(rep.residual);
  root["tolerance"] = traits::mag_str(rep.tolerance);
  root["passed"] = rep.passed;
  root["elapsed_ms"] = rep.elapsed_ms;
  return root;
}

template <class T>
json unitarity_report_json(const UnitarityResiduals<T>& u, const mag_t<T>& tol) {
  using traits = scalar_traits<T>;
  json root;
  root["n"] = u.n;
  root["backend"] = backend_name(traits::backend);
  root["max_residual"] = traits::mag_str(u.max_residual());
  root["tolerance"] = traits::mag_str(tol);
  root["passed"] = u.passed(tol);
  json quads = json::array();
  for (const auto& q : u.quads) {
    json jq;
    jq["t"] = q.t;
    jq["s"] = q.s;
    jq["r1"] = traits::mag_str(q.r[0]);
    jq["r2"] = traits::mag_str(q.r[1]);
    jq["r3"] = traits::mag_str(q.r[2]);
    jq["r4"] = traits::mag_str(q.r[3]);
    quads.push_back(std::move(jq));
  }
  root["quads"] = std::move(quads);
  if (!u.axial.empty()) {
    json axial = json::array();
    for (const auto& a : u.axial) {
      json ja;
      ja["t"] = a.t;
      ja["r1"] = traits::mag_str(a.r[0]);
      ja["r2"] = traits::mag_str(a.r[1]);
      axial.push_back(std::move(ja));
    }
    root["axial"] = std::move(axial);
  }
  if (u.center) root["center"] = traits::mag_str(*u.center);
  return root;
}

template <class T>
json dense_matrix_json(const DenseMatrix<T>& m) {
  using traits = scalar_traits<T>;
  json rows = json::array();
  for (index_t r = 1; r <= m.rows; ++r) {
    json row = json::array();
    for (index_t c = 1; c <= m.cols; ++c) row.push_back(traits::str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json factor_witness_json(const FactorWitness<T>& w) {
  json root;
  root["degenerate"] = w.degenerate;
  root["x"] = dense_matrix_json(w.x);
  root["y"] = dense_matrix_json(w.y);
  return root;
}

template <class T>
json factor_report_json(index_t n, const std::optional<FactorWitness<T>>& w) {
  using traits = scalar_traits<T>;
  json root;
  root["n"] = n;
  root["backend"] = backend_name(traits::backend);
  root["factored"] = w.has_value();
  root["witness"] = w ? factor_witness_json(*w) : json(nullptr);
  return root;
}

template <class T>
json entangling_report_json(const EntanglingReport<T>& rep) {
  using traits = scalar_traits<T>;
  json root;
  root["n"] = rep.n;
  root["backend"] = backend_name(traits::backend);
  root["entangling"] = rep.entangling;
  root["factor_of_r"] =
      rep.factor_of_r ? factor_witness_json(*rep.factor_of_r) : json(nullptr);
  root["factor_of_rs"] =
      rep.factor_of_rs ? factor_witness_json(*rep.factor_of_rs) : json(nullptr);
  if (rep.witness_state) {
    json comps = json::array();
    for (const auto& c : rep.witness_state->comp) comps.push_back(traits::str(c));
    root["witness_state"] = std::move(comps);
    root["witness_schmidt_rank"] = rep.witness_schmidt_rank;
  } else {
    root["witness_state"] = json(nullptr);
    root["witness_schmidt_rank"] = json(nullptr);
  }
  root["elapsed_ms"] = rep.elapsed_ms;
  return root;
}

}  // namespace ybx
