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
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ybx/errors.hpp"
#include "ybx/params_io.hpp"
#include "ybx/sparse.hpp"

namespace ybx {

using AnySparseMatrix =
    std::variant<SparseMatrix<GaussianRational>, SparseMatrix<std::complex<double>>>;

namespace detail {

inline void append_market_value(std::string& out, const std::complex<double>& z) {
  out += format_double(z.real());
  out += ' ';
  out += format_double(z.imag());
}

inline void append_market_value(std::string& out, const GaussianRational& z) {
  out += format_double(z.re.to_double());
  out += ' ';
  out += format_double(z.im.to_double());
}

}  // namespace detail

// Matrix Market "coordinate complex general" text.  Entries are written
// sorted by (row, col), 1-based, as "row col re im".  Exact values are
// converted to double; the JSON form below preserves them losslessly.
template <class T>
std::string to_matrix_market(const SparseMatrix<T>& m) {
  std::string out = "%%MatrixMarket matrix coordinate complex general\n";
  out += std::to_string(m.dim()) + " " + std::to_string(m.dim()) + " " +
         std::to_string(m.nnz()) + "\n";
  for (const auto& e : m.entries()) {
    out += std::to_string(e.row) + " " + std::to_string(e.col) + " ";
    detail::append_market_value(out, e.value);
    out += '\n';
  }
  return out;
}

// Reads the format written above.  The result always uses float scalars.
inline SparseMatrix<std::complex<double>> matrix_from_market(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("matrix market: empty input");
  {
    std::istringstream hdr(line);
    std::string banner, object, format, field, symmetry;
    hdr >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate" ||
        field != "complex" || symmetry != "general")
      throw ParseError("matrix market: unsupported header: " + line);
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  index_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz)) throw ParseError("matrix market: malformed size line");
  }
  if (rows != cols) throw ParseError("matrix market: only square matrices are supported");
  std::vector<Triplet<std::complex<double>>> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  for (index_t i = 0; i < nnz; ++i) {
    if (!std::getline(in, line)) throw ParseError("matrix market: truncated entry list");
    std::istringstream ls(line);
    index_t r = 0, c = 0;
    std::string re_s, im_s;
    if (!(ls >> r >> c >> re_s >> im_s))
      throw ParseError("matrix market: malformed entry line: " + line);
    auto re = parse_double(re_s);
    auto im = parse_double(im_s);
    if (!re || !im) throw ParseError("matrix market: malformed entry value: " + line);
    entries.push_back({r, c, {*re, *im}});
  }
  try {
    return SparseMatrix<std::complex<double>>::from_triplets(rows, std::move(entries));
  } catch (const std::exception& e) {
    throw ParseError(std::string("matrix market: ") + e.what());
  }
}

// JSON form: { "dim": int, "backend": "exact" | "float",
//              "entries": [ { "row", "col", "value" } ... ] }.
// Values are scalar strings in the backend's format, so exact matrices
// round-trip exactly and float matrices round-trip bit-identically.
template <class T>
json matrix_to_json_value(const SparseMatrix<T>& m) {
  using traits = scalar_traits<T>;
  json root;
  root["dim"] = m.dim();
  root["backend"] = backend_name(traits::backend);
  json entries = json::array();
  for (const auto& e : m.entries()) {
    json je;
    je["row"] = e.row;
    je["col"] = e.col;
    je["value"] = traits::str(e.value);
    entries.push_back(std::move(je));
  }
  root["entries"] = std::move(entries);
  return root;
}

template <class T>
std::string matrix_to_json(const SparseMatrix<T>& m) {
  return matrix_to_json_value(m).dump(2) + "\n";
}

template <class T>
SparseMatrix<T> matrix_from_json_typed(const json& root) {
  const char* what = "matrix";
  if (!root.is_object()) throw ParseError("matrix: top level must be an object");
  detail::require_keys(root, {"dim", "backend", "entries"}, {}, what);
  const index_t dim = detail::get_index(root, "dim", what);
  if (dim < 1) throw ParseError("matrix: dim must be positive");
  if (!root.at("entries").is_array()) throw ParseError("matrix: entries must be an array");
  std::vector<Triplet<T>> entries;
  entries.reserve(root.at("entries").size());
  for (const json& je : root.at("entries")) {
    if (!je.is_object()) throw ParseError("matrix: entries elements must be objects");
    detail::require_keys(je, {"row", "col", "value"}, {}, "matrix entry");
    const index_t r = detail::get_index(je, "row", "matrix entry");
    const index_t c = detail::get_index(je, "col", "matrix entry");
    if (r < 1 || r > dim || c < 1 || c > dim)
      throw ParseError("matrix: entry position (" + std::to_string(r) + ", " + std::to_string(c) +
                       ") out of range");
    entries.push_back({r, c, detail::get_scalar<T>(je, "value", "matrix entry")});
  }
  try {
    return SparseMatrix<T>::from_triplets(dim, std::move(entries));
  } catch (const std::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

inline AnySparseMatrix matrix_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix: malformed JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("backend") || !root.at("backend").is_string())
    throw ParseError("matrix: backend must be \"exact\" or \"float\"");
  const auto backend = backend_from_name(root.at("backend").get<std::string>());
  if (!backend) throw ParseError("matrix: backend must be \"exact\" or \"float\"");
  if (*backend == Backend::Exact) return matrix_from_json_typed<GaussianRational>(root);
  return matrix_from_json_typed<std::complex<double>>(root);
}

}  // namespace ybx
