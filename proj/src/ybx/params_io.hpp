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
#include <string_view>
#include <variant>

#include <json.hpp>

#include "ybx/construct.hpp"
#include "ybx/errors.hpp"

namespace ybx {

using json = nlohmann::ordered_json;

using AnyParamSet = std::variant<ParamSet<GaussianRational>, ParamSet<std::complex<double>>>;

namespace detail {

inline void require_keys(const json& obj, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional, const char* what) {
  for (const char* k : required) {
    if (!obj.contains(k))
      throw ParseError(std::string(what) + ": missing required field: " + k);
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& k = it.key();
    auto in = [&k](std::initializer_list<const char*> list) {
      for (const char* e : list)
        if (k == e) return true;
      return false;
    };
    if (!in(required) && !in(optional))
      throw ParseError(std::string(what) + ": unknown field: " + k);
  }
}

inline index_t get_index(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + ": field " + key + " must be an integer");
  return v.get<index_t>();
}

template <class T>
T get_scalar(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_string())
    throw ParseError(std::string(what) + ": field " + key + " must be a scalar string");
  auto parsed = scalar_traits<T>::parse(v.get<std::string>());
  if (!parsed)
    throw ParseError(std::string(what) + ": field " + key + " holds an unparsable scalar: " +
                     v.get<std::string>());
  return *parsed;
}

}  // namespace detail

// Schema:
//   { "n": int, "backend": "exact" | "float",
//     "quads": [ { "t", "s", "a", "b", "x", "y" } ... ],     all m^2 keys
//     "axial": [ { "t", "a", "b" } ... ],                    odd n only
//     "center": scalar }                                     odd n only
// Scalars are strings; quads may come in any order but must cover every
// (t, s) exactly once.
template <class T>
ParamSet<T> params_from_json_typed(const json& root) {
  const char* what = "params";
  if (!root.is_object()) throw ParseError("params: top level must be an object");
  detail::require_keys(root, {"n", "backend", "quads"}, {"axial", "center"}, what);

  ParamSet<T> p;
  p.n = detail::get_index(root, "n", what);
  if (p.n < 1) throw ParseError("params: n must be positive");
  const index_t m = family_m(p.n);
  const bool odd = p.n % 2 == 1;

  const auto declared = backend_from_name(root.at("backend").is_string()
                                              ? root.at("backend").get<std::string>()
                                              : std::string());
  if (!declared) throw ParseError("params: backend must be \"exact\" or \"float\"");
  if (*declared != scalar_traits<T>::backend)
    throw ParseError("params: backend mismatch");

  if (!root.at("quads").is_array()) throw ParseError("params: quads must be an array");
  p.quads.assign(static_cast<std::size_t>(m * m), Quad<T>{});
  std::vector<bool> seen_quad(static_cast<std::size_t>(m * m), false);
  for (const json& jq : root.at("quads")) {
    if (!jq.is_object()) throw ParseError("params: quads entries must be objects");
    detail::require_keys(jq, {"t", "s", "a", "b", "x", "y"}, {}, "params quad");
    const index_t t = detail::get_index(jq, "t", "params quad");
    const index_t s = detail::get_index(jq, "s", "params quad");
    if (t < 1 || t > m || s < 1 || s > m)
      throw ParseError("params: quad key (" + std::to_string(t) + ", " + std::to_string(s) +
                       ") out of range for n = " + std::to_string(p.n));
    const auto slot = static_cast<std::size_t>((t - 1) * m + (s - 1));
    if (seen_quad[slot])
      throw ParseError("params: duplicate quad key (" + std::to_string(t) + ", " +
                       std::to_string(s) + ")");
    seen_quad[slot] = true;
    p.quads[slot] = {detail::get_scalar<T>(jq, "a", "params quad"),
                     detail::get_scalar<T>(jq, "b", "params quad"),
                     detail::get_scalar<T>(jq, "x", "params quad"),
                     detail::get_scalar<T>(jq, "y", "params quad")};
  }
  for (index_t t = 1; t <= m; ++t)
    for (index_t s = 1; s <= m; ++s)
      if (!seen_quad[static_cast<std::size_t>((t - 1) * m + (s - 1))])
        throw ParseError("params: missing quad (" + std::to_string(t) + ", " + std::to_string(s) +
                         ")");

  if (!odd) {
    if (root.contains("axial")) throw ParseError("params: axial is only valid for odd n");
    if (root.contains("center")) throw ParseError("params: center is only valid for odd n");
  } else {
    if (m > 0 && !root.contains("axial"))
      throw ParseError("params: missing required field: axial");
    if (root.contains("axial")) {
      if (!root.at("axial").is_array()) throw ParseError("params: axial must be an array");
      p.axial.assign(static_cast<std::size_t>(m), AxialPair<T>{});
      std::vector<bool> seen_axial(static_cast<std::size_t>(m), false);
      for (const json& ja : root.at("axial")) {
        if (!ja.is_object()) throw ParseError("params: axial entries must be objects");
        detail::require_keys(ja, {"t", "a", "b"}, {}, "params axial");
        const index_t t = detail::get_index(ja, "t", "params axial");
        if (t < 1 || t > m)
          throw ParseError("params: axial key " + std::to_string(t) + " out of range for n = " +
                           std::to_string(p.n));
        if (seen_axial[static_cast<std::size_t>(t - 1)])
          throw ParseError("params: duplicate axial key " + std::to_string(t));
        seen_axial[static_cast<std::size_t>(t - 1)] = true;
        p.axial[static_cast<std::size_t>(t - 1)] = {detail::get_scalar<T>(ja, "a", "params axial"),
                                                    detail::get_scalar<T>(ja, "b", "params axial")};
      }
      for (index_t t = 1; t <= m; ++t)
        if (!seen_axial[static_cast<std::size_t>(t - 1)])
          throw ParseError("params: missing axial entry " + std::to_string(t));
    }
    if (!root.contains("center")) throw ParseError("params: missing required field: center");
    p.center = detail::get_scalar<T>(root, "center", what);
  }

  p.validate();
  return p;
}

inline AnyParamSet params_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("params: malformed JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("backend") || !root.at("backend").is_string())
    throw ParseError("params: backend must be \"exact\" or \"float\"");
  const auto backend = backend_from_name(root.at("backend").get<std::string>());
  if (!backend) throw ParseError("params: backend must be \"exact\" or \"float\"");
  if (*backend == Backend::Exact) return params_from_json_typed<GaussianRational>(root);
  return params_from_json_typed<std::complex<double>>(root);
}

template <class T>
json params_to_json_value(const ParamSet<T>& p) {
  p.validate();
  using traits = scalar_traits<T>;
  json root;
  root["n"] = p.n;
  root["backend"] = backend_name(traits::backend);
  json quads = json::array();
  const index_t m = p.m();
  for (index_t t = 1; t <= m; ++t) {
    for (index_t s = 1; s <= m; ++s) {
      const Quad<T>& q = p.quad(t, s);
      json jq;
      jq["t"] = t;
      jq["s"] = s;
      jq["a"] = traits::str(q.a);
      jq["b"] = traits::str(q.b);
      jq["x"] = traits::str(q.x);
      jq["y"] = traits::str(q.y);
      quads.push_back(std::move(jq));
    }
  }
  root["quads"] = std::move(quads);
  if (p.n % 2 == 1) {
    json axial = json::array();
    for (index_t t = 1; t <= m; ++t) {
      const AxialPair<T>& a = p.axial_pair(t);
      json ja;
      ja["t"] = t;
      ja["a"] = traits::str(a.a);
      ja["b"] = traits::str(a.b);
      axial.push_back(std::move(ja));
    }
    root["axial"] = std::move(axial);
    root["center"] = traits::str(*p.center);
  }
  return root;
}

template <class T>
std::string params_to_json(const ParamSet<T>& p) {
  return params_to_json_value(p).dump(2) + "\n";
}

}  // namespace ybx
