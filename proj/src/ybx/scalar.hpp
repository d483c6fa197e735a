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

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ybx/rational.hpp"

namespace ybx {

enum class Backend { Exact, Float };

inline const char* backend_name(Backend b) {
  return b == Backend::Exact ? "exact" : "float";
}

inline std::optional<Backend> backend_from_name(std::string_view s) {
  if (s == "exact") return Backend::Exact;
  if (s == "float") return Backend::Float;
  return std::nullopt;
}

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussianRational(long n) : re(n) {}                 // NOLINT: implicit by design
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_double(std::string_view s) {
  double d = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), d);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(d)) return std::nullopt;
  return d;
}

// Per-backend scalar policy.  mag_type carries residual magnitudes
// (Rational for exact, double for float) so exact checks never round.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  using mag_type = Rational;
  static constexpr Backend backend = Backend::Exact;
  static constexpr bool is_exact = true;

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1), Rational(0)}; }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static mag_type mag_zero() { return Rational(0); }
  static mag_type default_tolerance() { return Rational(0); }
  // Residual metric: max of component magnitudes.
  static mag_type entry_mag(const GaussianRational& z) {
    Rational r = abs(z.re), i = abs(z.im);
    return r < i ? i : r;
  }
  static std::string mag_str(const mag_type& m) { return m.str(); }
  static double mag_to_double(const mag_type& m) { return m.to_double(); }

  // Canonical form "p/q+r/s i"; the sign of the imaginary part replaces '+'.
  static std::string str(const GaussianRational& z) {
    std::string out = z.re.str_slashed();
    out += z.im.sign() < 0 ? "-" : "+";
    out += abs(z.im).str_slashed();
    out += " i";
    return out;
  }
  static std::optional<GaussianRational> parse(std::string_view text);
};

template <>
struct scalar_traits<std::complex<double>> {
  using mag_type = double;
  static constexpr Backend backend = Backend::Float;
  static constexpr bool is_exact = false;

  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static bool is_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }
  static mag_type mag_zero() { return 0.0; }
  static mag_type default_tolerance() { return 1e-12; }
  static mag_type entry_mag(const std::complex<double>& z) { return std::abs(z); }
  static std::string mag_str(const mag_type& m) { return format_double(m); }
  static double mag_to_double(const mag_type& m) { return m; }

  // Canonical form "<re>+<im> i" with round-trip decimal components.
  static std::string str(const std::complex<double>& z) {
    std::string out = format_double(z.real());
    out += std::signbit(z.imag()) ? "-" : "+";
    out += format_double(std::abs(z.imag()));
    out += " i";
    return out;
  }
  static std::optional<std::complex<double>> parse(std::string_view text);
};

template <class T>
using mag_t = typename scalar_traits<T>::mag_type;

inline std::complex<double> conj_scalar(const std::complex<double>& z) { return std::conj(z); }
inline GaussianRational conj_scalar(const GaussianRational& z) { return conj(z); }

// Scalar-level zero test under a Chebyshev bound on the components.
// The exact backend admits only tol = 0.
inline bool approx_zero(const GaussianRational& z, const Rational& tol) {
  if (!tol.is_zero()) throw std::invalid_argument("approx_zero: exact backend requires tol = 0");
  return z.is_zero();
}
inline bool approx_zero(const std::complex<double>& z, double tol) {
  if (!(tol >= 0)) throw std::invalid_argument("approx_zero: negative tolerance");
  return std::max(std::abs(z.real()), std::abs(z.imag())) <= tol;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits "<re><sign><im> i" into component tokens.  The split sign is the
// last '+'/'-' that is not leading and not part of a float exponent.
// Returns {re, im, has_im}; a trailing "i" with no split means pure
// imaginary, no trailing "i" means pure real.
struct ComplexTokens {
  std::string_view re, im;
  bool has_im = false;
  bool ok = false;
};

inline ComplexTokens split_complex(std::string_view text) {
  ComplexTokens out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  bool imaginary_tail = false;
  if (s.back() == 'i') {
    s.remove_suffix(1);
    s = trim(s);
    imaginary_tail = true;
    if (s.empty()) return out;
  }
  std::size_t split = std::string_view::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] != '+' && s[p] != '-') continue;
    char prev = s[p - 1];
    if (prev == 'e' || prev == 'E' || prev == '/') continue;
    split = p;
    break;
  }
  if (split == std::string_view::npos) {
    if (imaginary_tail) {
      out.im = s;
      out.has_im = true;
    } else {
      out.re = s;
    }
    out.ok = true;
    return out;
  }
  if (!imaginary_tail) return out;  // two components require the i marker
  out.re = trim(s.substr(0, split));
  out.im = trim(s.substr(split));  // keep the sign with the token
  out.has_im = true;
  out.ok = !out.re.empty() && out.im.size() > 1;
  return out;
}

}  // namespace detail

inline std::optional<GaussianRational> scalar_traits<GaussianRational>::parse(std::string_view text) {
  auto tok = detail::split_complex(text);
  if (!tok.ok) return std::nullopt;
  Rational re, im;
  if (!tok.re.empty()) {
    auto r = Rational::parse(tok.re);
    if (!r) return std::nullopt;
    re = *r;
  }
  if (tok.has_im) {
    auto i = Rational::parse(tok.im);
    if (!i) return std::nullopt;
    im = *i;
  }
  return GaussianRational{re, im};
}

inline std::optional<std::complex<double>> scalar_traits<std::complex<double>>::parse(std::string_view text) {
  auto tok = detail::split_complex(text);
  if (!tok.ok) return std::nullopt;
  double re = 0, im = 0;
  if (!tok.re.empty()) {
    auto r = parse_double(tok.re);
    if (!r) return std::nullopt;
    re = *r;
  }
  if (tok.has_im) {
    std::string_view t = tok.im;
    double sign = 1.0;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      sign = t[0] == '-' ? -1.0 : 1.0;
      // from_chars accepts a leading '-' but not '+'; strip uniformly.
      t.remove_prefix(1);
    }
    auto i = parse_double(t);
    if (!i) return std::nullopt;
    im = sign * *i;
  }
  return std::complex<double>{re, im};
}

}  // namespace ybx
