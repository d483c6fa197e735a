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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ybx/rng.hpp"
#include "ybx/scalar.hpp"

using namespace ybx;
using Cx = std::complex<double>;

namespace {

GaussianRational gr(long re_n, long re_d, long im_n, long im_d) {
  return {Rational(re_n, re_d), Rational(im_n, im_d)};
}

}  // namespace

TEST_CASE("Rational canonicalizes on construction") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, -4).den() > 0);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("Rational arithmetic and ordering") {
  Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
  CHECK(third < half);
  CHECK(half <= half);
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(2).sign() == 1);
  CHECK(Rational(-2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
  CHECK(Rational(1, 4).to_double() == 0.25);
}

TEST_CASE("Rational parse accepts p and p/q forms") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("2/a").has_value());
  CHECK_FALSE(Rational::parse("--3").has_value());
  CHECK_FALSE(Rational::parse("3.5").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("/2").has_value());
}

TEST_CASE("Rational string forms") {
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(-5, 2).str() == "-5/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(4).str_slashed() == "4/1");
  CHECK(Rational(-1, 3).str_slashed() == "-1/3");
  // str round-trips through parse
  for (long n = -5; n <= 5; ++n)
    for (long d = 1; d <= 4; ++d) CHECK(Rational::parse(Rational(n, d).str()) == Rational(n, d));
}

TEST_CASE("GaussianRational is a field") {
  const GaussianRational i = gr(0, 1, 1, 1);
  CHECK(i * i == GaussianRational(Rational(-1)));
  CHECK(gr(1, 2, 0, 1) + gr(1, 2, 0, 1) == GaussianRational(Rational(1)));
  CHECK(gr(1, 3, 1, 3) * GaussianRational(Rational(3)) == gr(1, 1, 1, 1));

  std::vector<GaussianRational> sample = {gr(1, 2, -3, 4), gr(0, 1, 2, 1), gr(-5, 3, 0, 1),
                                          gr(7, 1, 7, 2), GaussianRational(Rational(1))};
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a / b) * b == a);
      for (const auto& c : sample) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
  CHECK_THROWS_AS(sample[0] / GaussianRational{}, std::domain_error);
}

TEST_CASE("conj is an automorphism of order two") {
  CHECK(conj(gr(2, 1, 3, 1)) == gr(2, 1, -3, 1));
  CHECK(conj(GaussianRational(Rational(5))) == GaussianRational(Rational(5)));
  std::vector<GaussianRational> sample = {gr(1, 2, -3, 4), gr(0, 1, 2, 1), gr(-5, 3, 1, 7)};
  for (const auto& a : sample) {
    CHECK(conj(conj(a)) == a);
    for (const auto& b : sample) {
      CHECK(conj(a + b) == conj(a) + conj(b));
      CHECK(conj(a * b) == conj(a) * conj(b));
    }
  }
  // works on temporaries
  CHECK(conj(gr(1, 1, 1, 1) * gr(1, 1, 1, 1)) == gr(0, 1, -2, 1));
}

TEST_CASE("entry magnitudes per backend") {
  // exact backend: Chebyshev (max component) magnitude, stays rational
  CHECK(scalar_traits<GaussianRational>::entry_mag(gr(3, 4, -5, 6)) == Rational(5, 6));
  CHECK(scalar_traits<GaussianRational>::entry_mag(gr(-2, 1, 1, 2)) == Rational(2));
  // float backend: modulus
  CHECK(scalar_traits<Cx>::entry_mag(Cx{3.0, 4.0}) == doctest::Approx(5.0));
}

TEST_CASE("approx_zero semantics") {
  CHECK(approx_zero(GaussianRational{}, Rational(0)));
  CHECK_FALSE(approx_zero(gr(1, 1000000, 0, 1), Rational(0)));
  CHECK_THROWS_AS(approx_zero(GaussianRational{}, Rational(1, 10)), std::invalid_argument);

  CHECK(approx_zero(Cx{1e-15, -1e-14}, 1e-12));
  CHECK_FALSE(approx_zero(Cx{1e-6, 0.0}, 1e-12));
  // componentwise bound, not modulus: both parts at the tolerance pass
  CHECK(approx_zero(Cx{1e-13, 1e-13}, 1e-13));
  CHECK_THROWS_AS(approx_zero(Cx{0, 0}, -1.0), std::invalid_argument);
}

TEST_CASE("exact scalar strings round-trip and stay canonical") {
  using traits = scalar_traits<GaussianRational>;
  CHECK(traits::str(gr(1, 2, -3, 4)) == "1/2-3/4 i");
  CHECK(traits::str(gr(-1, 1, 0, 1)) == "-1/1+0/1 i");
  CHECK(traits::str(GaussianRational{}) == "0/1+0/1 i");

  std::vector<GaussianRational> sample = {gr(1, 2, -3, 4), gr(0, 1, 2, 1),   gr(-5, 3, 0, 1),
                                          GaussianRational{}, gr(-1, 7, -2, 9), gr(1000, 1, 1, 1000)};
  for (const auto& z : sample) CHECK(traits::parse(traits::str(z)) == z);

  // liberal input forms
  CHECK(traits::parse("5") == GaussianRational(Rational(5)));
  CHECK(traits::parse("3/4 i") == gr(0, 1, 3, 4));
  CHECK(traits::parse("-1/2-3/4i") == gr(-1, 2, -3, 4));
  CHECK(traits::parse("i").has_value() == false);  // a bare marker is not a value
  CHECK_FALSE(traits::parse("1/2+1/2").has_value());
  CHECK_FALSE(traits::parse("").has_value());
  CHECK_FALSE(traits::parse("1/2+i+i").has_value());
}

TEST_CASE("float scalar strings round-trip bit-identically") {
  using traits = scalar_traits<Cx>;
  CHECK(traits::str(Cx{0.5, -0.25}) == "0.5-0.25 i");
  CHECK(traits::str(Cx{1.0, 0.0}) == "1+0 i");

  std::vector<Cx> sample = {{0.5, -0.25},    {1.0 / 3.0, 2.0 / 7.0}, {1e-300, -1e300},
                            {0.1, 0.2},      {-0.0, 0.0},            {6.02214076e23, -2.5e-14}};
  for (const auto& z : sample) {
    auto back = traits::parse(traits::str(z));
    REQUIRE(back.has_value());
    CHECK(back->real() == z.real());
    CHECK(back->imag() == z.imag());
    CHECK(std::signbit(back->real()) == std::signbit(z.real()));
  }

  CHECK(traits::parse("1e-13 i") == Cx{0.0, 1e-13});
  CHECK(traits::parse("2.5") == Cx{2.5, 0.0});
  CHECK(traits::parse("1.5e2-3e-1 i") == Cx{150.0, -0.3});
  CHECK_FALSE(traits::parse("nan").has_value());
  CHECK_FALSE(traits::parse("inf+0 i").has_value());
  CHECK_FALSE(traits::parse("1.0x").has_value());
}

TEST_CASE("format_double and parse_double round-trip shortest forms") {
  for (double d : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -0.0}) {
    auto back = parse_double(format_double(d));
    REQUIRE(back.has_value());
    CHECK(*back == d);
  }
  CHECK_FALSE(parse_double("1.0 trailing").has_value());
  CHECK_FALSE(parse_double("").has_value());
}

TEST_CASE("backend names round-trip") {
  CHECK(backend_name(Backend::Exact) == std::string("exact"));
  CHECK(backend_name(Backend::Float) == std::string("float"));
  CHECK(backend_from_name("exact") == Backend::Exact);
  CHECK(backend_from_name("float") == Backend::Float);
  CHECK_FALSE(backend_from_name("EXACT").has_value());
  CHECK_FALSE(backend_from_name("").has_value());
}

TEST_CASE("Rng streams are deterministic and in range") {
  Rng a(123), b(123), c(124);
  bool identical = true, differs = false;
  for (int i = 0; i < 64; ++i) {
    auto va = a.next();
    identical = identical && va == b.next();
    differs = differs || va != c.next();
  }
  CHECK(identical);
  CHECK(differs);

  Rng g(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = g.uniform_int(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
    double u = g.uniform_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double w = g.uniform(2.0, 4.0);
    CHECK(w >= 2.0);
    CHECK(w < 4.0);
  }

  Rng h(9);
  bool hit_negative = false;
  for (int i = 0; i < 200; ++i) {
    GaussianRational z = h.gaussian_rational();
    CHECK(abs(z.re) <= Rational(9));
    CHECK(abs(z.im) <= Rational(9));
    hit_negative = hit_negative || z.re.sign() < 0 || z.im.sign() < 0;
  }
  CHECK(hit_negative);

  Rng f(11);
  for (int i = 0; i < 200; ++i) {
    Cx z = f.complex_box();
    CHECK(std::abs(z.real()) <= 1.0);
    CHECK(std::abs(z.imag()) <= 1.0);
  }
}
