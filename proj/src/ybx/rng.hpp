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
#include <cstdint>
#include <random>

#include "ybx/scalar.hpp"

namespace ybx {

// Deterministic draw source.  All value mappings are hand-rolled on top of
// mt19937_64 so streams are reproducible across platforms and library
// versions for a given seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Inclusive range; spans here are tiny, so modulo bias is rejected away.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span + 1) % span;
    std::uint64_t r = next();
    while (r > limit) r = next();
    return lo + static_cast<std::int64_t>(r % span);
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

  Rational rational_digit() {
    std::int64_t num = uniform_int(-9, 9);
    std::int64_t den = uniform_int(1, 9);
    return Rational(static_cast<long>(num), static_cast<long>(den));
  }

  GaussianRational gaussian_rational() {
    Rational re = rational_digit();
    Rational im = rational_digit();
    return {re, im};
  }

  std::complex<double> complex_box() {
    double re = uniform(-1.0, 1.0);
    double im = uniform(-1.0, 1.0);
    return {re, im};
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace ybx
