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

#include <stdexcept>

namespace ybx {

// Malformed textual input (JSON, Matrix Market, scalar strings).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size limit would be exceeded.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An analysis that presumes an invertible operator was handed parameters
// that fail its invertibility precondition.
struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ybx
