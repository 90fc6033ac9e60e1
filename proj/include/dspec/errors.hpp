// Copyright 2026 The dspec authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NegativeSqrt : Error {
  NegativeSqrt() : Error("sqrt of a certifiably negative expression") {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Interval refinement hit the precision cap without certifying a decision.
struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// nearest_int could not separate x from a half-integer tie.
struct UndecidedTie : Error {
  explicit UndecidedTie(const std::string& what) : Error(what) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& what) : Error(what) {}
};

struct SearchExhausted : Error {
  SearchExhausted(const std::string& what, long last_k)
      : Error(what), k_max(last_k) {}
  long k_max;
};

struct NoEpsilonFound : Error {
  explicit NoEpsilonFound(const std::string& what) : Error(what) {}
};

struct MarginTooSmall : Error {
  explicit MarginTooSmall(const std::string& what) : Error(what) {}
};

// Configured growth cap (q_n) exceeded; the run stops cleanly.
struct GrowthCapExceeded : Error {
  explicit GrowthCapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace dspec
