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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "dspec/interval.hpp"
#include "dspec/numbers.hpp"
#include "dspec/qfield.hpp"

namespace dspec {

inline constexpr long kDefaultMaxPrec = 1L << 16;

enum class Ordering { Less, Equal, Greater, Undecided };

struct CertifiedOrdering {
  Ordering outcome;
  long precision_bound = 0;  // set when outcome == Undecided
};

// Immutable expression tree over {rational literals, +, -, *, /, sqrt}.
// Where the value lives in a multi-quadratic field, an exact normal form is
// carried alongside and comparisons are decided symbolically; elsewhere,
// adaptive-precision interval evaluation takes over.
class RealExpr {
 public:
  RealExpr() : RealExpr(Rational(0)) {}
  RealExpr(const Rational& r);  // NOLINT: implicit by design
  RealExpr(const Int& n) : RealExpr(Rational(n)) {}
  RealExpr(long n) : RealExpr(Rational(n)) {}
  explicit RealExpr(const QElem& q);

  // Prefix notation, e.g. "(/ 2 (sqrt 3))", "(+ 1 (sqrt 5))", "355/113",
  // "1.25". Throws ParseError.
  static RealExpr parse(std::string_view s);
  std::string str() const;

  friend RealExpr operator+(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator-(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator*(const RealExpr& a, const RealExpr& b);
  // Throws DivisionByZero when b is exactly zero (symbolically provable).
  friend RealExpr operator/(const RealExpr& a, const RealExpr& b);
  RealExpr operator-() const;
  static RealExpr sqrt(const RealExpr& x);  // throws NegativeSqrt if x < 0
  RealExpr abs() const;
  RealExpr squared() const { return *this * *this; }

  // Enclosure of width <= 2^-prec; refines internally and throws
  // PrecisionExhausted past the working cap.
  Interval eval(long prec, long cap = kDefaultMaxPrec) const;
  // Single pass at the given working precision, no width guarantee.
  Interval eval_raw(mpfr_prec_t work_prec) const;

  const std::optional<QElem>& exact() const;
  bool is_exact_zero() const;
  double approx() const { return eval_raw(96).mid_double(); }

  struct Node;  // defined in real_expr.cpp

 private:
  explicit RealExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Doubles working precision (64, 128, 256, ...) until the two enclosures
// separate or symbolic normalization proves identity; Undecided past
// max_precision.
CertifiedOrdering certified_compare(const RealExpr& a, const RealExpr& b,
                                    long max_precision = kDefaultMaxPrec);

struct NearestInt {
  Int m;
  RealExpr dist;  // |x - m| = ||x||
};

// Nearest integer with ties to even; throws UndecidedTie when x cannot be
// separated from a half-integer within max_precision.
NearestInt nearest_int(const RealExpr& x, long max_precision = kDefaultMaxPrec);

// floor(x), certified; throws PrecisionExhausted when x hugs an integer
// beyond max_precision and has no exact form.
Int floor_certified(const RealExpr& x, long max_precision = kDefaultMaxPrec);

}  // namespace dspec
