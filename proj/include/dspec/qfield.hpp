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

#include <map>
#include <optional>
#include <string>

#include "dspec/interval.hpp"
#include "dspec/numbers.hpp"

namespace dspec {

// Element of a real multi-quadratic extension of Q, kept in the canonical
// form sum_s c_s * sqrt(s) over distinct squarefree integers s >= 1 (s = 1 is
// the rational part). Distinct squarefree surds are linearly independent over
// Q, so the zero test is structural and every comparison is exact.
class QElem {
 public:
  QElem() = default;
  QElem(const Rational& r);  // NOLINT: implicit by design
  QElem(const Int& n);       // NOLINT
  QElem(long n) : QElem(Int(n)) {}

  // sqrt(n) for integer n >= 0, canonicalized via squarefree decomposition.
  static QElem sqrt_int(const Int& n);
  // sqrt(x) when it lives in a multi-quadratic field; nullopt otherwise.
  // Requires x >= 0 (checked exactly).
  static std::optional<QElem> sqrt_of(const QElem& x);

  friend QElem operator+(const QElem& a, const QElem& b);
  friend QElem operator-(const QElem& a, const QElem& b);
  friend QElem operator*(const QElem& a, const QElem& b);
  friend QElem operator/(const QElem& a, const QElem& b);  // throws on b == 0
  QElem operator-() const;
  QElem& operator+=(const QElem& o) { return *this = *this + o; }
  QElem& operator-=(const QElem& o) { return *this = *this - o; }
  QElem& operator*=(const QElem& o) { return *this = *this * o; }
  QElem& operator/=(const QElem& o) { return *this = *this / o; }

  QElem inverse() const;  // throws DivisionByZero on zero
  QElem squared() const { return *this * *this; }
  QElem abs() const { return sign() < 0 ? -*this : *this; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  int sign() const;  // exact: -1, 0, +1
  friend int cmp(const QElem& a, const QElem& b) { return (a - b).sign(); }
  friend bool operator==(const QElem& a, const QElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }

  Int floor() const;
  Int ceil() const;
  // Nearest integer, half-integer ties to even (ties only arise for
  // rational values).
  Int round_nearest() const;

  Interval enclosure(mpfr_prec_t prec) const;
  double approx() const { return enclosure(64).mid_double(); }

  const std::map<Int, Rational>& terms() const { return terms_; }
  std::string str() const;

 private:
  void insert_term(const Int& radicand, const Rational& coeff);

  std::map<Int, Rational> terms_;
};

}  // namespace dspec
