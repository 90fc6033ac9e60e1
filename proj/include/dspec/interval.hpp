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

#include <mpfr.h>

#include <optional>
#include <string>

#include "dspec/numbers.hpp"

namespace dspec {

// Closed interval [lo, hi] with outward-rounded MPFR endpoints. Division by
// an interval containing zero yields the whole line rather than throwing, so
// comparison ladders can keep refining.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_int(const Int& n, mpfr_prec_t prec);
  static Interval from_rational(const Rational& r, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval whole_line(mpfr_prec_t prec);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;
  Interval sqrt() const;  // throws NegativeSqrt if hi < 0; clamps lo to 0
  Interval abs() const;

  mpfr_prec_t prec() const { return prec_; }
  bool is_finite() const;
  bool contains_zero() const;
  // +1 / -1 when the sign is certified, nullopt when 0 is inside.
  std::optional<int> sign() const;
  // hi - lo rounded up, as a double (inf when unbounded).
  double width_upper() const;
  // True when hi - lo <= 2^-bits.
  bool width_below_pow2(long bits) const;
  double mid_double() const;
  // Decimal rendering of the midpoint with the given number of digits.
  std::string str(int digits = 18) const;

  // a < b certified (a.hi < b.lo).
  static bool certainly_less(const Interval& a, const Interval& b);

  // Integer n with n <= x < n+1 when certifiable at this precision.
  std::optional<Int> floor_certified() const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

}  // namespace dspec
