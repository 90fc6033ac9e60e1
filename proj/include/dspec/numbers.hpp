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

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "dspec/errors.hpp"

namespace dspec {

// Arbitrary-precision integers and canonical rationals (GMP-backed).
// mpq keeps den > 0 and gcd(|num|, den) = 1 at all times.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
// Throws DivisionByZero when b == 0.
Rational rat_div(const Rational& a, const Rational& b);

// Greatest m with m*m <= n. Requires n >= 0.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);

Int floor_rat(const Rational& r);
Int ceil_rat(const Rational& r);
// Nearest integer, ties to even.
Int round_half_even(const Rational& r);

Int gcd(const Int& a, const Int& b);
Int gcd3(const Int& a, const Int& b, const Int& c);

// Parses "num", "num/den" or a plain decimal like "1.25" / "-0.5e-3" is not
// supported; exponents are out of scope. Throws ParseError.
Rational parse_rational(std::string_view s);

// "num/den" for non-integers, plain "num" otherwise.
std::string rat_str(const Rational& r);
std::string int_str(const Int& n);

// Splits n > 0 as n = root^2 * squarefree. Complete factorization via trial
// division and Pollard rho; throws PrecisionExhausted if the rho budget runs
// out (not reachable at the magnitudes this artifact produces).
struct SquarefreeSplit {
  Int root;
  Int squarefree;
};
SquarefreeSplit squarefree_decompose(const Int& n);

}  // namespace dspec
