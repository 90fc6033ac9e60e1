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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "dspec/qfield.hpp"
#include "dspec/real_expr.hpp"

using namespace dspec;

namespace {

RealExpr E(const char* s) { return RealExpr::parse(s); }

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-50, 50), d(1, 30);
  return Rational(n(rng), d(rng));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(rat_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  CHECK(rat_mul(Rational(3, 6), Rational(1)) == Rational(1, 2));
  CHECK_THROWS_AS(rat_div(Rational(2, 3), Rational(0)), DivisionByZero);
  Rational r = rat_div(Rational(6), Rational(-4));  // canonical: den > 0
  CHECK(den(r) == 2);
  CHECK(num(r) == -3);
  CHECK(rat_str(r) == "-3/2");
  CHECK(parse_rational("6/-4") == r);
}

TEST_CASE("rational + and * are associative/commutative on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng),
             c = rand_rational(rng);
    CHECK(rat_add(a, b) == rat_add(b, a));
    CHECK(rat_mul(a, b) == rat_mul(b, a));
    CHECK(rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c)));
    CHECK(rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c)));
  }
}

TEST_CASE("parse_rational handles fractions and decimals") {
  CHECK(parse_rational("355/113") == Rational(355, 113));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("squarefree decomposition") {
  SquarefreeSplit s = squarefree_decompose(Int(72));  // 72 = 6^2 * 2
  CHECK(s.root == 6);
  CHECK(s.squarefree == 2);
  s = squarefree_decompose(Int(1));
  CHECK(s.root == 1);
  CHECK(s.squarefree == 1);
  // A product of two ~7-digit primes exercises the rho path.
  Int p1("1000003"), p2("1000033");
  s = squarefree_decompose(p1 * p1 * p2);
  CHECK(s.root == p1);
  CHECK(s.squarefree == p2);
}

TEST_CASE("qfield normalizes products of surds") {
  QElem r2 = QElem::sqrt_int(Int(2));
  QElem r8 = QElem::sqrt_int(Int(8));
  CHECK(r8 == QElem(Rational(2)) * r2);
  CHECK((r2 * r2) == QElem(Rational(2)));
  QElem r6 = QElem::sqrt_int(Int(2)) * QElem::sqrt_int(Int(3));
  CHECK(r6 == QElem::sqrt_int(Int(6)));
  // (1+sqrt2)(1-sqrt2) = -1
  QElem x = QElem(Rational(1)) + r2;
  QElem y = QElem(Rational(1)) - r2;
  CHECK((x * y) == QElem(Rational(-1)));
}

TEST_CASE("qfield inversion across mixed radicands") {
  QElem x = QElem(Rational(3, 7)) + QElem::sqrt_int(Int(2)) * Rational(2, 5) -
            QElem::sqrt_int(Int(15)) * Rational(1, 3);
  QElem inv = x.inverse();
  CHECK((x * inv) == QElem(Rational(1)));
  CHECK_THROWS_AS(QElem().inverse(), DivisionByZero);
}

TEST_CASE("qfield sqrt denesting") {
  // sqrt(7 + 4*sqrt(3)) = 2 + sqrt(3)
  QElem inner = QElem(Rational(7)) + QElem::sqrt_int(Int(3)) * Rational(4);
  std::optional<QElem> root = QElem::sqrt_of(inner);
  REQUIRE(root.has_value());
  CHECK(*root == QElem(Rational(2)) + QElem::sqrt_int(Int(3)));
  // sqrt(sqrt(2)) does not live in a quadratic tower over the same basis.
  CHECK_FALSE(QElem::sqrt_of(QElem::sqrt_int(Int(2))).has_value());
}

TEST_CASE("qfield exact floor and sign") {
  QElem x = QElem::sqrt_int(Int(2)) * Rational(5);  // 7.07...
  CHECK(x.floor() == 7);
  CHECK(x.sign() == 1);
  CHECK((-x).floor() == -8);
  QElem tiny = QElem::sqrt_int(Int(2)) - QElem(Rational(141421356, 100000000));
  CHECK(tiny.sign() == 1);  // sqrt2 = 1.41421356237... > 1.41421356
}

TEST_CASE("certified_compare spec examples") {
  CHECK(certified_compare(E("3"), E("(* 2 (sqrt 2))")).outcome ==
        Ordering::Greater);
  CHECK(certified_compare(E("(* (sqrt 2) (sqrt 2))"), E("2")).outcome ==
        Ordering::Equal);
  // 2/sqrt(3) = 1.15470053... > 1.1547
  CHECK(certified_compare(E("(/ 2 (sqrt 3))"), E("1.1547")).outcome ==
        Ordering::Greater);
}

TEST_CASE("certified_compare is antisymmetric on random expression pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng);
    long s1 = std::uniform_int_distribution<long>(2, 20)(rng);
    long s2 = std::uniform_int_distribution<long>(2, 20)(rng);
    RealExpr x = RealExpr(a) + RealExpr::sqrt(RealExpr(s1));
    RealExpr y = RealExpr(b) * RealExpr::sqrt(RealExpr(s2));
    CertifiedOrdering xy = certified_compare(x, y);
    CertifiedOrdering yx = certified_compare(y, x);
    if (xy.outcome == Ordering::Less) CHECK(yx.outcome == Ordering::Greater);
    if (xy.outcome == Ordering::Greater) CHECK(yx.outcome == Ordering::Less);
    if (xy.outcome == Ordering::Equal) CHECK(yx.outcome == Ordering::Equal);
  }
}

TEST_CASE("nearest_int spec examples") {
  NearestInt a = nearest_int(E("(sqrt 2)"));
  CHECK(a.m == 1);
  CHECK(certified_compare(a.dist, E("(- (sqrt 2) 1)")).outcome ==
        Ordering::Equal);
  NearestInt b = nearest_int(E("(* 2 (sqrt 3))"));
  CHECK(b.m == 3);
  CHECK(b.dist.approx() == doctest::Approx(0.464102).epsilon(1e-5));
  NearestInt c = nearest_int(E("7/2"));  // tie -> even
  CHECK(c.m == 4);
  CHECK(certified_compare(c.dist, E("1/2")).outcome == Ordering::Equal);
  NearestInt d = nearest_int(E("5/2"));  // tie -> even, rounding down
  CHECK(d.m == 2);
}

TEST_CASE("nearest_int dist <= 1/2 and Z-periodicity") {
  std::mt19937_64 rng(13);
  RealExpr half(Rational(1, 2));
  for (int i = 0; i < 60; ++i) {
    Rational a = rand_rational(rng);
    long s = std::uniform_int_distribution<long>(2, 30)(rng);
    RealExpr x = RealExpr(a) + RealExpr::sqrt(RealExpr(s));
    NearestInt nx = nearest_int(x);
    CHECK(certified_compare(nx.dist, half).outcome != Ordering::Greater);
    long k = std::uniform_int_distribution<long>(-5, 5)(rng);
    NearestInt nshift = nearest_int(x + RealExpr(k));
    CHECK(nshift.m == nx.m + k);
  }
}

TEST_CASE("expression parse/serialize round trip") {
  const char* exprs[] = {"(/ 2 (sqrt 3))", "(+ 1 (sqrt 5))", "355/113",
                         "(- (/ 1 2))", "(* 3/2 (sqrt 2) (sqrt 3))"};
  for (const char* s : exprs) {
    RealExpr e = RealExpr::parse(s);
    RealExpr back = RealExpr::parse(e.str());
    CHECK(certified_compare(e, back).outcome == Ordering::Equal);
  }
  CHECK_THROWS_AS(RealExpr::parse("bogus"), ParseError);
  CHECK_THROWS_AS(RealExpr::parse("(sqrt 2"), ParseError);
  CHECK_THROWS_AS(RealExpr::parse("(% 1 2)"), ParseError);
}

TEST_CASE("division by a symbolically zero expression throws") {
  CHECK_THROWS_AS(E("(/ 1 (- (* (sqrt 2) (sqrt 2)) 2))"), DivisionByZero);
}

TEST_CASE("sqrt of a certifiably negative expression throws") {
  CHECK_THROWS_AS(E("(sqrt (- 0 2))"), NegativeSqrt);
}

TEST_CASE("interval evaluation reaches requested width") {
  RealExpr x = E("(/ (+ 1 (sqrt 5)) 2)");
  Interval v = x.eval(200);
  CHECK(v.width_below_pow2(200));
  CHECK(v.mid_double() == doctest::Approx(1.6180339887498949));
}

TEST_CASE("interval division straddling zero widens instead of lying") {
  // 1/x with x enclosing 0 at low precision must not certify a sign. The
  // nested radical keeps the expression outside the exact layer.
  RealExpr tiny =
      E("(- (sqrt (sqrt 2)) 1.1892071150027210667174999705604759152)");
  CHECK_FALSE(tiny.exact().has_value());
  RealExpr q = E("1") / tiny;
  Interval v = q.eval_raw(64);
  CHECK_FALSE(v.sign().has_value());
  // Refinement eventually certifies the sign.
  CHECK(certified_compare(q, RealExpr(0)).outcome == Ordering::Greater);
}
