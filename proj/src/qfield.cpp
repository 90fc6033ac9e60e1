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

#include "dspec/qfield.hpp"

#include <utility>

namespace dspec {

namespace {

// Smallest prime factor of a squarefree radicand > 1.
Int smallest_prime_factor(const Int& s) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (s % p == 0) return Int(p);
  }
  if (mpz_probab_prime_p(s.backend().data(), 32) != 0) return s;
  for (Int p = 17; p * p <= s; p += 2) {
    if (s % p == 0) return p;
  }
  return s;
}

}  // namespace

void QElem::insert_term(const Int& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(radicand, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QElem::QElem(const Rational& r) {
  if (r != 0) terms_.emplace(Int(1), r);
}

QElem::QElem(const Int& n) {
  if (n != 0) terms_.emplace(Int(1), Rational(n));
}

QElem QElem::sqrt_int(const Int& n) {
  if (n < 0) throw NegativeSqrt();
  if (n == 0) return QElem();
  SquarefreeSplit s = squarefree_decompose(n);
  QElem out;
  out.insert_term(s.squarefree, Rational(s.root));
  return out;
}

QElem operator+(const QElem& a, const QElem& b) {
  QElem out = a;
  for (const auto& [s, c] : b.terms_) out.insert_term(s, c);
  return out;
}

QElem operator-(const QElem& a, const QElem& b) {
  QElem out = a;
  for (const auto& [s, c] : b.terms_) out.insert_term(s, -c);
  return out;
}

QElem QElem::operator-() const {
  QElem out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

QElem operator*(const QElem& a, const QElem& b) {
  QElem out;
  for (const auto& [s, c] : a.terms_) {
    for (const auto& [t, e] : b.terms_) {
      // sqrt(s)*sqrt(t) = g*sqrt((s/g)(t/g)) with g = gcd(s,t); the product
      // of coprime squarefree numbers is squarefree, so no refactoring.
      Int g = gcd(s, t);
      Int radicand = (s / g) * (t / g);
      out.insert_term(radicand, c * e * Rational(g));
    }
  }
  return out;
}

QElem QElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    QElem out;
    out.insert_term(Int(1), Rational(1) / terms_.begin()->second);
    return out;
  }
  // Split by a prime p dividing some radicand: x = A + sqrt(p)*B with A, B in
  // the p-free subfield. Then 1/x = (A - sqrt(p)B) / (A^2 - p B^2) and the
  // denominator has strictly smaller prime support.
  Int p = 0;
  for (const auto& [s, c] : terms_) {
    if (s > 1) {
      p = smallest_prime_factor(s);
      break;
    }
  }
  QElem a_part, b_part;
  for (const auto& [s, c] : terms_) {
    if (s % p == 0) {
      b_part.insert_term(s / p, c);
    } else {
      a_part.insert_term(s, c);
    }
  }
  QElem sqrt_p;
  sqrt_p.insert_term(p, Rational(1));
  QElem conj = a_part - sqrt_p * b_part;
  QElem norm = a_part * a_part - QElem(Rational(p)) * b_part * b_part;
  // norm = x * conj is nonzero: conjugation is a field automorphism.
  return conj * norm.inverse();
}

QElem operator/(const QElem& a, const QElem& b) { return a * b.inverse(); }

bool QElem::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1;
}

std::optional<Rational> QElem::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (is_rational()) return terms_.begin()->second;
  return std::nullopt;
}

int QElem::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second < 0 ? -1 : 1;
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    std::optional<int> s = enclosure(prec).sign();
    if (s.has_value() && *s != 0) return *s;
  }
  // Unreachable for canonical nonzero elements.
  throw PrecisionExhausted("sign of multi-quadratic element did not separate");
}

Int QElem::floor() const {
  if (auto r = as_rational()) return floor_rat(*r);
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    if (auto f = enclosure(prec).floor_certified()) return *f;
  }
  throw PrecisionExhausted("floor of multi-quadratic element did not certify");
}

Int QElem::ceil() const { return -((-*this).floor()); }

Int QElem::round_nearest() const {
  if (auto r = as_rational()) return round_half_even(*r);
  // Irrational values never tie.
  return (*this + Rational(1, 2)).floor();
}

Interval QElem::enclosure(mpfr_prec_t prec) const {
  Interval acc(prec);
  for (const auto& [s, c] : terms_) {
    Interval term = Interval::from_rational(c, prec);
    if (s != 1) term = term * Interval::from_int(s, prec).sqrt();
    acc = acc + term;
  }
  return acc;
}

std::optional<QElem> QElem::sqrt_of(const QElem& x) {
  int sg = x.sign();
  if (sg < 0) throw NegativeSqrt();
  if (sg == 0) return QElem();
  if (auto r = x.as_rational()) {
    // sqrt(a/b) = sqrt(a*b)/b.
    QElem out = sqrt_int(num(*r) * den(*r));
    return out * QElem(Rational(Int(1), den(*r)));
  }
  // Try y = alpha + beta*sqrt(p) with alpha, beta in the p-free subfield:
  // alpha^2 + p beta^2 = A, 2 alpha beta = B, discriminant A^2 - p B^2.
  Int p = 0;
  for (const auto& [s, c] : x.terms_) {
    if (s > 1) {
      p = smallest_prime_factor(s);
      break;
    }
  }
  QElem a_part, b_part;
  for (const auto& [s, c] : x.terms_) {
    if (s % p == 0) {
      b_part.insert_term(s / p, c);
    } else {
      a_part.insert_term(s, c);
    }
  }
  QElem disc = a_part * a_part - QElem(Rational(p)) * b_part * b_part;
  if (disc.sign() < 0) return std::nullopt;
  std::optional<QElem> delta = sqrt_of(disc);
  if (!delta.has_value()) return std::nullopt;
  QElem sqrt_p;
  sqrt_p.insert_term(p, Rational(1));
  for (int which : {0, 1}) {
    QElem alpha_sq =
        (which == 0 ? a_part + *delta : a_part - *delta) * Rational(1, 2);
    if (alpha_sq.sign() <= 0) continue;
    std::optional<QElem> alpha = sqrt_of(alpha_sq);
    if (!alpha.has_value() || alpha->is_zero()) continue;
    QElem beta = b_part / (QElem(Rational(2)) * *alpha);
    QElem y = *alpha + sqrt_p * beta;
    if ((y * y) == x) return y.sign() < 0 ? -y : y;
  }
  return std::nullopt;
}

std::string QElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += rat_str(c);
    if (s != 1) out += "*sqrt(" + s.str() + ")";
  }
  return out;
}

}  // namespace dspec
