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

#include "dspec/cf.hpp"

#include <algorithm>

namespace dspec::cf {

namespace {

// Complete quotients x_0 = alpha, x_{k+1} = 1/(x_k - a_k), carried exactly
// when alpha has a quadratic-field form.
struct ExactExpander {
  QElem x;
  bool done = false;

  Int next() {
    Int a = x.floor();
    QElem frac = x - QElem(a);
    if (frac.is_zero()) {
      done = true;
    } else {
      x = frac.inverse();
    }
    return a;
  }
};

struct IntervalExpander {
  RealExpr x;
  long max_prec;

  Int next() {
    Int a = floor_certified(x, max_prec);
    x = RealExpr(1) / (x - RealExpr(a));
    return a;
  }
};

double upper_bound_double(const Interval& v) {
  mpfr_t up;
  mpfr_init2(up, 64);
  mpfr_set(up, v.hi(), MPFR_RNDU);
  double d = mpfr_get_d(up, MPFR_RNDU);
  mpfr_clear(up);
  return d;
}

}  // namespace

std::vector<Convergent> CFExpansion::convergents() const {
  std::vector<Convergent> out;
  Int p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Int p_cur = a0, q_cur = 1;
  out.push_back({p_cur, q_cur, 0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int p_next = a[i] * p_cur + p_prev;
    Int q_next = a[i] * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    out.push_back({p_cur, q_cur, static_cast<int>(i) + 1});
  }
  return out;
}

CFExpansion cf_expand(const RealExpr& alpha, int n_quotients, long max_prec) {
  if (n_quotients < 0) throw DomainViolation("cf_expand needs N >= 0");
  CFExpansion out;
  out.source = alpha;
  if (alpha.exact().has_value()) {
    ExactExpander ex{*alpha.exact()};
    out.a0 = ex.next();
    for (int i = 0; i < n_quotients && !ex.done; ++i) out.a.push_back(ex.next());
    out.terminated = ex.done;
  } else {
    IntervalExpander ex{alpha, max_prec};
    out.a0 = ex.next();
    // A rational value without an exact form eventually stalls the certified
    // floor and surfaces as PrecisionExhausted.
    for (int i = 0; i < n_quotients; ++i) out.a.push_back(ex.next());
  }
  return out;
}

RealExpr psi1(const RealExpr& alpha, const Rational& t, long max_prec) {
  if (t < 1) throw DomainViolation("psi1 needs t >= 1");
  // Expand until q_{n+1} > t; the convergent chain is the piecewise-constant
  // skeleton, so no scan over q is ever needed.
  int depth = 8;
  while (true) {
    CFExpansion e = cf_expand(alpha, depth, max_prec);
    std::vector<Convergent> cs = e.convergents();
    // Largest n with q_n <= t (a duplicated q_0 = q_1 = 1 picks the later,
    // smaller-distance record).
    int best = -1;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (Rational(cs[i].q) <= t) best = static_cast<int>(i);
    if (best < 0) throw DomainViolation("no convergent denominator <= t");
    bool next_known = best + 1 < static_cast<int>(cs.size());
    if (next_known || e.terminated) {
      const Convergent& c = cs[static_cast<std::size_t>(best)];
      return (RealExpr(c.q) * alpha - RealExpr(c.p)).abs();
    }
    depth *= 2;
  }
}

std::vector<DirichletProduct> dirichlet_products(const RealExpr& alpha, int N,
                                                 long max_prec) {
  if (N < 1) throw DomainViolation("dirichlet_products needs N >= 1");
  CFExpansion e = cf_expand(alpha, N, max_prec);
  std::vector<Convergent> cs = e.convergents();
  std::vector<DirichletProduct> out;
  for (int n = 0; n + 1 < static_cast<int>(cs.size()) && n < N; ++n) {
    const Convergent& c = cs[static_cast<std::size_t>(n)];
    const Convergent& nxt = cs[static_cast<std::size_t>(n) + 1];
    DirichletProduct row;
    row.n = n;
    row.a = n == 0 ? e.a0 : e.a[static_cast<std::size_t>(n) - 1];
    row.q = c.q;
    row.p = c.p;
    row.q_next = nxt.q;
    row.dist = (RealExpr(c.q) * alpha - RealExpr(c.p)).abs();
    row.product = RealExpr(nxt.q) * row.dist;
    out.push_back(row);
  }
  return out;
}

RelationCheck basic_relation_check(const RealExpr& alpha, int n, long prec,
                                   long max_prec) {
  if (n < 1) throw DomainViolation("basic_relation_check needs n >= 1");

  // alpha**_{n+1} = [a_{n+1}; a_n, ..., a_1], a plain rational.
  auto reversed_quotient = [](const CFExpansion& e, int top) {
    Rational v(e.a[static_cast<std::size_t>(top) - 1]);
    for (int k = top - 1; k >= 1; --k)
      v = Rational(e.a[static_cast<std::size_t>(k) - 1]) + Rational(1) / v;
    return v;
  };
  auto lhs_of = [&](const std::vector<Convergent>& cs) {
    const Convergent& c = cs[static_cast<std::size_t>(n)];
    const Convergent& nxt = cs[static_cast<std::size_t>(n) + 1];
    return RealExpr(nxt.q) * (RealExpr(c.q) * alpha - RealExpr(c.p)).abs();
  };

  if (alpha.exact().has_value()) {
    CFExpansion e = cf_expand(alpha, n + 2, max_prec);
    if (e.depth() < n + 2)
      throw DomainViolation("expansion terminated before index n+2");
    RealExpr lhs = lhs_of(e.convergents());
    // Complete quotient alpha_{n+2}, exact.
    ExactExpander ex{*alpha.exact()};
    for (int k = 0; k < n + 2; ++k) {
      ex.next();
      if (ex.done)
        throw DomainViolation("expansion terminated before index n+2");
    }
    RealExpr tail(ex.x);
    RealExpr astar(reversed_quotient(e, n + 1));
    RealExpr rhs = RealExpr(1) / (RealExpr(1) + RealExpr(1) / (tail * astar));
    Interval gap = (lhs - rhs).eval_raw(static_cast<mpfr_prec_t>(prec)).abs();
    return RelationCheck{lhs, rhs, upper_bound_double(gap)};
  }

  // No exact form: enclose the infinite tail alpha_{n+2} between the two
  // truncations [a_{n+2};...;a_T] and [a_{n+2};...;a_T + 1], deepening T
  // until the enclosure is tight.
  int T = n + 12;
  while (true) {
    CFExpansion e = cf_expand(alpha, T, max_prec);
    std::vector<Convergent> cs = e.convergents();
    RealExpr lhs = lhs_of(cs);
    auto tail_value = [&](bool bump_last) {
      int last = e.depth();
      Rational v(e.a[static_cast<std::size_t>(last) - 1] + (bump_last ? 1 : 0));
      for (int k = last - 1; k >= n + 2; --k)
        v = Rational(e.a[static_cast<std::size_t>(k) - 1]) + Rational(1) / v;
      return v;
    };
    Rational t_a = tail_value(false), t_b = tail_value(true);
    Rational astar = reversed_quotient(e, n + 1);
    auto rhs_of = [&](const Rational& t) {
      return Rational(1) / (Rational(1) + Rational(1) / (t * astar));
    };
    Rational r_a = rhs_of(t_a), r_b = rhs_of(t_b);
    Rational r_lo = std::min(r_a, r_b), r_hi = std::max(r_a, r_b);
    if (r_hi - r_lo > Rational(Int(1), Int(1) << 60) && T < n + 2 + 4096) {
      T *= 2;
      continue;
    }
    RealExpr rhs((r_lo + r_hi) / 2);
    Interval li = lhs.eval_raw(static_cast<mpfr_prec_t>(prec));
    Interval span(static_cast<mpfr_prec_t>(prec));
    Interval lo_i =
        Interval::from_rational(r_lo, static_cast<mpfr_prec_t>(prec));
    Interval hi_i =
        Interval::from_rational(r_hi, static_cast<mpfr_prec_t>(prec));
    mpfr_set(span.lo_mut(), lo_i.lo(), MPFR_RNDD);
    mpfr_set(span.hi_mut(), hi_i.hi(), MPFR_RNDU);
    Interval gap = (li - span).abs();
    return RelationCheck{lhs, rhs, upper_bound_double(gap)};
  }
}

double limsup_estimate(const RealExpr& alpha, int N, long max_prec) {
  if (N < 2) throw DomainViolation("limsup_estimate needs N >= 2");
  std::vector<DirichletProduct> rows = dirichlet_products(alpha, N, max_prec);
  if (rows.empty()) throw DomainViolation("expansion produced no products");
  int window = std::max(1, static_cast<int>(rows.size()) / 2);
  double best = 0.0;
  for (std::size_t i = rows.size() - static_cast<std::size_t>(window);
       i < rows.size(); ++i) {
    best = std::max(best, rows[i].product.eval_raw(128).mid_double());
  }
  return best;
}

}  // namespace dspec::cf
