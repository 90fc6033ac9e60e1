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

#include <vector>

#include "dspec/real_expr.hpp"

namespace dspec::cf {

struct Convergent {
  Int p;
  Int q;
  int n = 0;
};

// alpha = [a0; a1, a2, ...]. For rational alpha the expansion is the exact
// Euclidean one and may be shorter than requested.
struct CFExpansion {
  Int a0;
  std::vector<Int> a;  // a1..aN, each >= 1
  bool terminated = false;
  RealExpr source;

  // p_n/q_n for n = 0..len; standard recurrence.
  std::vector<Convergent> convergents() const;
  int depth() const { return static_cast<int>(a.size()); }
};

CFExpansion cf_expand(const RealExpr& alpha, int n_quotients,
                      long max_prec = kDefaultMaxPrec);

// psi_alpha(t) = ||q_n alpha|| for the largest convergent denominator
// q_n <= t; never scans all q.
RealExpr psi1(const RealExpr& alpha, const Rational& t,
              long max_prec = kDefaultMaxPrec);

struct DirichletProduct {
  int n = 0;
  Int a;       // a_n
  Int q;       // q_n
  Int p;       // p_n
  Int q_next;  // q_{n+1}
  RealExpr dist;     // ||q_n alpha||
  RealExpr product;  // q_{n+1} * ||q_n alpha||
};

// Products for n = 0..N-1.
std::vector<DirichletProduct> dirichlet_products(
    const RealExpr& alpha, int N, long max_prec = kDefaultMaxPrec);

struct RelationCheck {
  RealExpr lhs;  // q_{n+1} ||q_n alpha||
  RealExpr rhs;  // 1 / (1 + 1/(alpha_{n+2} alpha**_{n+1}))
  // Certified upper bound on |lhs - rhs_true| at the working precision,
  // including the tail-truncation enclosure when alpha has no exact form.
  double gap_bound = 0.0;
};

RelationCheck basic_relation_check(const RealExpr& alpha, int n,
                                   long prec = 256,
                                   long max_prec = kDefaultMaxPrec);

// Windowed max of the Dirichlet products over the trailing N/2 indices.
// An estimator, not a certified limsup.
double limsup_estimate(const RealExpr& alpha, int N,
                       long max_prec = kDefaultMaxPrec);

}  // namespace dspec::cf
