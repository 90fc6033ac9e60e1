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

#include "dspec/real_expr.hpp"

#include <cctype>
#include <vector>

namespace dspec {

struct RealExpr::Node {
  enum class Kind { Literal, Add, Sub, Mul, Div, Neg, Sqrt, Abs };
  Kind kind;
  Rational literal;
  std::shared_ptr<const Node> lhs, rhs;
  std::optional<QElem> exact;
};

namespace {

using Node = RealExpr::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_literal(const Rational& r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->literal = r;
  n->exact = QElem(r);
  return n;
}

NodePtr make_unary(Kind k, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  if (n->lhs->exact.has_value()) {
    const QElem& x = *n->lhs->exact;
    switch (k) {
      case Kind::Neg:
        n->exact = -x;
        break;
      case Kind::Abs:
        n->exact = x.abs();
        break;
      case Kind::Sqrt:
        if (x.sign() < 0) throw NegativeSqrt();
        n->exact = QElem::sqrt_of(x);  // may stay empty
        break;
      default:
        break;
    }
  }
  return n;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  if (k == Kind::Div && n->rhs->exact.has_value() && n->rhs->exact->is_zero())
    throw DivisionByZero();
  if (n->lhs->exact.has_value() && n->rhs->exact.has_value()) {
    const QElem& x = *n->lhs->exact;
    const QElem& y = *n->rhs->exact;
    switch (k) {
      case Kind::Add:
        n->exact = x + y;
        break;
      case Kind::Sub:
        n->exact = x - y;
        break;
      case Kind::Mul:
        n->exact = x * y;
        break;
      case Kind::Div:
        n->exact = x / y;
        break;
      default:
        break;
    }
  }
  return n;
}

Interval eval_node(const Node& n, mpfr_prec_t prec) {
  if (n.exact.has_value()) return n.exact->enclosure(prec);
  switch (n.kind) {
    case Kind::Literal:
      return Interval::from_rational(n.literal, prec);
    case Kind::Add:
      return eval_node(*n.lhs, prec) + eval_node(*n.rhs, prec);
    case Kind::Sub:
      return eval_node(*n.lhs, prec) - eval_node(*n.rhs, prec);
    case Kind::Mul:
      return eval_node(*n.lhs, prec) * eval_node(*n.rhs, prec);
    case Kind::Div:
      return eval_node(*n.lhs, prec) / eval_node(*n.rhs, prec);
    case Kind::Neg:
      return -eval_node(*n.lhs, prec);
    case Kind::Sqrt:
      return eval_node(*n.lhs, prec).sqrt();
    case Kind::Abs:
      return eval_node(*n.lhs, prec).abs();
  }
  throw Error("corrupt expression node");
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Literal:
      out += rat_str(n.literal);
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      const char* op = n.kind == Kind::Add   ? "+"
                       : n.kind == Kind::Sub ? "-"
                       : n.kind == Kind::Mul ? "*"
                                             : "/";
      out += "(";
      out += op;
      out += " ";
      print_node(*n.lhs, out);
      out += " ";
      print_node(*n.rhs, out);
      out += ")";
      return;
    }
    case Kind::Neg:
      out += "(- ";
      print_node(*n.lhs, out);
      out += ")";
      return;
    case Kind::Sqrt:
      out += "(sqrt ";
      print_node(*n.lhs, out);
      out += ")";
      return;
    case Kind::Abs:
      // |x| = sqrt(x*x) keeps the serialization inside the core grammar.
      out += "(sqrt (* ";
      print_node(*n.lhs, out);
      out += " ";
      print_node(*n.lhs, out);
      out += "))";
      return;
  }
}

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  NodePtr parse_expr() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    if (s[pos] == '(') return parse_form();
    return parse_number();
  }

  NodePtr parse_number() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) ||
            s[pos] == '/' || s[pos] == '.'))
      ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return make_literal(parse_rational(s.substr(start, pos - start)));
  }

  NodePtr parse_form() {
    std::size_t open = pos;
    ++pos;  // '('
    skip_ws();
    std::size_t op_start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    std::string_view op = s.substr(op_start, pos - op_start);
    std::vector<NodePtr> args;
    while (true) {
      skip_ws();
      if (pos >= s.size()) throw ParseError("missing ')'", open);
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      args.push_back(parse_expr());
    }
    auto fold = [&](Kind k) {
      NodePtr acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i)
        acc = make_binary(k, acc, args[i]);
      return acc;
    };
    if (op == "+") {
      if (args.empty()) throw ParseError("'+' needs arguments", op_start);
      return fold(Kind::Add);
    }
    if (op == "-") {
      if (args.empty()) throw ParseError("'-' needs arguments", op_start);
      if (args.size() == 1) return make_unary(Kind::Neg, args[0]);
      return fold(Kind::Sub);
    }
    if (op == "*") {
      if (args.empty()) throw ParseError("'*' needs arguments", op_start);
      return fold(Kind::Mul);
    }
    if (op == "/") {
      if (args.size() < 2) throw ParseError("'/' needs two arguments", op_start);
      return fold(Kind::Div);
    }
    if (op == "sqrt") {
      if (args.size() != 1)
        throw ParseError("'sqrt' needs one argument", op_start);
      return make_unary(Kind::Sqrt, args[0]);
    }
    throw ParseError("unknown operator '" + std::string(op) + "'", op_start);
  }
};

}  // namespace

RealExpr::RealExpr(const Rational& r) : node_(make_literal(r)) {}

RealExpr::RealExpr(const QElem& q) {
  // Render the canonical form as a small tree; exactness is preserved.
  NodePtr acc;
  if (q.is_zero()) {
    node_ = make_literal(Rational(0));
    return;
  }
  for (const auto& [s, c] : q.terms()) {
    NodePtr term = make_literal(c);
    if (s != 1)
      term = make_binary(Kind::Mul, term,
                         make_unary(Kind::Sqrt, make_literal(Rational(s))));
    acc = acc ? make_binary(Kind::Add, acc, term) : term;
  }
  node_ = acc;
}

RealExpr RealExpr::parse(std::string_view s) {
  Parser p{s};
  NodePtr n = p.parse_expr();
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return RealExpr(std::move(n));
}

std::string RealExpr::str() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

RealExpr operator+(const RealExpr& a, const RealExpr& b) {
  return RealExpr(make_binary(Kind::Add, a.node_, b.node_));
}
RealExpr operator-(const RealExpr& a, const RealExpr& b) {
  return RealExpr(make_binary(Kind::Sub, a.node_, b.node_));
}
RealExpr operator*(const RealExpr& a, const RealExpr& b) {
  return RealExpr(make_binary(Kind::Mul, a.node_, b.node_));
}
RealExpr operator/(const RealExpr& a, const RealExpr& b) {
  return RealExpr(make_binary(Kind::Div, a.node_, b.node_));
}
RealExpr RealExpr::operator-() const {
  return RealExpr(make_unary(Kind::Neg, node_));
}
RealExpr RealExpr::sqrt(const RealExpr& x) {
  return RealExpr(make_unary(Kind::Sqrt, x.node_));
}
RealExpr RealExpr::abs() const {
  return RealExpr(make_unary(Kind::Abs, node_));
}

Interval RealExpr::eval_raw(mpfr_prec_t work_prec) const {
  return eval_node(*node_, work_prec);
}

Interval RealExpr::eval(long prec, long cap) const {
  for (long work = prec + 16; work <= cap * 2; work *= 2) {
    Interval v = eval_raw(static_cast<mpfr_prec_t>(work));
    if (v.width_below_pow2(prec)) return v;
  }
  throw PrecisionExhausted("could not reach interval width 2^-" +
                           std::to_string(prec) + " for " + str());
}

const std::optional<QElem>& RealExpr::exact() const { return node_->exact; }

bool RealExpr::is_exact_zero() const {
  return node_->exact.has_value() && node_->exact->is_zero();
}

CertifiedOrdering certified_compare(const RealExpr& a, const RealExpr& b,
                                    long max_precision) {
  const std::optional<QElem>& ea = a.exact();
  const std::optional<QElem>& eb = b.exact();
  if (ea.has_value() && eb.has_value()) {
    int c = cmp(*ea, *eb);
    return {c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal};
  }
  RealExpr diff = a - b;
  for (long prec = 64; prec <= max_precision; prec *= 2) {
    std::optional<int> s = diff.eval_raw(static_cast<mpfr_prec_t>(prec)).sign();
    if (s.has_value() && *s != 0)
      return {*s < 0 ? Ordering::Less : Ordering::Greater};
  }
  return {Ordering::Undecided, max_precision};
}

NearestInt nearest_int(const RealExpr& x, long max_precision) {
  if (x.exact().has_value()) {
    Int m = x.exact()->round_nearest();
    return {m, (x - RealExpr(m)).abs()};
  }
  RealExpr shifted = x + RealExpr(Rational(1, 2));
  for (long prec = 64; prec <= max_precision; prec *= 2) {
    std::optional<Int> f =
        shifted.eval_raw(static_cast<mpfr_prec_t>(prec)).floor_certified();
    if (f.has_value()) return {*f, (x - RealExpr(*f)).abs()};
  }
  throw UndecidedTie("nearest integer of " + x.str() +
                     " undecided at max precision " +
                     std::to_string(max_precision));
}

Int floor_certified(const RealExpr& x, long max_precision) {
  if (x.exact().has_value()) return x.exact()->floor();
  for (long prec = 64; prec <= max_precision; prec *= 2) {
    std::optional<Int> f =
        x.eval_raw(static_cast<mpfr_prec_t>(prec)).floor_certified();
    if (f.has_value()) return *f;
  }
  throw PrecisionExhausted("floor of " + x.str() + " undecided");
}

}  // namespace dspec
