// Copyright 2026 the oraclecalc authors
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

#include "oracle/expr.hpp"

#include <cctype>

#include "oracle/constants.hpp"
#include "oracle/operators.hpp"

namespace oracle {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr literal(Rational q) {
  Expr e;
  e.kind = Expr::Kind::Literal;
  e.literal = std::move(q);
  return make(std::move(e));
}

ExprPtr unary(Expr::Kind kind, ExprPtr a) {
  Expr e;
  e.kind = kind;
  e.a = std::move(a);
  return make(std::move(e));
}

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = kind;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(pos_, what);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (eat('+')) {
        e = binary(Expr::Kind::Add, e, term());
      } else if (eat('-')) {
        e = binary(Expr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (eat('*')) {
        e = binary(Expr::Kind::Mul, e, factor());
      } else if (eat('/')) {
        e = binary(Expr::Kind::Div, e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (eat('-')) return unary(Expr::Kind::Neg, factor());
    ExprPtr base = atom();
    if (eat('^')) {
      long n = integer("integer exponent");
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.exponent = n;
      e.a = std::move(base);
      return make(std::move(e));
    }
    return base;
  }

  long integer(const char* what) {
    skip_ws();
    std::size_t at = pos_;
    bool negative = pos_ < text_.size() && text_[pos_] == '-';
    if (negative) ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(at, what);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return negative ? -v : v;
  }

  ExprPtr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError(at, "literal, constant, or '('");
    char c = text_[pos_];
    if (eat('(')) {
      ExprPtr e = expr();
      expect(')', "')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(at, "literal, constant, or '('");
  }

  // integer, fraction "p/q" (no spaces), or decimal "p.d"
  ExprPtr number() {
    std::size_t at = pos_;
    auto digits = [&] {
      std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return text_.substr(from, pos_ - from);
    };
    std::string_view ip = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::string_view fp = digits();
      return literal(parse_decimal(text_.substr(at, ip.size() + 1 + fp.size())).value);
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::string_view dp = digits();
      Rational q;
      try {
        q = parse_rational(text_.substr(at, ip.size() + 1 + dp.size()));
      } catch (const RationalParseError&) {
        throw ParseError(at, "nonzero denominator");
      }
      return literal(q);
    }
    return literal(parse_rational(ip));
  }

  ExprPtr identifier() {
    std::size_t at = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(at, pos_ - at);
    if (word == "pi") return make(Expr{.kind = Expr::Kind::Pi});
    if (word == "e") return make(Expr{.kind = Expr::Kind::E});
    if (word != "root") throw ParseError(at, "'pi', 'e', or 'root'");
    // root(q, n): the n-th root of the rational q
    expect('(', "'('");
    skip_ws();
    std::size_t qat = pos_;
    bool neg = eat('-');
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(qat, "rational");
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '/' || text_[pos_] == '.'))
      ++pos_;
    Rational q;
    try {
      q = parse_rational(text_.substr(qat + (neg ? 1 : 0), pos_ - qat - (neg ? 1 : 0)));
    } catch (const RationalParseError&) {
      throw ParseError(qat, "rational");
    }
    if (neg) q = -q;
    expect(',', "','");
    std::size_t nat = pos_;
    long n = integer("root index");
    if (n < 1) throw ParseError(nat, "root index >= 1");
    expect(')', "')'");
    Expr e;
    e.kind = Expr::Kind::Root;
    e.root_n = static_cast<int>(n);
    e.root_q = q;
    return make(std::move(e));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string print_prec(const Expr& e, int parent, bool right_side) {
  const int p = precedence(e.kind);
  std::string out;
  switch (e.kind) {
    case Expr::Kind::Literal:
      out = to_string(e.literal);
      break;
    case Expr::Kind::Pi:
      out = "pi";
      break;
    case Expr::Kind::E:
      out = "e";
      break;
    case Expr::Kind::Root:
      out = "root(" + to_string(e.root_q) + ", " + std::to_string(e.root_n) + ")";
      break;
    case Expr::Kind::Neg:
      out = "-" + print_prec(*e.a, p, false);
      break;
    case Expr::Kind::Pow:
      out = print_prec(*e.a, p + 1, false) + "^" + std::to_string(e.exponent);
      break;
    case Expr::Kind::Add:
      out = print_prec(*e.a, p, false) + " + " + print_prec(*e.b, p + 1, true);
      break;
    case Expr::Kind::Sub:
      out = print_prec(*e.a, p, false) + " - " + print_prec(*e.b, p + 1, true);
      break;
    case Expr::Kind::Mul:
      out = print_prec(*e.a, p, false) + " * " + print_prec(*e.b, p + 1, true);
      break;
    case Expr::Kind::Div:
      out = print_prec(*e.a, p, false) + " / " + print_prec(*e.b, p + 1, true);
      break;
  }
  (void)right_side;
  if (p < parent) return "(" + out + ")";
  return out;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) { return print_prec(e, 0, false); }

Oracle build_oracle(const Expr& e, const EvalOptions& opts) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return rational_oracle(e.literal);
    case Expr::Kind::Pi:
      return fonsi_to_oracle(pi_bbp());
    case Expr::Kind::E:
      return fonsi_to_oracle(e_series());
    case Expr::Kind::Root:
      return nth_root(e.root_q, e.root_n);
    case Expr::Kind::Neg:
      return neg(build_oracle(*e.a, opts));
    case Expr::Kind::Add:
      return add(build_oracle(*e.a, opts), build_oracle(*e.b, opts));
    case Expr::Kind::Sub:
      return sub(build_oracle(*e.a, opts), build_oracle(*e.b, opts));
    case Expr::Kind::Mul:
      return mul(build_oracle(*e.a, opts), build_oracle(*e.b, opts));
    case Expr::Kind::Div:
      return div(build_oracle(*e.a, opts), build_oracle(*e.b, opts));
    case Expr::Kind::Pow:
      return pow_int(build_oracle(*e.a, opts), e.exponent);
  }
  throw std::logic_error("bad expression node");
}

Interval eval(const Expr& e, const Rational& eps, const EvalOptions& opts) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Oracle o = build_oracle(e, opts);
  Budget budget(opts.budget);
  return refine_bisect(o, o.start(), eps, budget);
}

QueryOutcome member(const Expr& e, const Interval& iv, const EvalOptions& opts) {
  Oracle o = build_oracle(e, opts);
  Budget budget(opts.budget);
  return o.query(iv, budget);
}

CFExpansion cf(const Expr& e, int terms, const EvalOptions& opts) {
  if (terms < 1) throw std::invalid_argument("need at least one term");
  Oracle o = build_oracle(e, opts);
  Budget budget(opts.budget);
  Interval around = o.start();
  try {
    around = refine_bisect(o, o.start(), Rational(1, 2), budget);
  } catch (const BudgetExceededError&) {
    // keep the coarse interval; integer search below still applies
  }
  // An integer value ends the expansion before any mediant is taken; the
  // walk from n : n+1 would otherwise chase its own endpoint forever.
  for (Int n = floor_int(around.lo()); n <= floor_int(around.hi()) + 1; ++n) {
    if (o.query(Interval::singleton(Rational(n)), budget).is_yes())
      return CFExpansion{{n}, true};
  }
  // Locate the integer Farey interval n : n+1 holding the number.
  for (Int n = floor_int(around.lo()); n <= floor_int(around.hi()) + 1; ++n) {
    if (!o.query(Interval(Rational(n), Rational(n + 1)), budget).is_yes()) continue;
    FareyInterval start{Frac{n, 1}, Frac{n + 1, 1}};
    MediantResult res =
        mediant_process(o, start, /*max_steps=*/1 << 20, budget, /*stop_after_terms=*/terms);
    if (res.exhausted && static_cast<int>(res.cf.terms.size()) < terms)
      throw BudgetExceededError("continued fraction stalled after " + to_string(res.cf));
    return res.cf;
  }
  // No integer interval is affirmed: the number sits undecidably at an
  // integer. Report the stall with the empty partial expansion.
  throw BudgetExceededError("no integer interval affirmed; value may be an integer");
}

std::string dec(const Expr& e, int digits, DecimalMode mode, const EvalOptions& opts) {
  if (digits < 1) throw std::invalid_argument("need at least one digit");
  Oracle o = build_oracle(e, opts);
  Budget budget(opts.budget);
  const Rational ulp = pow_rational(Rational(1, 10), digits);
  const Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
  Interval cur = refine_bisect(o, o.start(), ulp, budget);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // candidates in canonical-first order: the cell under lo, rightward, then
    // one cell left as a final fallback
    std::vector<Int> ks;
    for (Int k = floor_int(cur.lo() * scale); k <= floor_int(cur.hi() * scale) + 1; ++k)
      ks.push_back(k);
    ks.push_back(floor_int(cur.lo() * scale) - 1);
    for (const Int& k : ks) {
      Rational rep = make_rational(k, scale);
      Interval covered = decimal_mode_interval(rep, k < 0, digits, mode);
      if (!covered.contains(cur)) continue;
      const int end_digits = mode == DecimalMode::ShortRounding ? digits + 1 : digits;
      return format_decimal(rep, digits) + " ∈ [" + format_decimal(covered.lo(), end_digits) +
             " : " + format_decimal(covered.hi(), end_digits) + "]";
    }
    // straddling a grid line: narrow further until one cell covers
    RefineStep step = refine_step(o, cur, budget);
    if (step.status == RefineStep::Status::Stuck)
      throw BudgetExceededError("no covering decimal at this precision: " + step.detail);
    cur = step.interval;
  }
  throw BudgetExceededError("no covering decimal at this precision");
}

Comparison cmp(const Expr& a, const Expr& b, const Rational& eps, const EvalOptions& opts) {
  Oracle oa = build_oracle(a, opts);
  Oracle ob = build_oracle(b, opts);
  Budget budget(opts.budget);
  return compare(oa, ob, eps, oa.start(), ob.start(), budget);
}

}  // namespace oracle
