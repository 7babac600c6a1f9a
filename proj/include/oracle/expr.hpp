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

#ifndef ORACLE_EXPR_HPP
#define ORACLE_EXPR_HPP

#include <memory>

#include "oracle/stern_brocot.hpp"

namespace oracle {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := atom ['^' integer] | '-' factor
// atom   := literal | 'pi' | 'e' | 'root' '(' rational ',' integer ')' | '(' expr ')'
// root(q, n) is the n-th root of q: root(2,2) the square root of 2,
// root(11,3) the cube root of 11.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Pi, E, Root, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Rational literal;   // Literal
  int root_n = 0;     // Root
  Rational root_q;    // Root
  long exponent = 0;  // Pow
  ExprPtr a, b;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::string expected)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                           expected),
        offset(offset),
        expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

ExprPtr parse(std::string_view text);
std::string print(const Expr& e);

struct EvalOptions {
  long long budget = Budget::kDefault;
};

Oracle build_oracle(const Expr& e, const EvalOptions& opts = {});

// Yes interval of length <= eps.
Interval eval(const Expr& e, const Rational& eps, const EvalOptions& opts = {});
QueryOutcome member(const Expr& e, const Interval& iv, const EvalOptions& opts = {});
CFExpansion cf(const Expr& e, int terms, const EvalOptions& opts = {});
// "<decimal> ∈ [<lo> : <hi>]": a decimal representative whose mode interval
// provably contains the number.
std::string dec(const Expr& e, int digits, DecimalMode mode, const EvalOptions& opts = {});
Comparison cmp(const Expr& a, const Expr& b, const Rational& eps, const EvalOptions& opts = {});

}  // namespace oracle

#endif  // ORACLE_EXPR_HPP
