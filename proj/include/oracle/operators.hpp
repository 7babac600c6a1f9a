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

#ifndef ORACLE_OPERATORS_HPP
#define ORACLE_OPERATORS_HPP

#include <span>

#include "oracle/fonsi.hpp"

namespace oracle {

// Interval map with the narrowing property: containment is preserved and the
// image length is bounded by a constant (depending only on the outer tuple)
// times the input length. apply returns nothing outside the domain.
struct IntervalOperator {
  int arity;
  std::string name;
  std::function<std::optional<Interval>(std::span<const Interval>)> apply;
  std::function<Rational(std::span<const Interval>)> lipschitz_bound;
};

IntervalOperator op_add();
IntervalOperator op_neg();
IntervalOperator op_sub();
IntervalOperator op_mul();
IntervalOperator op_recip();
IntervalOperator op_div();
IntervalOperator op_pow(long n);  // n != 0
// separation : distance of the two argument intervals
IntervalOperator op_distance();
IntervalOperator op_max(int arity);
IntervalOperator op_min(int arity);

struct OracleTuple {
  std::vector<Oracle> elements;
  std::vector<Interval> starts;  // one Yes interval each

  static OracleTuple of(std::initializer_list<Oracle> oracles);
};

// The oracle operator of a narrowing interval operator: its Yes intervals
// come from images of Yes tuples, refined by bisecting the inputs on the
// schedule the Lipschitz bound dictates. Throws DomainError when no Yes
// tuple inside the starts reaches the operator's domain.
Oracle lift(IntervalOperator f, OracleTuple args);

Oracle add(const Oracle& r, const Oracle& s);
Oracle neg(const Oracle& r);
Oracle sub(const Oracle& r, const Oracle& s);
Oracle mul(const Oracle& r, const Oracle& s);
Oracle recip(const Oracle& r);  // DomainError("possibly zero") when 0 cannot be excluded
Oracle div(const Oracle& r, const Oracle& s);
Oracle pow_int(const Oracle& r, long n);

// Greatest lower bound of all endpoint distances between Yes intervals.
Oracle distance(const Oracle& r, const Oracle& s);

// Least upper bound of a rational set given by predicates:
//   is_member_ge(q)   -- q is >= some member
//   is_upper_bound(q) -- q is >= every member
// The seed brackets it: seed.lo not an upper bound, seed.hi one.
struct InconsistentPredicatesError : std::runtime_error {
  explicit InconsistentPredicatesError(const std::string& what) : std::runtime_error(what) {}
};
Oracle sup_rational_set(std::function<bool(const Rational&)> is_member_ge,
                        std::function<bool(const Rational&)> is_upper_bound, Interval seed);

Oracle sup_finite(std::vector<Oracle> oracles);
Oracle inf_finite(std::vector<Oracle> oracles);

}  // namespace oracle

#endif  // ORACLE_OPERATORS_HPP
