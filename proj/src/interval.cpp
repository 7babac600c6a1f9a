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

#include "oracle/interval.hpp"

#include <algorithm>
#include <utility>

namespace oracle {

Interval::Interval(Rational a, Rational b) : lo_(std::move(a)), hi_(std::move(b)) {
  if (hi_ < lo_) std::swap(lo_, hi_);
}

IntervalRelation relate(const Interval& x, const Interval& y) {
  if (x == y) return IntervalRelation::Equal;
  if (y.contains(x)) return IntervalRelation::NestedFirstInSecond;
  if (x.contains(y)) return IntervalRelation::NestedSecondInFirst;
  // order by lo, then disjoint iff left.hi < right.lo
  const Interval& left = x.lo() <= y.lo() ? x : y;
  const Interval& right = x.lo() <= y.lo() ? y : x;
  if (left.hi() < right.lo()) return IntervalRelation::Disjoint;
  return IntervalRelation::StrictlyOverlapping;
}

bool disjoint(const Interval& x, const Interval& y) {
  return x.hi() < y.lo() || y.hi() < x.lo();
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  if (disjoint(x, y)) return std::nullopt;
  return Interval(std::max(x.lo(), y.lo()), std::min(x.hi(), y.hi()));
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

IntervalMetrics metrics(const Interval& x, const Interval& y) {
  Rational sep(0);
  if (x.hi() < y.lo()) sep = y.lo() - x.hi();
  else if (y.hi() < x.lo()) sep = x.lo() - y.hi();
  Rational d = oracle::abs(x.lo() - y.lo());
  d = std::max(d, oracle::abs(Rational(x.lo() - y.hi())));
  d = std::max(d, oracle::abs(Rational(x.hi() - y.lo())));
  d = std::max(d, oracle::abs(Rational(x.hi() - y.hi())));
  return IntervalMetrics{sep, d};
}

Interval interval_add(const Interval& x, const Interval& y) {
  return Interval(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval interval_neg(const Interval& x) { return Interval(-x.hi(), -x.lo()); }

Interval interval_sub(const Interval& x, const Interval& y) {
  return Interval(x.lo() - y.hi(), x.hi() - y.lo());
}

Interval interval_mul(const Interval& x, const Interval& y) {
  Rational p1 = x.lo() * y.lo(), p2 = x.lo() * y.hi();
  Rational p3 = x.hi() * y.lo(), p4 = x.hi() * y.hi();
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval interval_recip(const Interval& x) {
  if (x.contains_zero()) throw ContainsZeroError();
  return Interval(1 / x.hi(), 1 / x.lo());
}

Interval interval_div(const Interval& x, const Interval& y) {
  return interval_mul(x, interval_recip(y));
}

Interval interval_pow(const Interval& x, long n) {
  if (n == 0) throw std::domain_error("interval power 0 is not defined");
  if (n < 0) {
    if (x.contains_zero()) throw ContainsZeroError();
    return Interval(pow_rational(x.lo(), n), pow_rational(x.hi(), n));
  }
  const Rational& a = x.lo();
  const Rational& b = x.hi();
  if (a >= 0 || b <= 0) {
    // same sign (zero inclusive): endpoint powers
    return Interval(pow_rational(a, n), pow_rational(b, n));
  }
  // mixed sign: one endpoint power and one cross product dominate
  if (-a > b) {
    return Interval(pow_rational(a, n), pow_rational(a, n - 1) * b);
  }
  return Interval(pow_rational(b, n), a * pow_rational(b, n - 1));
}

Interval decimal_mode_interval(const Rational& value, bool negative_literal, int digits,
                               DecimalMode mode) {
  const Rational ulp = pow_rational(Rational(1, 10), digits);
  switch (mode) {
    case DecimalMode::ShortRounding:
      return Interval(value - ulp / 2, value + ulp / 2);
    case DecimalMode::Truncation:
      // truncation of the magnitude, so negative literals mirror
      return negative_literal ? Interval(value - ulp, value) : Interval(value, value + ulp);
    case DecimalMode::LongRounding:
      return Interval(value - ulp, value + ulp);
    case DecimalMode::BigUncertainty:
      return Interval(value - 5 * ulp, value + 5 * ulp);
  }
  throw std::logic_error("bad decimal mode");
}

Interval decimal_to_interval(std::string_view text, DecimalMode mode) {
  DecimalLiteral lit = parse_decimal(text);
  return decimal_mode_interval(lit.value, lit.negative, lit.frac_digits, mode);
}

std::string to_string(const Interval& iv) {
  if (iv.is_singleton()) return to_string(iv.lo());
  return to_string(iv.lo()) + " : " + to_string(iv.hi());
}

Interval parse_interval(std::string_view text) {
  // strip spaces
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    Rational v = parse_rational(s);
    return Interval::singleton(v);
  }
  return Interval(parse_rational(std::string_view(s).substr(0, colon)),
                  parse_rational(std::string_view(s).substr(colon + 1)));
}

}  // namespace oracle
