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

#ifndef ORACLE_INTERVAL_HPP
#define ORACLE_INTERVAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include "oracle/rational.hpp"

namespace oracle {

// Inclusive rational interval. Endpoints are sorted on construction, so
// lo <= hi always holds; a singleton has lo == hi.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational a, Rational b);
  static Interval singleton(Rational a) { return Interval(a, a); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_singleton() const { return lo_ == hi_; }
  Rational length() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  // other nested in *this
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool strictly_contains(const Rational& q) const { return lo_ < q && q < hi_; }
  bool strictly_contains(const Interval& o) const {
    return strictly_contains(o.lo_) && strictly_contains(o.hi_);
  }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_, hi_;
};

enum class IntervalRelation {
  Disjoint,
  StrictlyOverlapping,
  NestedFirstInSecond,
  NestedSecondInFirst,
  Equal,
};

IntervalRelation relate(const Interval& x, const Interval& y);
bool disjoint(const Interval& x, const Interval& y);
std::optional<Interval> intersect(const Interval& x, const Interval& y);
Interval hull(const Interval& x, const Interval& y);

struct IntervalMetrics {
  Rational separation;  // 0 when the intervals overlap
  Rational distance;    // max over endpoint differences
};
IntervalMetrics metrics(const Interval& x, const Interval& y);

struct ContainsZeroError : std::domain_error {
  ContainsZeroError() : std::domain_error("interval contains zero") {}
};

Interval interval_add(const Interval& x, const Interval& y);
Interval interval_neg(const Interval& x);
Interval interval_sub(const Interval& x, const Interval& y);
Interval interval_mul(const Interval& x, const Interval& y);
Interval interval_recip(const Interval& x);  // throws ContainsZeroError
Interval interval_div(const Interval& x, const Interval& y);
// n != 0; negative n requires an interval away from zero.
Interval interval_pow(const Interval& x, long n);

enum class DecimalMode { ShortRounding, Truncation, LongRounding, BigUncertainty };

// The interval a decimal string stands for under the given reading.
// Truncation mirrors for negative literals (truncation of the magnitude).
Interval decimal_to_interval(std::string_view text, DecimalMode mode);

// Same, for an already-parsed literal: value = m/10^digits.
Interval decimal_mode_interval(const Rational& value, bool negative_literal, int digits,
                               DecimalMode mode);

// "p/q : r/s" with reduced fractions; singletons print as "p/q".
std::string to_string(const Interval& iv);

// Accepts "p/q:r/s", decimal endpoints, or a single value for a singleton.
Interval parse_interval(std::string_view text);

}  // namespace oracle

#endif  // ORACLE_INTERVAL_HPP
