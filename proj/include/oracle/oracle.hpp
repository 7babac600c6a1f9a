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

#ifndef ORACLE_ORACLE_HPP
#define ORACLE_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oracle/interval.hpp"

namespace oracle {

// Work counter threaded through every refinement loop. Exhaustion never
// hangs a computation: queries come back Undecided and library operations
// throw BudgetExceededError.
class Budget {
 public:
  static constexpr long long kDefault = 10'000;
  explicit Budget(long long steps = kDefault) : remaining_(steps) {}
  bool try_charge(long long n = 1) {
    if (remaining_ < n) {
      remaining_ = 0;
      return false;
    }
    remaining_ -= n;
    return true;
  }
  long long remaining() const { return remaining_; }

 private:
  long long remaining_;
};

class QueryOutcome {
 public:
  enum class Kind { Yes, No, Undecided };

  static QueryOutcome yes() { return QueryOutcome(Kind::Yes, {}); }
  static QueryOutcome no() { return QueryOutcome(Kind::No, {}); }
  static QueryOutcome undecided(std::string reason) {
    return QueryOutcome(Kind::Undecided, std::move(reason));
  }

  Kind kind() const { return kind_; }
  bool is_yes() const { return kind_ == Kind::Yes; }
  bool is_no() const { return kind_ == Kind::No; }
  bool is_undecided() const { return kind_ == Kind::Undecided; }
  const std::string& reason() const { return reason_; }

 private:
  QueryOutcome(Kind k, std::string r) : kind_(k), reason_(std::move(r)) {}
  Kind kind_;
  std::string reason_;
};

std::string to_string(const QueryOutcome& q);

struct NotYesIntervalError : std::runtime_error {
  NotYesIntervalError() : std::runtime_error("starting interval is not a Yes interval") {}
};
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what = "refinement budget exceeded")
      : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A rule answering membership questions on inclusive rational intervals,
// together with one known Yes interval (the existence witness) and, when
// known, the rational the rule is rooted at. The root hint only short-cuts
// answers that the rule itself would eventually give.
class Oracle {
 public:
  using Rule = std::function<QueryOutcome(const Interval&, Budget&)>;

  Oracle() = default;
  Oracle(Rule rule, Interval start, std::optional<Rational> root_hint = std::nullopt,
         std::string description = "");

  QueryOutcome query(const Interval& iv) const;
  QueryOutcome query(const Interval& iv, Budget& budget) const;

  const Interval& start() const { return start_; }
  const std::optional<Rational>& root_hint() const { return root_hint_; }
  const std::string& description() const { return description_; }

 private:
  Rule rule_;
  Interval start_;
  std::optional<Rational> root_hint_;
  std::string description_;
};

Oracle rational_oracle(const Rational& q);

// One narrowing step: exact-average bisection, answering the midpoint
// singleton first. A midpoint the rule cannot decide is treated as a stuck
// point and stepped over with a symmetric straddle, which still halves the
// interval.
struct RefineStep {
  enum class Status { Progress, Root, Stuck };
  Status status;
  Interval interval;    // valid for Progress/Root
  std::string detail;   // set when Stuck
};
RefineStep refine_step(const Oracle& r, const Interval& current, Budget& budget);

// Yes interval nested in `start` with length <= eps (or the root singleton).
Interval refine_bisect(const Oracle& r, const Interval& start, const Rational& eps);
Interval refine_bisect(const Oracle& r, const Interval& start, const Rational& eps,
                       Budget& budget);

struct RootAt {
  Rational value;
  friend bool operator==(const RootAt&, const RootAt&) = default;
};
using PartitionResult = std::variant<std::size_t, RootAt>;
// Index of the unique Yes piece of the partition of `yes` by `cuts`
// (strictly increasing, strictly inside), or the cut that is a Yes singleton.
PartitionResult partition_select(const Oracle& r, const Interval& yes,
                                 const std::vector<Rational>& cuts, Budget& budget);
PartitionResult partition_select(const Oracle& r, const Interval& yes,
                                 const std::vector<Rational>& cuts);

class Comparison {
 public:
  enum class Kind { Less, Greater, CompatibleWithin };
  static Comparison less() { return Comparison(Kind::Less, std::nullopt); }
  static Comparison greater() { return Comparison(Kind::Greater, std::nullopt); }
  static Comparison compatible_within(Interval resolution) {
    return Comparison(Kind::CompatibleWithin, std::move(resolution));
  }
  Kind kind() const { return kind_; }
  bool is_less() const { return kind_ == Kind::Less; }
  bool is_greater() const { return kind_ == Kind::Greater; }
  bool is_compatible() const { return kind_ == Kind::CompatibleWithin; }
  const Interval& resolution() const { return *resolution_; }

 private:
  Comparison(Kind k, std::optional<Interval> res) : kind_(k), resolution_(std::move(res)) {}
  Kind kind_;
  std::optional<Interval> resolution_;
};

// "a < b", "a > b", or "a ? b within [p/q : r/s]".
std::string to_string(const Comparison& c, std::string_view left, std::string_view right);

// Refine both sides to <= eps, then either produce disjoint witnesses
// (an order) or the shortest mutually-Yes interval found (compatibility).
// Equality is never decided.
Comparison compare(const Oracle& r, const Oracle& s, const Rational& eps,
                   const Interval& r_start, const Interval& s_start);
Comparison compare(const Oracle& r, const Oracle& s, const Rational& eps,
                   const Interval& r_start, const Interval& s_start, Budget& budget);

// Yes interval nested in `yes` that excludes at least one of c, d (both when
// the rule permits), built by midpoint separation.
Interval separate_points(const Oracle& r, const Interval& yes, const Rational& c,
                         const Rational& d, Budget& budget);
Interval separate_points(const Oracle& r, const Interval& yes, const Rational& c,
                         const Rational& d);

struct AxiomViolation {
  std::string property;
  Interval first;
  Interval second;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  int checks = 0;
  int undecided = 0;  // recorded, never counted as a failure
  bool pass() const { return violations.empty(); }
};

// Samples the oracle laws (consistency up/down, separation via partitions,
// pairwise intersection of Yes intervals, union of overlapping No intervals)
// on random intervals drawn from the seeds. Deterministic for a fixed seed.
AxiomReport axiom_check(const Oracle& r, const std::vector<Interval>& seeds, int trials,
                        unsigned rng_seed = 0xC0FFEEu);

std::string to_string(const AxiomReport& report);

}  // namespace oracle

#endif  // ORACLE_ORACLE_HPP
