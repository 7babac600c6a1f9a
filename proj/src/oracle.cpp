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

#include "oracle/oracle.hpp"

#include <algorithm>
#include <random>

namespace oracle {

std::string to_string(const QueryOutcome& q) {
  switch (q.kind()) {
    case QueryOutcome::Kind::Yes:
      return "Yes";
    case QueryOutcome::Kind::No:
      return "No";
    case QueryOutcome::Kind::Undecided:
      return "Undecided(" + q.reason() + ")";
  }
  return "?";
}

Oracle::Oracle(Rule rule, Interval start, std::optional<Rational> root_hint,
               std::string description)
    : rule_(std::move(rule)),
      start_(std::move(start)),
      root_hint_(std::move(root_hint)),
      description_(std::move(description)) {}

QueryOutcome Oracle::query(const Interval& iv) const {
  Budget budget;
  return query(iv, budget);
}

QueryOutcome Oracle::query(const Interval& iv, Budget& budget) const {
  if (root_hint_) return iv.contains(*root_hint_) ? QueryOutcome::yes() : QueryOutcome::no();
  if (!budget.try_charge()) return QueryOutcome::undecided("budget");
  return rule_(iv, budget);
}

Oracle rational_oracle(const Rational& q) {
  Rational root = q;
  return Oracle(
      [root](const Interval& iv, Budget&) {
        return iv.contains(root) ? QueryOutcome::yes() : QueryOutcome::no();
      },
      Interval::singleton(q), q, "rational " + to_string(q));
}

RefineStep refine_step(const Oracle& r, const Interval& current, Budget& budget) {
  if (current.is_singleton()) return RefineStep{RefineStep::Status::Root, current, {}};
  const Rational m = current.midpoint();
  QueryOutcome at_m = r.query(Interval::singleton(m), budget);
  if (at_m.is_yes()) return RefineStep{RefineStep::Status::Root, Interval::singleton(m), {}};
  if (at_m.is_undecided()) {
    // The rule cannot settle the midpoint; hug it from both sides instead.
    Interval straddle((current.lo() + m) / 2, (m + current.hi()) / 2);
    QueryOutcome q = r.query(straddle, budget);
    if (q.is_yes()) return RefineStep{RefineStep::Status::Progress, straddle, {}};
    // Off-center cuts clear rules whose families bottom out near the
    // midpoint: a quarter-point is far from the undecidable spot.
    Interval upper((3 * current.lo() + current.hi()) / 4, current.hi());
    if (r.query(upper, budget).is_yes())
      return RefineStep{RefineStep::Status::Progress, upper, {}};
    Interval lower(current.lo(), (current.lo() + 3 * current.hi()) / 4);
    if (r.query(lower, budget).is_yes())
      return RefineStep{RefineStep::Status::Progress, lower, {}};
    return RefineStep{RefineStep::Status::Stuck, current,
                      q.is_no() ? "straddle around undecided midpoint was No" : q.reason()};
  }
  Interval left(current.lo(), m);
  QueryOutcome ql = r.query(left, budget);
  if (ql.is_yes()) return RefineStep{RefineStep::Status::Progress, left, {}};
  Interval right(m, current.hi());
  QueryOutcome qr = r.query(right, budget);
  if (qr.is_yes()) return RefineStep{RefineStep::Status::Progress, right, {}};
  if (ql.is_no() && qr.is_no())
    return RefineStep{RefineStep::Status::Stuck, current, "both halves answered No"};
  return RefineStep{RefineStep::Status::Stuck, current, "budget"};
}

Interval refine_bisect(const Oracle& r, const Interval& start, const Rational& eps,
                       Budget& budget) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  QueryOutcome at_start = r.query(start, budget);
  if (at_start.is_undecided()) throw BudgetExceededError("start undecided: " + at_start.reason());
  if (!at_start.is_yes()) throw NotYesIntervalError();
  Interval cur = start;
  while (cur.length() > eps) {
    RefineStep step = refine_step(r, cur, budget);
    switch (step.status) {
      case RefineStep::Status::Root:
        return step.interval;
      case RefineStep::Status::Progress:
        cur = step.interval;
        break;
      case RefineStep::Status::Stuck:
        throw BudgetExceededError("refinement stuck: " + step.detail);
    }
  }
  return cur;
}

Interval refine_bisect(const Oracle& r, const Interval& start, const Rational& eps) {
  Budget budget;
  return refine_bisect(r, start, eps, budget);
}

PartitionResult partition_select(const Oracle& r, const Interval& yes,
                                 const std::vector<Rational>& cuts, Budget& budget) {
  if (cuts.empty()) throw std::invalid_argument("partition needs at least one cut");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!yes.strictly_contains(cuts[i]))
      throw std::invalid_argument("cut outside the interval interior");
    if (i + 1 < cuts.size() && !(cuts[i] < cuts[i + 1]))
      throw std::invalid_argument("cuts must be strictly increasing");
  }
  for (const Rational& c : cuts) {
    QueryOutcome q = r.query(Interval::singleton(c), budget);
    if (q.is_yes()) return RootAt{c};
    if (q.is_undecided()) throw BudgetExceededError("cut singleton undecided: " + q.reason());
  }
  Rational lo = yes.lo();
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    Rational hi = i < cuts.size() ? cuts[i] : yes.hi();
    QueryOutcome q = r.query(Interval(lo, hi), budget);
    if (q.is_yes()) return i;
    if (q.is_undecided()) throw BudgetExceededError("partition piece undecided: " + q.reason());
    lo = hi;
  }
  throw BudgetExceededError("no piece of the partition answered Yes");
}

PartitionResult partition_select(const Oracle& r, const Interval& yes,
                                 const std::vector<Rational>& cuts) {
  Budget budget;
  return partition_select(r, yes, cuts, budget);
}

namespace {

// Shrinks `cur` (a Yes interval of o) until it is disjoint from `avoid`,
// which is known to be an o-No interval.
std::optional<Interval> refine_off(const Oracle& o, Interval cur, const Interval& avoid,
                                   Budget& budget) {
  for (int i = 0; i < 512; ++i) {
    if (disjoint(cur, avoid)) return cur;
    RefineStep step = refine_step(o, cur, budget);
    if (step.status == RefineStep::Status::Stuck) return std::nullopt;
    cur = step.interval;
    if (step.status == RefineStep::Status::Root)
      return disjoint(cur, avoid) ? std::optional<Interval>(cur) : std::nullopt;
  }
  return std::nullopt;
}

Comparison order_of(const Interval& a, const Interval& b) {
  return a.hi() < b.lo() ? Comparison::less() : Comparison::greater();
}

}  // namespace

Comparison compare(const Oracle& r, const Oracle& s, const Rational& eps,
                   const Interval& r_start, const Interval& s_start, Budget& budget) {
  Interval ir = refine_bisect(r, r_start, eps, budget);
  Interval is = refine_bisect(s, s_start, eps, budget);
  for (int round = 0; round < 64; ++round) {
    if (disjoint(ir, is)) return order_of(ir, is);
    Interval x = *intersect(ir, is);
    QueryOutcome qr = r.query(x, budget);
    QueryOutcome qs = s.query(x, budget);
    if (qr.is_yes() && qs.is_yes()) return Comparison::compatible_within(x);
    // The overlap fails for a side exactly when that side's number lies
    // outside it; walk the side off the overlap and look again.
    if (qr.is_no()) {
      if (auto next = refine_off(r, ir, x, budget)) {
        ir = *next;
        continue;
      }
    }
    if (qs.is_no()) {
      if (auto next = refine_off(s, is, x, budget)) {
        is = *next;
        continue;
      }
    }
    // Undecided overlap: settle for the finest interval both will affirm.
    if (s.query(ir, budget).is_yes()) return Comparison::compatible_within(ir);
    if (r.query(is, budget).is_yes()) return Comparison::compatible_within(is);
    return Comparison::compatible_within(hull(ir, is));
  }
  return Comparison::compatible_within(hull(ir, is));
}

Comparison compare(const Oracle& r, const Oracle& s, const Rational& eps,
                   const Interval& r_start, const Interval& s_start) {
  Budget budget;
  return compare(r, s, eps, r_start, s_start, budget);
}

std::string to_string(const Comparison& c, std::string_view left, std::string_view right) {
  switch (c.kind()) {
    case Comparison::Kind::Less:
      return std::string(left) + " < " + std::string(right);
    case Comparison::Kind::Greater:
      return std::string(left) + " > " + std::string(right);
    case Comparison::Kind::CompatibleWithin:
      return std::string(left) + " ? " + std::string(right) + " within [" +
             to_string(c.resolution()) + "]";
  }
  return "?";
}

Interval separate_points(const Oracle& r, const Interval& yes, const Rational& c,
                         const Rational& d, Budget& budget) {
  if (c == d) throw std::invalid_argument("points must differ");
  if (!yes.contains(c) || !yes.contains(d)) throw std::invalid_argument("points outside interval");
  if (!r.query(yes, budget).is_yes()) throw NotYesIntervalError();
  const Rational m = (c + d) / 2;
  Interval cur = yes;
  QueryOutcome at_m = r.query(Interval::singleton(m), budget);
  if (at_m.is_yes()) return Interval::singleton(m);  // strictly between c and d
  if (at_m.is_no()) {
    // the cut between the points separates them in one stroke
    Interval left(yes.lo(), m), right(m, yes.hi());
    QueryOutcome ql = r.query(left, budget);
    if (ql.is_yes()) {
      cur = left;
    } else {
      QueryOutcome qr = r.query(right, budget);
      if (qr.is_yes()) cur = right;
      else throw BudgetExceededError("neither side of the cut answered Yes");
    }
  }
  // Chase the remaining point out too, unless it is the root itself.
  for (int i = 0; i < 512; ++i) {
    const bool has_c = cur.contains(c), has_d = cur.contains(d);
    if (!has_c && !has_d) return cur;
    if ((has_c && r.root_hint() == c) || (has_d && r.root_hint() == d)) break;
    RefineStep step = refine_step(r, cur, budget);
    if (step.status == RefineStep::Status::Stuck) break;
    cur = step.interval;
    if (step.status == RefineStep::Status::Root) break;
  }
  if (!cur.contains(c) || !cur.contains(d)) return cur;
  throw BudgetExceededError("could not exclude either point");
}

Interval separate_points(const Oracle& r, const Interval& yes, const Rational& c,
                         const Rational& d) {
  Budget budget;
  return separate_points(r, yes, c, d, budget);
}

namespace {

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  Rational fraction() {  // in [0, 1]
    std::uniform_int_distribution<int> den(1, 64);
    int d = den(rng_);
    std::uniform_int_distribution<int> num(0, d);
    return Rational(num(rng_), d);
  }

  Interval subinterval(const Interval& seed) {
    Rational a = seed.lo() + fraction() * seed.length();
    Rational b = seed.lo() + fraction() * seed.length();
    return Interval(a, b);
  }

  Interval expand(const Interval& iv) {
    Rational pad = fraction() + Rational(1, 64);
    return Interval(iv.lo() - pad, iv.hi() + pad);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace

AxiomReport axiom_check(const Oracle& r, const std::vector<Interval>& seeds, int trials,
                        unsigned rng_seed) {
  if (seeds.empty()) throw std::invalid_argument("axiom_check needs at least one seed");
  AxiomReport report;
  Sampler sampler(rng_seed);
  std::vector<Interval> yes_samples;
  std::vector<Interval> no_samples;

  auto record = [&](const std::string& property, const Interval& a, const Interval& b,
                    const std::string& detail) {
    report.violations.push_back(AxiomViolation{property, a, b, detail});
  };

  for (int t = 0; t < trials; ++t) {
    const Interval& seed = seeds[static_cast<std::size_t>(t) % seeds.size()];
    Interval iv = sampler.subinterval(seed);
    Budget budget;
    QueryOutcome q = r.query(iv, budget);
    ++report.checks;
    if (q.is_undecided()) {
      ++report.undecided;
      continue;
    }
    if (q.is_yes()) {
      yes_samples.push_back(iv);
      // Consistency: Yes propagates to containing intervals.
      Interval bigger = sampler.expand(iv);
      QueryOutcome qb = r.query(bigger, budget);
      if (qb.is_no()) record("consistency-up", iv, bigger, "superset of a Yes answered No");
      if (qb.is_undecided()) ++report.undecided;
      // Separation: a partition of a Yes interval has exactly one Yes piece
      // unless a cut is the root.
      if (!iv.is_singleton()) {
        Rational c1 = iv.lo() + iv.length() / 3;
        Rational c2 = iv.lo() + iv.length() * 2 / 3;
        std::vector<Rational> cuts = {c1};
        if (c2 > c1) cuts.push_back(c2);
        bool cut_is_root = false;
        for (const Rational& c : cuts) {
          QueryOutcome qc = r.query(Interval::singleton(c), budget);
          if (qc.is_undecided()) {
            ++report.undecided;
            cut_is_root = true;  // cannot judge the piece count
          } else if (qc.is_yes()) {
            cut_is_root = true;
          }
        }
        if (!cut_is_root) {
          int yes_count = 0;
          bool undecided_piece = false;
          Rational lo = iv.lo();
          for (std::size_t i = 0; i <= cuts.size(); ++i) {
            Rational hi = i < cuts.size() ? cuts[i] : iv.hi();
            QueryOutcome qp = r.query(Interval(lo, hi), budget);
            if (qp.is_yes()) ++yes_count;
            if (qp.is_undecided()) undecided_piece = true;
            lo = hi;
          }
          if (undecided_piece) {
            ++report.undecided;
          } else if (yes_count != 1) {
            record("separating", iv, iv,
                   "partition produced " + std::to_string(yes_count) + " Yes pieces");
          }
        }
      }
    } else {
      no_samples.push_back(iv);
      // Consistency: No propagates to nested intervals.
      Interval smaller = sampler.subinterval(iv);
      QueryOutcome qs = r.query(smaller, budget);
      if (qs.is_yes()) record("consistency-down", iv, smaller, "subset of a No answered Yes");
      if (qs.is_undecided()) ++report.undecided;
    }
  }

  // Disjoint intervals can never both be Yes, and Yes intervals intersect in
  // a Yes interval.
  for (std::size_t i = 0; i < yes_samples.size(); ++i) {
    for (std::size_t j = i + 1; j < yes_samples.size() && j < i + 8; ++j) {
      ++report.checks;
      if (disjoint(yes_samples[i], yes_samples[j])) {
        record("disjoint-yes", yes_samples[i], yes_samples[j],
               "two disjoint intervals both answered Yes");
        continue;
      }
      Budget budget;
      QueryOutcome qi = r.query(*intersect(yes_samples[i], yes_samples[j]), budget);
      if (qi.is_no())
        record("yes-intersection", yes_samples[i], yes_samples[j],
               "intersection of Yes intervals answered No");
      if (qi.is_undecided()) ++report.undecided;
    }
  }
  // Overlapping No intervals union to a No interval.
  for (std::size_t i = 0; i < no_samples.size(); ++i) {
    for (std::size_t j = i + 1; j < no_samples.size() && j < i + 8; ++j) {
      if (disjoint(no_samples[i], no_samples[j])) continue;
      ++report.checks;
      Budget budget;
      QueryOutcome qu = r.query(hull(no_samples[i], no_samples[j]), budget);
      if (qu.is_yes())
        record("no-union", no_samples[i], no_samples[j],
               "union of overlapping No intervals answered Yes");
      if (qu.is_undecided()) ++report.undecided;
    }
  }
  return report;
}

std::string to_string(const AxiomReport& report) {
  std::string out = "checks=" + std::to_string(report.checks) +
                    " undecided=" + std::to_string(report.undecided) +
                    " violations=" + std::to_string(report.violations.size());
  for (const auto& v : report.violations)
    out += "\n  " + v.property + ": " + v.detail + " [" + to_string(v.first) + "] [" +
           to_string(v.second) + "]";
  return out;
}

}  // namespace oracle
