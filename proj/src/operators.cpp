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

#include "oracle/operators.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace oracle {

namespace {

Rational max_abs_endpoint(std::span<const Interval> ivs) {
  Rational m(0);
  for (const Interval& iv : ivs) {
    m = std::max(m, oracle::abs(iv.lo()));
    m = std::max(m, oracle::abs(iv.hi()));
  }
  return m;
}

Rational min_abs_endpoint(const Interval& iv) {
  return std::min(oracle::abs(iv.lo()), oracle::abs(iv.hi()));
}

}  // namespace

IntervalOperator op_add() {
  return IntervalOperator{
      2, "add",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        return interval_add(v[0], v[1]);
      },
      [](std::span<const Interval>) { return Rational(2); }};
}

IntervalOperator op_neg() {
  return IntervalOperator{
      1, "neg",
      [](std::span<const Interval> v) -> std::optional<Interval> { return interval_neg(v[0]); },
      [](std::span<const Interval>) { return Rational(1); }};
}

IntervalOperator op_sub() {
  return IntervalOperator{
      2, "sub",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        return interval_sub(v[0], v[1]);
      },
      [](std::span<const Interval>) { return Rational(2); }};
}

IntervalOperator op_mul() {
  return IntervalOperator{
      2, "mul",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        return interval_mul(v[0], v[1]);
      },
      [](std::span<const Interval> v) { return 2 * max_abs_endpoint(v); }};
}

IntervalOperator op_recip() {
  return IntervalOperator{
      1, "recip",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        if (v[0].contains_zero()) return std::nullopt;
        return interval_recip(v[0]);
      },
      [](std::span<const Interval> v) {
        Rational m = min_abs_endpoint(v[0]);
        return 1 / (m * m);
      }};
}

IntervalOperator op_div() {
  return IntervalOperator{
      2, "div",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        if (v[1].contains_zero()) return std::nullopt;
        return interval_div(v[0], v[1]);
      },
      [](std::span<const Interval> v) {
        Rational m = std::max(max_abs_endpoint(v.subspan(0, 1)), 1 / min_abs_endpoint(v[1]));
        m = std::max(m, Rational(1));
        return 2 * m * m * m;
      }};
}

IntervalOperator op_pow(long n) {
  if (n == 0) throw std::invalid_argument("interval power 0 is not defined");
  return IntervalOperator{
      1, "pow(" + std::to_string(n) + ")",
      [n](std::span<const Interval> v) -> std::optional<Interval> {
        if (n < 0 && v[0].contains_zero()) return std::nullopt;
        return interval_pow(v[0], n);
      },
      [n](std::span<const Interval> v) {
        if (n > 0) {
          Rational f = max_abs_endpoint(v.subspan(0, 1));
          return n * pow_rational(std::max(f, Rational(1)), n - 1);
        }
        Rational m = min_abs_endpoint(v[0]);
        return -n * pow_rational(1 / m, -n + 1);
      }};
}

IntervalOperator op_distance() {
  return IntervalOperator{
      2, "distance",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        IntervalMetrics m = metrics(v[0], v[1]);
        return Interval(m.separation, m.distance);
      },
      [](std::span<const Interval>) { return Rational(2); }};
}

IntervalOperator op_max(int arity) {
  return IntervalOperator{
      arity, "max",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        Rational lo = v[0].lo(), hi = v[0].hi();
        for (const Interval& iv : v.subspan(1)) {
          lo = std::max(lo, iv.lo());
          hi = std::max(hi, iv.hi());
        }
        return Interval(lo, hi);
      },
      [](std::span<const Interval>) { return Rational(1); }};
}

IntervalOperator op_min(int arity) {
  return IntervalOperator{
      arity, "min",
      [](std::span<const Interval> v) -> std::optional<Interval> {
        Rational lo = v[0].lo(), hi = v[0].hi();
        for (const Interval& iv : v.subspan(1)) {
          lo = std::min(lo, iv.lo());
          hi = std::min(hi, iv.hi());
        }
        return Interval(lo, hi);
      },
      [](std::span<const Interval>) { return Rational(1); }};
}

OracleTuple OracleTuple::of(std::initializer_list<Oracle> oracles) {
  OracleTuple t;
  for (const Oracle& o : oracles) {
    t.starts.push_back(o.start());
    t.elements.push_back(o);
  }
  return t;
}

namespace {

// Refine one oracle's interval until its length fits, stepping over stuck
// midpoints with straddles.
bool refine_to(const Oracle& o, Interval& cur, const Rational& target, Budget& budget) {
  while (cur.length() > target) {
    RefineStep step = refine_step(o, cur, budget);
    if (step.status == RefineStep::Status::Stuck) return false;
    cur = step.interval;
    if (step.status == RefineStep::Status::Root) return true;
  }
  return true;
}

}  // namespace

Oracle lift(IntervalOperator f, OracleTuple args) {
  if (static_cast<int>(args.elements.size()) != f.arity ||
      args.starts.size() != args.elements.size())
    throw std::invalid_argument("operator arity mismatch");
  const std::string domain_message =
      (f.name == "recip" || f.name == "div") ? "possibly zero" : f.name + ": empty domain";

  struct State {
    std::mutex mu;
    std::vector<Interval> tuple;
  };
  auto state = std::make_shared<State>();
  state->tuple = args.starts;
  auto elements = std::make_shared<std::vector<Oracle>>(std::move(args.elements));

  // Probe for a Yes tuple the operator is defined on.
  {
    Budget probe;
    for (int i = 0; i < 256 && !f.apply(state->tuple); ++i) {
      bool any_progress = false;
      for (std::size_t j = 0; j < elements->size(); ++j) {
        RefineStep step = refine_step((*elements)[j], state->tuple[j], probe);
        if (step.status == RefineStep::Status::Stuck) continue;
        if (!(step.interval == state->tuple[j])) any_progress = true;
        state->tuple[j] = step.interval;
      }
      if (!any_progress) throw DomainError(domain_message);
    }
    if (!f.apply(state->tuple)) throw DomainError(domain_message);
  }
  Interval start = *f.apply(state->tuple);

  // With every argument rooted the image collapses to the exact value.
  std::optional<Rational> root;
  if (start.is_singleton()) {
    bool all_rooted = true;
    for (const Oracle& o : *elements)
      if (!o.root_hint()) all_rooted = false;
    if (all_rooted) root = start.lo();
  }

  const Rational lipschitz = std::max(Rational(1), f.lipschitz_bound(state->tuple));
  const int arity = f.arity;
  auto apply = f.apply;
  std::string name = f.name;

  auto shrink = [state, elements, apply, lipschitz, arity](const Rational& eps,
                                                           Budget& budget) -> Interval {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::lock_guard<std::mutex> lock(state->mu);
    Rational target = eps / (arity * lipschitz);
    for (std::size_t j = 0; j < elements->size(); ++j) {
      if (!refine_to((*elements)[j], state->tuple[j], target, budget))
        throw BudgetExceededError("argument refinement stuck");
    }
    auto image = apply(state->tuple);
    if (!image) throw BudgetExceededError("operator left its domain");  // cannot happen: containment
    return *image;
  };

  std::string description = name + "(";
  for (std::size_t j = 0; j < elements->size(); ++j)
    description += (j ? ", " : "") + (*elements)[j].description();
  description += ")";

  Oracle lifted = fonsi_to_oracle(Fonsi{std::move(shrink), description, root});
  return Oracle([lifted](const Interval& iv, Budget& b) { return lifted.query(iv, b); }, start,
                root, description);
}

Oracle add(const Oracle& r, const Oracle& s) { return lift(op_add(), OracleTuple::of({r, s})); }
Oracle neg(const Oracle& r) { return lift(op_neg(), OracleTuple::of({r})); }
Oracle sub(const Oracle& r, const Oracle& s) { return lift(op_sub(), OracleTuple::of({r, s})); }
Oracle mul(const Oracle& r, const Oracle& s) { return lift(op_mul(), OracleTuple::of({r, s})); }
Oracle recip(const Oracle& r) { return lift(op_recip(), OracleTuple::of({r})); }
Oracle div(const Oracle& r, const Oracle& s) { return lift(op_div(), OracleTuple::of({r, s})); }
Oracle pow_int(const Oracle& r, long n) { return lift(op_pow(n), OracleTuple::of({r})); }
Oracle distance(const Oracle& r, const Oracle& s) {
  return lift(op_distance(), OracleTuple::of({r, s}));
}

Oracle sup_rational_set(std::function<bool(const Rational&)> is_member_ge,
                        std::function<bool(const Rational&)> is_upper_bound, Interval seed) {
  struct State {
    std::mutex mu;
    Rational max_not_ub;  // largest point seen failing the upper-bound test
    Rational min_ub;      // smallest point seen passing it
  };
  auto state = std::make_shared<State>();

  auto ub = [state, is_upper_bound](const Rational& q) {
    bool b = is_upper_bound(q);
    std::lock_guard<std::mutex> lock(state->mu);
    if (b)
      state->min_ub = std::min(state->min_ub, q);
    else
      state->max_not_ub = std::max(state->max_not_ub, q);
    if (state->min_ub < state->max_not_ub)
      throw InconsistentPredicatesError("upper-bound test is not monotone");
    return b;
  };

  if (is_upper_bound(seed.lo()))
    throw InconsistentPredicatesError("seed.lo must not be an upper bound");
  if (!is_upper_bound(seed.hi()))
    throw InconsistentPredicatesError("seed.hi must be an upper bound");
  state->max_not_ub = seed.lo();
  state->min_ub = seed.hi();

  auto rule = [state, ub, is_member_ge](const Interval& iv, Budget& budget) -> QueryOutcome {
    if (!ub(iv.hi())) return QueryOutcome::no();  // something in the set exceeds hi
    if (!ub(iv.lo())) return QueryOutcome::yes();
    // lo is itself an upper bound: Yes only when it is the least one. Probe
    // below; any upper bound strictly under lo settles the matter.
    if (!is_member_ge(iv.lo()))
      throw InconsistentPredicatesError("an upper bound sits below every member");
    Rational delta(1);
    for (int i = 0; i < 64; ++i) {
      if (!budget.try_charge()) return QueryOutcome::undecided("budget");
      if (ub(iv.lo() - delta)) return QueryOutcome::no();
      delta /= 2;
    }
    return QueryOutcome::yes();  // no upper bound found below: lo is the supremum
  };
  return Oracle(std::move(rule), seed, std::nullopt, "sup of a rational set");
}

Oracle sup_finite(std::vector<Oracle> oracles) {
  if (oracles.empty()) throw std::invalid_argument("sup of an empty list");
  const int arity = static_cast<int>(oracles.size());
  OracleTuple t;
  for (const Oracle& o : oracles) t.starts.push_back(o.start());
  t.elements = std::move(oracles);
  return lift(op_max(arity), std::move(t));
}

Oracle inf_finite(std::vector<Oracle> oracles) {
  if (oracles.empty()) throw std::invalid_argument("inf of an empty list");
  const int arity = static_cast<int>(oracles.size());
  OracleTuple t;
  for (const Oracle& o : oracles) t.starts.push_back(o.start());
  t.elements = std::move(oracles);
  return lift(op_min(arity), std::move(t));
}

}  // namespace oracle
