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

#include "oracle/fonsi.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace oracle {

Oracle fonsi_to_oracle(Fonsi f) {
  Budget init(Budget::kDefault);
  Interval start = f.shrink(Rational(1), init);
  auto shrink = f.shrink;
  // Halving past this point cannot decide a practical query; the member is
  // pinned to a query endpoint.
  constexpr int kMaxHalvings = 64;
  auto rule = [shrink](const Interval& iv, Budget& budget) -> QueryOutcome {
    Rational eps = iv.is_singleton() ? Rational(1) : iv.length();
    for (int i = 0; i < kMaxHalvings; ++i) {
      Interval member;
      try {
        member = shrink(eps, budget);
      } catch (const NoSmallEnoughError&) {
        return QueryOutcome::undecided("budget");
      } catch (const BudgetExceededError&) {
        return QueryOutcome::undecided("budget");
      }
      if (iv.contains(member)) return QueryOutcome::yes();
      if (disjoint(member, iv)) return QueryOutcome::no();
      if (!budget.try_charge()) return QueryOutcome::undecided("boundary");
      eps /= 2;
    }
    return QueryOutcome::undecided("boundary");
  };
  return Oracle(std::move(rule), start, f.root, f.description);
}

Fonsi from_error_sequence(std::function<Rational(int)> values, std::function<Rational(int)> bounds,
                          std::string description, int index_budget) {
  struct Memo {
    std::mutex mu;
    std::vector<Rational> value, bound;
  };
  auto memo = std::make_shared<Memo>();
  auto shrink = [values, bounds, memo, index_budget](const Rational& eps, Budget&) -> Interval {
    std::lock_guard<std::mutex> lock(memo->mu);
    for (int i = 0; i < index_budget; ++i) {
      if (static_cast<int>(memo->bound.size()) <= i) memo->bound.push_back(bounds(i));
      const Rational& b = memo->bound[static_cast<std::size_t>(i)];
      if (b <= eps) {
        while (static_cast<int>(memo->value.size()) <= i)
          memo->value.push_back(values(static_cast<int>(memo->value.size())));
        const Rational& v = memo->value[static_cast<std::size_t>(i)];
        return Interval(v, v + b);
      }
    }
    throw NoSmallEnoughError();
  };
  return Fonsi{std::move(shrink), std::move(description), std::nullopt};
}

Fonsi from_series(SeriesSpec spec, bool signed_terms, std::string description) {
  struct Sums {
    std::mutex mu;
    std::vector<Rational> partial;  // partial[n] = sum of terms 0..n
  };
  auto sums = std::make_shared<Sums>();
  auto term = spec.term;
  auto partial_sum = [sums, term](int n) {
    std::lock_guard<std::mutex> lock(sums->mu);
    while (static_cast<int>(sums->partial.size()) <= n) {
      int i = static_cast<int>(sums->partial.size());
      Rational prev = i == 0 ? Rational(0) : sums->partial.back();
      sums->partial.push_back(prev + term(i));
    }
    return sums->partial[static_cast<std::size_t>(n)];
  };
  auto tail = spec.tail_bound;
  if (!signed_terms) {
    return from_error_sequence(partial_sum, tail, std::move(description));
  }
  auto values = [partial_sum, tail](int n) { return partial_sum(n) - tail(n); };
  auto bounds = [tail](int n) { return 2 * tail(n); };
  return from_error_sequence(values, bounds, std::move(description));
}

Fonsi from_cauchy(std::function<std::pair<int, Interval>(const Int& M)> modulus,
                  std::string description) {
  auto shrink = [modulus](const Rational& eps, Budget&) -> Interval {
    Int M = ceil_int(1 / eps);
    if (M < 1) M = 1;
    auto [n, interval] = modulus(M);
    (void)n;
    if (interval.length() * M > 1) throw NoSmallEnoughError("modulus interval too long");
    return interval;
  };
  return Fonsi{std::move(shrink), std::move(description), std::nullopt};
}

Fonsi anti_diagonal(std::vector<Oracle> list) {
  struct Chain {
    std::mutex mu;
    std::vector<Interval> nested;       // nested[i] is a No interval of list[j], j <= i
    std::size_t processed = 0;          // oracles consumed so far
    Interval current{Rational(0), Rational(1)};
  };
  auto chain = std::make_shared<Chain>();
  auto oracles = std::make_shared<std::vector<Oracle>>(std::move(list));

  auto step_against = [](const Oracle& a, const Interval& cur, bool first,
                         Budget& budget) -> Interval {
    QueryOutcome on_cur = a.query(cur, budget);
    if (on_cur.is_undecided()) throw BudgetExceededError("anti-diagonal query undecided");
    const Rational mid = cur.midpoint();
    Interval left(cur.lo(), mid), right(mid, cur.hi());
    if (on_cur.is_no()) return first ? cur : left;  // keep narrowing on later steps
    QueryOutcome ql = a.query(left, budget);
    if (ql.is_undecided()) throw BudgetExceededError("anti-diagonal query undecided");
    if (ql.is_no()) return left;
    QueryOutcome qr = a.query(right, budget);
    if (qr.is_undecided()) throw BudgetExceededError("anti-diagonal query undecided");
    if (qr.is_no()) return right;
    // Both halves Yes, so the midpoint is the root; dodge it entirely.
    return Interval(cur.lo(), (cur.lo() + mid) / 2);
  };

  auto shrink = [chain, oracles, step_against](const Rational& eps, Budget& budget) -> Interval {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::lock_guard<std::mutex> lock(chain->mu);
    while (chain->processed < oracles->size()) {
      bool first = chain->processed == 0;
      chain->current =
          step_against((*oracles)[chain->processed], chain->current, first, budget);
      chain->nested.push_back(chain->current);
      ++chain->processed;
    }
    Interval out = chain->current;
    while (out.length() > eps) out = Interval(out.lo(), out.midpoint());
    return out;
  };
  return Fonsi{std::move(shrink), "anti-diagonal", std::nullopt};
}

}  // namespace oracle
