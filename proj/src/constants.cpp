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

#include "oracle/constants.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace oracle {

namespace {

// Exact n-th root of a non-negative integer, when it is one.
std::optional<Int> exact_nth_root(const Int& v, int n) {
  Int root;
  int exact = mpz_root(root.backend().data(), v.backend().data(),
                       static_cast<unsigned long>(n));
  if (exact != 0) return root;
  return std::nullopt;
}

std::optional<Rational> exact_rational_root(const Rational& q, int n) {
  auto rn = exact_nth_root(numerator(q), n);
  if (!rn) return std::nullopt;
  auto rd = exact_nth_root(denominator(q), n);
  if (!rd) return std::nullopt;
  return rational_from_coprime(*rn, *rd);
}

}  // namespace

Oracle nth_root(const Rational& q, int n) {
  if (q <= 0) throw InvalidInputError("nth_root needs q > 0");
  if (n < 1) throw InvalidInputError("nth_root needs n >= 1");
  auto rule = [q, n](const Interval& iv, Budget&) {
    if (iv.hi() <= 0) return QueryOutcome::no();
    Rational lo = std::max(iv.lo(), Rational(0));
    if (pow_rational(lo, n) <= q && q <= pow_rational(iv.hi(), n)) return QueryOutcome::yes();
    return QueryOutcome::no();
  };
  Interval start(Rational(0), std::max(q, Rational(1)));
  return Oracle(std::move(rule), start, exact_rational_root(q, n),
                "root(" + std::to_string(n) + ", " + to_string(q) + ")");
}

std::vector<Rational> newton_iterates(const Rational& q, int n, const Rational& x0, int count) {
  if (q <= 0 || x0 <= 0) throw InvalidInputError("newton iteration needs q > 0, x0 > 0");
  if (n < 1) throw InvalidInputError("newton iteration needs n >= 1");
  std::vector<Rational> xs = {x0};
  for (int i = 0; i < count; ++i) {
    const Rational& x = xs.back();
    Rational partner = q / pow_rational(x, n - 1);
    xs.push_back(((n - 1) * x + partner) / n);
  }
  return xs;
}

Fonsi newton_root_fonsi(const Rational& q, int n, const Rational& x0) {
  if (q <= 0 || x0 <= 0) throw InvalidInputError("newton_root_fonsi needs q > 0, x0 > 0");
  if (n < 1) throw InvalidInputError("newton_root_fonsi needs n >= 1");
  struct State {
    std::mutex mu;
    std::vector<Interval> intervals;
    Rational guess;
  };
  auto state = std::make_shared<State>();
  state->guess = x0;
  auto shrink = [state, q, n](const Rational& eps, Budget& budget) -> Interval {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::lock_guard<std::mutex> lock(state->mu);
    auto current = [&]() -> const Interval& {
      if (state->intervals.empty()) {
        Rational partner = q / pow_rational(state->guess, n - 1);
        state->intervals.emplace_back(state->guess, partner);
      }
      return state->intervals.back();
    };
    while (current().length() > eps) {
      if (!budget.try_charge()) throw BudgetExceededError("newton refinement budget");
      Rational partner = q / pow_rational(state->guess, n - 1);
      state->guess = ((n - 1) * state->guess + partner) / n;
      Rational next_partner = q / pow_rational(state->guess, n - 1);
      state->intervals.emplace_back(state->guess, next_partner);
    }
    return current();
  };
  return Fonsi{std::move(shrink),
               "newton root(" + std::to_string(n) + ", " + to_string(q) + ")",
               exact_rational_root(q, n)};
}

Rational e_partial_sum(int n) {
  Rational s(0);
  Int fact(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= i;
    s += rational_from_coprime(Int(1), fact);
  }
  return s;
}

Interval e_series_interval(int n) {
  if (n < 1) throw InvalidInputError("series interval needs n >= 1");
  Rational s = e_partial_sum(n);
  Rational p = rational_from_coprime(Int(1), Int(factorial(static_cast<unsigned long>(n)) * n));
  return Interval(s, s + p);
}

Fonsi e_series() {
  auto spec = SeriesSpec{
      [](int i) { return rational_from_coprime(Int(1), factorial(static_cast<unsigned long>(i))); },
      [](int n) {
        // the n = 0 tail has no 1/(n! n) form; anything past S_0 = 1 fits in 2
        if (n == 0) return Rational(2);
        return rational_from_coprime(Int(1), Int(factorial(static_cast<unsigned long>(n)) * n));
      }};
  return from_series(std::move(spec), /*signed_terms=*/false, "e (factorial series)");
}

Interval e_compound_interval(unsigned long n) {
  if (n < 1) throw InvalidInputError("compound interval needs n >= 1");
  Int num = pow_int(Int(n) + 1, n);
  Int den = pow_int(Int(n), n);
  Rational a = make_rational(num, den);
  Rational b = a * make_rational(Int(n) + 1, Int(n));
  return Interval(a, b);
}

Fonsi e_compound() {
  struct Memo {
    std::mutex mu;
    std::map<unsigned long, Interval> by_n;
  };
  auto memo = std::make_shared<Memo>();
  // Power-of-two indices keep the exact powers to a couple dozen squarings.
  // n = 2^24 pins the family down to ~2.4e-7 at the cost of ~50 MB
  // endpoints, enough slack to answer one-in-a-million questions.
  constexpr unsigned long kMaxLog2 = 24;
  auto shrink = [memo](const Rational& eps, Budget& budget) -> Interval {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    for (unsigned long k = 0; k <= kMaxLog2; ++k) {
      unsigned long n = 1ul << k;
      // length = a_n/n < 4/n
      if (make_rational(Int(4), Int(n)) > eps) continue;
      if (!budget.try_charge()) throw BudgetExceededError("compound family budget");
      std::lock_guard<std::mutex> lock(memo->mu);
      auto it = memo->by_n.find(n);
      if (it == memo->by_n.end()) {
        // (n+1)^n / n^n by k squarings: n is a power of two.
        Int base = Int(n) + 1;
        Int acc = base;
        for (unsigned long s = 0; s < k; ++s) acc *= acc;
        Int den = pow_int(Int(n), n);
        Rational a = rational_from_coprime(acc, den);  // gcd(odd, 2^j) = 1
        Rational b = rational_from_coprime(Int(acc * base), Int(den * n));
        it = memo->by_n.emplace(n, Interval(a, b)).first;
      }
      return it->second;
    }
    throw NoSmallEnoughError("compound family capped at n = 2^" + std::to_string(kMaxLog2));
  };
  return Fonsi{std::move(shrink), "e (compound interest)", std::nullopt};
}

Rational pi_bbp_term(int i) {
  Rational inner = Rational(4, 8 * i + 1) - Rational(2, 8 * i + 4) - Rational(1, 8 * i + 5) -
                   Rational(1, 8 * i + 6);
  return inner / pow_rational(Rational(16), i);
}

Rational pi_bbp_partial_sum(int n) {
  Rational s(0);
  for (int i = 0; i <= n; ++i) s += pi_bbp_term(i);
  return s;
}

Interval pi_bbp_interval(int n) {
  Rational s = pi_bbp_partial_sum(n);
  return Interval(s, s + Rational(1) / (15 * pow_rational(Rational(16), n)));
}

Fonsi pi_bbp() {
  auto spec = SeriesSpec{[](int i) { return pi_bbp_term(i); },
                         [](int n) { return Rational(1) / (15 * pow_rational(Rational(16), n)); }};
  return from_series(std::move(spec), /*signed_terms=*/false, "pi (hex series)");
}

Sign sin_sign(const Rational& q, int depth) {
  if (depth < 1) throw InvalidInputError("sin_sign needs depth >= 1");
  if (q == 0) return Sign::Zero;
  // Partial Taylor sum with the Lagrange bound |R| <= |q|^(2k+3)/(2k+3)!.
  Rational sum(0);
  Rational power = q;  // q^(2j+1)
  const Rational q2 = q * q;
  for (int j = 0; j <= depth; ++j) {
    Rational term = power / factorial(static_cast<unsigned long>(2 * j + 1));
    sum += (j % 2 == 0) ? term : -term;
    power *= q2;
  }
  Rational bound = oracle::abs(power) / factorial(static_cast<unsigned long>(2 * depth + 3));
  if (sum - bound > 0) return Sign::Positive;
  if (sum + bound < 0) return Sign::Negative;
  return Sign::Unknown;
}

Oracle ivt_oracle(SignCallback sign_of_f_minus_y, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidInputError("ivt_oracle needs a < b");
  Sign sa = sign_of_f_minus_y(a);
  Sign sb = sign_of_f_minus_y(b);
  if (sa == Sign::Unknown || sb == Sign::Unknown)
    throw InvalidInputError("ivt_oracle cannot sign the endpoints");
  if (sa == sb) throw InvalidInputError("ivt_oracle needs a sign change on a:b");
  Interval domain(a, b);
  auto rule = [sign_of_f_minus_y, domain](const Interval& iv, Budget&) {
    auto x = intersect(iv, domain);
    if (!x) return QueryOutcome::no();
    Sign lo = sign_of_f_minus_y(x->lo());
    Sign hi = sign_of_f_minus_y(x->hi());
    if (lo == Sign::Unknown || hi == Sign::Unknown)
      return QueryOutcome::undecided("sign callback precision");
    if (lo == Sign::Zero || hi == Sign::Zero || lo != hi) return QueryOutcome::yes();
    return QueryOutcome::no();
  };
  return Oracle(std::move(rule), domain, std::nullopt, "ivt root");
}

namespace {

bool collatz_reaches_one(unsigned long long k) {
  // Trajectories for k <= 10^6 stay far below 2^64.
  unsigned long long v = k;
  while (v != 1) {
    v = (v % 2 == 0) ? v / 2 : 3 * v + 1;
  }
  return true;
}

}  // namespace

Oracle collatz_oracle(long long bound) {
  if (bound < 1) throw InvalidInputError("collatz_oracle needs bound >= 1");
  for (long long k = 1; k <= bound; ++k) {
    if (!collatz_reaches_one(static_cast<unsigned long long>(k)))
      return rational_oracle(make_rational(Int(1), Int(k)));  // first counterexample
  }
  Interval known(make_rational(Int(-1), Int(bound)), make_rational(Int(1), Int(bound)));
  auto rule = [known](const Interval& iv, Budget&) {
    if (iv.contains(known)) return QueryOutcome::yes();
    if (disjoint(iv, known)) return QueryOutcome::no();
    return QueryOutcome::undecided("conjecture");
  };
  return Oracle(std::move(rule), known, std::nullopt,
                "collatz(" + std::to_string(bound) + ")");
}

BitSource seeded_bits(unsigned long long seed) {
  auto state = std::make_shared<unsigned long long>(seed ? seed : 0x9E3779B97F4A7C15ull);
  return [state]() {
    // xorshift64*
    unsigned long long x = *state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    *state = x;
    return ((x * 0x2545F4914F6CDD1Dull) >> 63) != 0;
  };
}

Oracle coin_toss_oracle(BitSource bits, const Interval& start) {
  if (start.is_singleton()) throw InvalidInputError("coin toss needs a non-degenerate start");
  struct State {
    BitSource bits;
    Interval current;
  };
  auto state = std::make_shared<State>(State{std::move(bits), start});
  auto rule = [state](const Interval& iv, Budget&) {
    Interval& c = state->current;
    if (iv.contains(c)) return QueryOutcome::yes();
    if (disjoint(iv, c)) return QueryOutcome::no();
    Interval x = *intersect(iv, c);
    const bool cut_left = x.lo() > c.lo();
    const bool cut_right = x.hi() < c.hi();
    if (cut_left && cut_right) {
      // x sits strictly inside: x first, then a flip between the two flanks.
      if (state->bits()) {
        c = x;
        return QueryOutcome::yes();
      }
      c = state->bits() ? Interval(c.lo(), x.lo()) : Interval(x.hi(), c.hi());
      return QueryOutcome::no();
    }
    // x shares one endpoint with c: a single flip decides which piece wins.
    Interval other = cut_left ? Interval(c.lo(), x.lo()) : Interval(x.hi(), c.hi());
    if (state->bits()) {
      c = x;
      return QueryOutcome::yes();
    }
    c = other;
    return QueryOutcome::no();
  };
  return Oracle(std::move(rule), start, std::nullopt, "coin toss");
}

namespace {

Rational witness_scale(const Rational& r, const Rational& gap, int n) {
  Rational n1 = Rational(3) / gap * n * pow_rational(r, n - 1);
  Rational n2 = Rational(3) / gap * pow_rational(r + 1, n);
  return std::max(Rational(1), std::max(n1, n2));
}

}  // namespace

Rational power_witness_below(const Rational& r, const Rational& q, int n) {
  if (r < 0 || q <= 0 || n < 1 || pow_rational(r, n) >= q)
    throw InvalidInputError("power_witness_below needs r >= 0, q > 0, r^n < q");
  Rational N = witness_scale(r, q - pow_rational(r, n), n);
  return r + 1 / N;
}

Rational power_witness_above(const Rational& r, const Rational& q, int n) {
  if (r < 0 || q <= 0 || n < 1 || pow_rational(r, n) <= q)
    throw InvalidInputError("power_witness_above needs r >= 0, q > 0, r^n > q");
  Rational N = witness_scale(r, pow_rational(r, n) - q, n);
  return r - 1 / N;
}

Interval pythagorean_sqrt2_interval(const Rational& t) {
  if (t <= 0 || t >= 1) throw InvalidInputError("pythagorean parameter needs 0 < t < 1");
  Rational one_plus = 1 + t * t;
  return Interval(one_plus / (1 - t * t), one_plus / (2 * t));
}

bool e_denominator_exclusion(unsigned long q) {
  if (q < 1) throw InvalidInputError("denominator must be >= 1");
  // r/q strictly inside S_q : S_q + 1/(q! q) would mean the integer q! r lies
  // strictly between the consecutive integers A = q! q S_q and A + 1.
  Int fact = factorial(q);
  Rational a = Rational(fact) * Rational(static_cast<long>(q)) * e_partial_sum(static_cast<int>(q));
  if (!is_integer(a)) return false;  // would break the whole argument
  Int A = numerator(a);
  // smallest multiple of q! strictly above A
  Int m = (A / fact + 1) * fact;
  return !(m < A + 1);
}

}  // namespace oracle
