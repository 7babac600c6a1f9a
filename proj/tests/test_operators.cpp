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

#include <doctest.h>

#include <random>
#include <thread>

#include "oracle/constants.hpp"
#include "oracle/operators.hpp"

using namespace oracle;

namespace {

Rational rat(long n, long d = 1) { return make_rational(Int(n), Int(d)); }
Interval iv(long a, long b) { return Interval(rat(a), rat(b)); }

Interval random_interval(std::mt19937& rng, long lo = -40, long hi = 40) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 12);
  Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
  return Interval(a, b);
}

Interval random_nested(std::mt19937& rng, const Interval& outer) {
  std::uniform_int_distribution<long> num(0, 16);
  Rational a = outer.lo() + outer.length() * rat(num(rng), 16);
  Rational b = outer.lo() + outer.length() * rat(num(rng), 16);
  return Interval(a, b);
}

void check_lipschitz(const IntervalOperator& op, std::span<const Interval> outer,
                     std::span<const Interval> nested) {
  auto img_outer = op.apply(outer);
  REQUIRE(img_outer.has_value());
  auto img_nested = op.apply(nested);
  REQUIRE(img_nested.has_value());
  CHECK(img_outer->contains(*img_nested));
  Rational len(0);
  for (const Interval& j : nested) len = std::max(len, j.length());
  CHECK(img_nested->length() <= op.lipschitz_bound(outer) * len);
}

}  // namespace

TEST_CASE("lift: sums and products of roots") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle root3 = nth_root(rat(3), 2);
  Oracle sum = lift(op_add(), OracleTuple{{root2, root3}, {iv(1, 2), iv(1, 2)}});
  CHECK(sum.query(iv(3, 4)).is_yes());
  CHECK(sum.query(iv(0, 1)).is_no());

  Oracle six = mul(rational_oracle(rat(2)), rational_oracle(rat(3)));
  CHECK(six.root_hint() == rat(6));
  CHECK(six.query(Interval::singleton(rat(6))).is_yes());

  Oracle prod = mul(root2, root3);
  Oracle root6 = nth_root(rat(6), 2);
  Comparison c = compare(prod, root6, rat(1, 1'000'000), prod.start(), root6.start());
  CHECK(c.is_compatible());
  CHECK(c.resolution().length() <= rat(1, 1'000'000));
}

TEST_CASE("field operations on rational oracles collapse to the rationals") {
  CHECK(add(rational_oracle(rat(2)), rational_oracle(rat(3)))
            .query(Interval::singleton(rat(5)))
            .is_yes());
  CHECK(sub(rational_oracle(rat(2)), rational_oracle(rat(3))).root_hint() == rat(-1));
  CHECK(div(rational_oracle(rat(1)), rational_oracle(rat(3))).root_hint() == rat(1, 3));
  CHECK(pow_int(rational_oracle(rat(2, 3)), -2).root_hint() == rat(9, 4));
}

TEST_CASE("r + (-r) answers Yes around zero") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle zeroish = add(root2, neg(root2));
  CHECK(zeroish.query(Interval(rat(-1, 1000), rat(1, 1000))).is_yes());
  CHECK(zeroish.query(iv(1, 2)).is_no());
  CHECK(zeroish.query(Interval::singleton(rat(0))).is_undecided());
}

TEST_CASE("squaring the square root undecidably brushes its own value") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle squared = mul(root2, root2);
  CHECK(squared.query(iv(1, 3)).is_yes());
  CHECK(squared.query(iv(3, 4)).is_no());
  CHECK(squared.query(iv(2, 3)).is_undecided());

  Comparison c = compare(squared, rational_oracle(rat(2)), rat(1, 1000), squared.start(),
                         Interval::singleton(rat(2)));
  CHECK(c.is_compatible());
  CHECK(c.resolution().length() <= rat(1, 500));
}

TEST_CASE("reciprocal domain errors") {
  CHECK_THROWS_WITH_AS(recip(rational_oracle(rat(0))), "possibly zero", DomainError);
  Oracle root2 = nth_root(rat(2), 2);
  // sqrt(2)^2 - 2 cannot be separated from zero
  Oracle stuck = sub(mul(root2, root2), rational_oracle(rat(2)));
  CHECK_THROWS_WITH_AS(recip(stuck), "possibly zero", DomainError);
  CHECK_THROWS_WITH_AS(div(rational_oracle(rat(1)), stuck), "possibly zero", DomainError);
  // a divisor that merely starts on a zero-containing interval is fine
  Oracle fine = recip(sub(root2, rational_oracle(rat(1))));
  CHECK(fine.query(iv(2, 3)).is_yes());  // 1/(sqrt(2)-1) = sqrt(2)+1
}

TEST_CASE("field laws hold at resolution") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle e = fonsi_to_oracle(e_series());
  Rational eps = rat(1, 1000);
  auto compatible = [&](const Oracle& a, const Oracle& b) {
    Comparison c = compare(a, b, eps, a.start(), b.start());
    CHECK(c.is_compatible());
    CHECK(c.resolution().length() <= eps);
  };
  compatible(add(root2, e), add(e, root2));
  compatible(mul(root2, e), mul(e, root2));
  compatible(add(add(root2, e), root2), add(root2, add(e, root2)));
  compatible(mul(root2, add(e, root2)), add(mul(root2, e), mul(root2, root2)));
  compatible(add(root2, rational_oracle(rat(0))), root2);
  compatible(mul(root2, rational_oracle(rat(1))), root2);
  compatible(add(root2, neg(root2)), rational_oracle(rat(0)));
  compatible(mul(root2, recip(root2)), rational_oracle(rat(1)));
}

TEST_CASE("order respects the field operations") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle root3 = nth_root(rat(3), 2);
  Oracle e = fonsi_to_oracle(e_series());
  // r < s implies r + t < s + t
  Oracle lhs = add(root2, e), rhs = add(root3, e);
  CHECK(compare(lhs, rhs, rat(1, 1000), lhs.start(), rhs.start()).is_less());
  // positive times positive is positive
  Oracle prod = mul(root2, root3);
  CHECK(compare(rational_oracle(rat(0)), prod, rat(1, 8), Interval::singleton(rat(0)),
                prod.start())
            .is_less());
}

TEST_CASE("sqrt(u) * sqrt(v) is compatible with sqrt(u v)") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> num(1, 100);
  for (int i = 0; i < 6; ++i) {
    Rational u = rat(num(rng), 1 + num(rng) % 10), v = rat(num(rng), 1 + num(rng) % 10);
    Oracle lhs = mul(nth_root(u, 2), nth_root(v, 2));
    Oracle rhs = nth_root(u * v, 2);
    Comparison c = compare(lhs, rhs, rat(1, 10000), lhs.start(), rhs.start());
    CHECK(c.is_compatible());
    CHECK(c.resolution().length() <= rat(1, 10000));
  }
}

TEST_CASE("distance oracle") {
  Oracle d1 = distance(rational_oracle(rat(2)), rational_oracle(rat(5)));
  CHECK(d1.root_hint() == rat(3));
  Oracle root2 = nth_root(rat(2), 2);
  Oracle d2 = distance(root2, root2);
  Comparison c0 = compare(d2, rational_oracle(rat(0)), rat(1, 1000), d2.start(),
                          Interval::singleton(rat(0)));
  CHECK(c0.is_compatible());
  Oracle d3 = distance(root2, rational_oracle(rat(0)));
  Comparison croot = compare(d3, root2, rat(1, 1000), d3.start(), iv(1, 2));
  CHECK(croot.is_compatible());
  CHECK(croot.resolution().length() <= rat(1, 1000));
}

TEST_CASE("distance triangle inequality at resolution") {
  Oracle r = nth_root(rat(2), 2);
  Oracle s = fonsi_to_oracle(e_series());
  Oracle t = rational_oracle(rat(4));
  Rational eps = rat(1, 1000);
  Interval rt = refine_bisect(distance(r, t), distance(r, t).start(), eps);
  Interval rs = refine_bisect(distance(r, s), distance(r, s).start(), eps);
  Interval st = refine_bisect(distance(s, t), distance(s, t).start(), eps);
  CHECK(rt.lo() <= rs.hi() + st.hi() + eps);
}

TEST_CASE("sup_rational_set") {
  // finite set {1, 2, 3}
  Oracle s1 = sup_rational_set([](const Rational& q) { return q >= 1; },
                               [](const Rational& q) { return q >= 3; }, iv(0, 5));
  CHECK(s1.query(Interval::singleton(rat(3))).is_yes());
  CHECK(s1.query(iv(2, 4)).is_yes());
  CHECK(s1.query(iv(0, 2)).is_no());
  CHECK(s1.query(iv(4, 5)).is_no());

  // {q > 0 : q^2 < 2} has the square root of 2 as its bound
  Oracle s2 = sup_rational_set([](const Rational& q) { return q > 0; },
                               [](const Rational& q) { return q > 0 && q * q >= 2; }, iv(1, 2));
  Oracle root2 = nth_root(rat(2), 2);
  Comparison c = compare(s2, root2, rat(1, 1000), iv(1, 2), iv(1, 2));
  CHECK(c.is_compatible());
  CHECK(c.resolution().length() <= rat(1, 1000));

  // {q : q < 5} attains its bound at the rational 5
  Oracle s3 = sup_rational_set([](const Rational&) { return true; },
                               [](const Rational& q) { return q >= 5; }, iv(0, 9));
  CHECK(s3.query(Interval::singleton(rat(5))).is_yes());
  CHECK(s3.query(iv(5, 6)).is_yes());
  CHECK(s3.query(iv(6, 7)).is_no());

  CHECK_THROWS_AS(sup_rational_set([](const Rational&) { return true; },
                                   [](const Rational&) { return true; }, iv(0, 1)),
                  InconsistentPredicatesError);
}

TEST_CASE("sup_finite and inf_finite") {
  Oracle s = sup_finite({rational_oracle(rat(2)), rational_oracle(rat(5)), rational_oracle(rat(3))});
  CHECK(s.root_hint() == rat(5));
  Oracle root2 = nth_root(rat(2), 2), root3 = nth_root(rat(3), 2);
  Oracle s2 = sup_finite({root2, root3});
  Comparison c = compare(s2, root3, rat(1, 1000), s2.start(), root3.start());
  CHECK(c.is_compatible());
  CHECK(c.resolution().length() <= rat(1, 1000));
  Oracle i1 = inf_finite({root2});
  CHECK(i1.query(iv(1, 2)).is_yes());
  CHECK(i1.query(iv(0, 1)).is_no());
}

TEST_CASE("concurrent queries of a shared lifted oracle agree") {
  Oracle prod = mul(nth_root(rat(2), 2), fonsi_to_oracle(e_series()));
  std::vector<Interval> probes;
  std::mt19937 rng(83);
  std::uniform_int_distribution<long> num(0, 64);
  for (int i = 0; i < 24; ++i) probes.emplace_back(rat(num(rng), 8), rat(num(rng), 8));
  auto answers = [&prod, &probes] {
    std::string out;
    for (const Interval& p : probes) out += to_string(prod.query(p))[0];
    return out;
  };
  std::string a, b;
  std::thread t1([&] { a = answers(); });
  std::thread t2([&] { b = answers(); });
  t1.join();
  t2.join();
  CHECK(a == b);
  CHECK(a == answers());
}

TEST_CASE("lipschitz certificates on sampled nested tuples") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    Interval a = random_interval(rng), b = random_interval(rng);
    Interval an = random_nested(rng, a), bn = random_nested(rng, b);
    {
      Interval outer[] = {a, b}, nested[] = {an, bn};
      check_lipschitz(op_add(), outer, nested);
      check_lipschitz(op_sub(), outer, nested);
      check_lipschitz(op_mul(), outer, nested);
      check_lipschitz(op_distance(), outer, nested);
      check_lipschitz(op_max(2), outer, nested);
      check_lipschitz(op_min(2), outer, nested);
    }
    {
      Interval outer[] = {a}, nested[] = {an};
      check_lipschitz(op_neg(), outer, nested);
      check_lipschitz(op_pow(2 + i % 4), outer, nested);
    }
    {
      // away from zero for the reciprocal family
      Interval c(a.lo() + 41, a.hi() + 41);
      Interval cn(an.lo() + 41, an.hi() + 41);
      Interval outer1[] = {c}, nested1[] = {cn};
      check_lipschitz(op_recip(), outer1, nested1);
      check_lipschitz(op_pow(-1 - i % 3), outer1, nested1);
      Interval outer2[] = {b, c}, nested2[] = {bn, cn};
      check_lipschitz(op_div(), outer2, nested2);
    }
  }
}
