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

#include "oracle/constants.hpp"
#include "oracle/fonsi.hpp"
#include "oracle/stern_brocot.hpp"

using namespace oracle;

namespace {

Rational rat(long n, long d = 1) { return make_rational(Int(n), Int(d)); }
Interval iv(long a, long b) { return Interval(rat(a), rat(b)); }

Fonsi symmetric_shrinking() {
  // the family -1/n : 1/n
  auto shrink = [](const Rational& eps, Budget&) -> Interval {
    Int n = ceil_int(2 / eps);
    if (n < 1) n = 1;
    return Interval(make_rational(Int(-1), n), make_rational(Int(1), n));
  };
  return Fonsi{shrink, "symmetric around zero", std::nullopt};
}

}  // namespace

TEST_CASE("fonsi members shrink and overlap") {
  std::vector<Fonsi> families;
  families.push_back(symmetric_shrinking());
  families.push_back(e_series());
  families.push_back(pi_bbp());
  families.push_back(newton_root_fonsi(rat(2), 2, rat(141, 100)));
  for (auto& f : families) {
    Budget budget(1'000'000);
    std::vector<Interval> sampled;
    for (int k = 0; k <= 6; ++k) {
      Rational eps = pow_rational(rat(1, 2), 2 * k);
      Interval member = f.shrink(eps, budget);
      CHECK(member.length() <= eps);
      sampled.push_back(member);
    }
    for (std::size_t i = 0; i < sampled.size(); ++i)
      for (std::size_t j = i + 1; j < sampled.size(); ++j)
        CHECK(!disjoint(sampled[i], sampled[j]));
  }
}

TEST_CASE("fonsi_to_oracle classifies against the family") {
  Oracle zeroish = fonsi_to_oracle(symmetric_shrinking());
  CHECK(zeroish.query(iv(-1, 1)).is_yes());
  CHECK(zeroish.query(Interval(rat(1, 3), rat(1, 2))).is_no());
  QueryOutcome q = zeroish.query(iv(0, 1));
  CHECK(q.is_undecided());
  CHECK(q.reason() == "boundary");
  // every family member is a Yes interval of the oracle
  Budget budget;
  Fonsi f = symmetric_shrinking();
  for (int k = 1; k <= 8; ++k)
    CHECK(zeroish.query(f.shrink(pow_rational(rat(1, 2), k), budget)).is_yes());
}

TEST_CASE("from_error_sequence") {
  auto f = from_error_sequence([](int) { return rat(3, 7); },
                               [](int i) { return rat(1, i + 1); }, "constant");
  Budget budget;
  Interval member = f.shrink(rat(1, 10), budget);
  CHECK(member.lo() == rat(3, 7));
  CHECK(member.length() <= rat(1, 10));
  auto stuck = from_error_sequence([](int) { return rat(0); }, [](int) { return rat(1); },
                                   "never shrinks", /*index_budget=*/64);
  CHECK_THROWS_AS(stuck.shrink(rat(1, 2), budget), NoSmallEnoughError);
}

TEST_CASE("from_series: e, hex pi, zero") {
  Budget budget;
  Fonsi e = e_series();
  CHECK(e.shrink(rat(1, 10), budget) == Interval(rat(8, 3), rat(8, 3) + rat(1, 18)));
  CHECK(e.shrink(rat(1, 18), budget) == Interval(rat(8, 3), rat(49, 18)));

  Fonsi pi = pi_bbp();
  CHECK(pi.shrink(rat(1, 10), budget) == Interval(rat(47, 15), rat(47, 15) + rat(1, 15)));

  auto zero = from_series(SeriesSpec{[](int) { return rat(0); }, [](int n) { return rat(1, n + 1); }},
                          false, "zero series");
  Interval z = zero.shrink(rat(1, 100), budget);
  CHECK(z.lo() == 0);
  CHECK(z.length() <= rat(1, 100));

  // signed series bracket the sum from both sides: leibniz pi/4
  auto leibniz = from_series(
      SeriesSpec{[](int i) { return rat(i % 2 == 0 ? 1 : -1, 2 * i + 1); },
                 [](int n) { return rat(1, 2 * n + 3); }},
      true, "pi/4 (alternating)");
  Interval l = leibniz.shrink(rat(1, 50), budget);
  CHECK(l.length() <= rat(1, 50));
  CHECK(l.contains(rat(785, 1000)));  // pi/4 = 0.7853...
}

TEST_CASE("from_cauchy") {
  // constant sequence at q
  auto constant = from_cauchy(
      [](const Int& M) {
        Rational q = make_rational(Int(5), Int(7));
        Rational half = make_rational(Int(1), Int(2 * M));
        return std::make_pair(0, Interval(q - half, q + half));
      },
      "constant 5/7");
  Oracle c = fonsi_to_oracle(constant);
  CHECK(c.query(iv(0, 1)).is_yes());
  CHECK(c.query(iv(2, 3)).is_no());
  Comparison cc = compare(c, rational_oracle(rat(5, 7)), rat(1, 1000), c.start(),
                          Interval::singleton(rat(5, 7)));
  CHECK(cc.is_compatible());

  // mediant convergents of sqrt(2): the Farey interval length is 1/(q s)
  Oracle root2 = nth_root(rat(2), 2);
  auto modulus = [root2](const Int& M) {
    Budget b(1'000'000);
    MediantResult res = mediant_process(root2, canonical_start(), 4096, b);
    int n = 0;
    FareyInterval cur = canonical_start();
    for (const auto& fi : res.intervals) {
      ++n;
      cur = fi;
      if (frac_is_finite(cur.lo) && frac_is_finite(cur.hi) &&
          cur.lo.den * cur.hi.den * 1 >= M * determinant(cur))
        break;
    }
    return std::make_pair(n, Interval(frac_value(cur.lo), frac_value(cur.hi)));
  };
  Oracle via_cauchy = fonsi_to_oracle(from_cauchy(modulus, "sqrt2 mediants"));
  Comparison against_root = compare(via_cauchy, root2, rat(1, 1000), via_cauchy.start(),
                                    Interval(rat(1), rat(2)));
  CHECK(against_root.is_compatible());
  CHECK(against_root.resolution().length() <= rat(1, 1000));

  // partial-sum oracles of e with their tail intervals
  auto e_modulus = [](const Int& M) {
    for (int n = 1;; ++n) {
      Interval member = e_series_interval(n);
      if (member.length() * M <= 1) return std::make_pair(n, member);
    }
  };
  Oracle e_via_cauchy = fonsi_to_oracle(from_cauchy(e_modulus, "e partial sums"));
  Oracle e_direct = fonsi_to_oracle(e_series());
  Comparison ee = compare(e_via_cauchy, e_direct, rat(1, 1'000'000), e_via_cauchy.start(),
                          e_direct.start());
  CHECK(ee.is_compatible());
}

TEST_CASE("anti_diagonal dodges every listed oracle") {
  Budget budget;
  // a rational in the middle: first interval dodges the midpoint
  Fonsi f1 = anti_diagonal({rational_oracle(rat(1, 2))});
  CHECK(f1.shrink(rat(1), budget) == Interval(rat(0), rat(1, 4)));
  // a number outside 0:1 keeps the whole interval at the first step
  Fonsi f2 = anti_diagonal({rational_oracle(rat(2))});
  CHECK(f2.shrink(rat(1), budget) == iv(0, 1));
  // two oracles: the result excludes both, at length <= 1/4
  Fonsi f3 = anti_diagonal({rational_oracle(rat(0)), rational_oracle(rat(1))});
  Interval i1 = f3.shrink(rat(1, 4), budget);
  CHECK(i1.length() <= rat(1, 4));
  CHECK(!i1.contains(rat(0)));
  CHECK(!i1.contains(rat(1)));

  std::vector<Oracle> list = {rational_oracle(rat(1, 2)), rational_oracle(rat(1, 8)),
                              nth_root(rat(1, 2), 2), rational_oracle(rat(3, 16))};
  Fonsi f4 = anti_diagonal(list);
  Interval excl = f4.shrink(rat(1, 64), budget);
  Oracle diag = fonsi_to_oracle(anti_diagonal(list));
  for (const Oracle& o : list) CHECK(o.query(excl).is_no());
  CHECK(diag.query(excl).is_yes());
}

TEST_CASE("fonsis with intersecting members give compatible oracles") {
  Oracle via_series = fonsi_to_oracle(e_series());
  // same number through a second route, shifted index
  auto shifted = from_error_sequence(
      [](int i) { return e_partial_sum(i + 2); },
      [](int i) {
        return rational_from_coprime(Int(1), Int(factorial(static_cast<unsigned long>(i + 2)) *
                                                  (i + 2)));
      },
      "e from index 2");
  Oracle via_shifted = fonsi_to_oracle(shifted);
  Comparison c = compare(via_series, via_shifted, rat(1, 1'000'000), via_series.start(),
                         via_shifted.start());
  CHECK(c.is_compatible());
  CHECK(c.resolution().length() <= rat(1, 1'000'000));
}
