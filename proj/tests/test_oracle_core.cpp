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

#include <algorithm>
#include <random>

#include "oracle/constants.hpp"
#include "oracle/oracle.hpp"

using namespace oracle;

namespace {

Rational rat(long n, long d = 1) { return make_rational(Int(n), Int(d)); }
Interval iv(long a, long b) { return Interval(rat(a), rat(b)); }

}  // namespace

TEST_CASE("rational oracle answers containment") {
  Oracle half = rational_oracle(rat(1, 2));
  CHECK(half.query(iv(0, 1)).is_yes());
  CHECK(half.query(Interval::singleton(rat(1, 2))).is_yes());
  CHECK(half.query(iv(2, 3)).is_no());
  CHECK(half.root_hint() == rat(1, 2));
}

TEST_CASE("refine_bisect narrows a root oracle") {
  Oracle root2 = nth_root(rat(2), 2);
  // two average-midpoint steps from 1:2
  Interval got = refine_bisect(root2, iv(1, 2), rat(1, 4));
  CHECK(got == Interval(rat(5, 4), rat(3, 2)));
  CHECK(iv(1, 2).contains(got));
  CHECK(root2.query(got).is_yes());
  // hitting the root exactly stops with the singleton
  Oracle half = rational_oracle(rat(1, 2));
  CHECK(refine_bisect(half, iv(0, 1), rat(1, 1000)) == Interval::singleton(rat(1, 2)));
  // length comes out at exactly eps for powers of two
  for (int k = 1; k <= 6; ++k) {
    Interval fine = refine_bisect(root2, iv(1, 2), pow_rational(rat(1, 2), k));
    CHECK((fine.is_singleton() || fine.length() == pow_rational(rat(1, 2), k)));
  }
  CHECK_THROWS_AS(refine_bisect(root2, iv(3, 4), rat(1, 4)), NotYesIntervalError);
}

TEST_CASE("partition_select finds the unique Yes piece") {
  Oracle root2 = nth_root(rat(2), 2);
  auto r1 = partition_select(root2, iv(1, 2), {rat(5, 4), rat(3, 2)});
  CHECK(std::get<std::size_t>(r1) == 1);
  auto r2 = partition_select(rational_oracle(rat(3, 2)), iv(1, 2), {rat(3, 2)});
  CHECK(std::get<RootAt>(r2) == RootAt{rat(3, 2)});
  auto r3 = partition_select(root2, iv(1, 2), {rat(4, 3)});
  CHECK(std::get<std::size_t>(r3) == 1);
  CHECK_THROWS_AS(partition_select(root2, iv(1, 2), {rat(7)}), std::invalid_argument);
}

TEST_CASE("compare orders square roots") {
  Oracle root2 = nth_root(rat(2), 2);
  Oracle root3 = nth_root(rat(3), 2);
  Comparison c = compare(root2, root3, rat(1, 4), iv(1, 2), iv(1, 2));
  CHECK(c.is_less());
  CHECK(compare(root3, root2, rat(1, 4), iv(1, 2), iv(1, 2)).is_greater());
  CHECK(to_string(c, "root(2,2)", "root(3,2)") == "root(2,2) < root(3,2)");
}

TEST_CASE("compare reports compatibility with a resolution") {
  Oracle a = rational_oracle(rat(2));
  Oracle b = rational_oracle(rat(2));
  Comparison c = compare(a, b, rat(1, 10), a.start(), b.start());
  CHECK(c.is_compatible());
  CHECK(c.resolution() == Interval::singleton(rat(2)));
  CHECK(to_string(c, "a", "b") == "a ? b within [2]");
}

TEST_CASE("ordering of sampled roots is a strict partial order") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(1, 30);
  for (int i = 0; i < 20; ++i) {
    std::vector<long> v{num(rng), num(rng), num(rng)};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) continue;
    Oracle a = nth_root(rat(v[0]), 2), b = nth_root(rat(v[1]), 2), c = nth_root(rat(v[2]), 2);
    CHECK(compare(a, b, rat(1, 1000), a.start(), b.start()).is_less());
    CHECK(compare(b, c, rat(1, 1000), b.start(), c.start()).is_less());
    CHECK(compare(a, c, rat(1, 1000), a.start(), c.start()).is_less());
    CHECK(compare(b, a, rat(1, 1000), b.start(), a.start()).is_greater());
  }
}

TEST_CASE("separate_points") {
  Oracle root2 = nth_root(rat(2), 2);
  Interval s1 = separate_points(root2, iv(1, 2), rat(5, 4), rat(7, 4));
  CHECK(root2.query(s1).is_yes());
  CHECK(iv(1, 2).contains(s1));
  CHECK((!s1.contains(rat(5, 4)) || !s1.contains(rat(7, 4))));

  Oracle q = rational_oracle(rat(3, 2));
  Interval s2 = separate_points(q, iv(1, 2), rat(3, 2), rat(7, 4));
  CHECK(s2 == Interval(rat(1), rat(13, 8)));
  CHECK(!s2.contains(rat(7, 4)));

  Interval s3 = separate_points(root2, iv(1, 2), rat(1), rat(2));
  CHECK(!s3.contains(rat(1)));
  CHECK(!s3.contains(rat(2)));
}

TEST_CASE("No intervals admit disjoint Yes witnesses") {
  Oracle root2 = nth_root(rat(2), 2);
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-16, 48);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    Interval probe(rat(num(rng), 16), rat(num(rng), 16));
    if (!root2.query(probe).is_no()) continue;
    ++found;
    Interval witness = refine_bisect(root2, root2.start(), rat(1, 64));
    for (int k = 0; k < 12 && !disjoint(witness, probe); ++k)
      witness = refine_bisect(root2, witness, witness.length() / 2);
    CHECK(disjoint(witness, probe));
    CHECK(root2.query(witness).is_yes());
  }
  CHECK(found > 0);
}

TEST_CASE("axiom_check passes lawful oracles") {
  CHECK(axiom_check(nth_root(rat(2), 2), {iv(0, 2)}, 100).pass());
  CHECK(axiom_check(rational_oracle(rat(0)), {iv(-1, 1)}, 100).pass());
  CHECK(axiom_check(rational_oracle(rat(2, 3)), {iv(0, 1)}, 100).pass());
}

TEST_CASE("axiom_check flags a rule that is Yes on two disjoint intervals") {
  // "contains sqrt(2) or contains sqrt(3)" breaks separation/disjointness
  auto bad_rule = [](const Interval& x, Budget&) {
    auto holds = [&x](long target) {
      if (x.hi() <= 0) return false;
      Rational lo = std::max(x.lo(), Rational(0));
      return pow_rational(lo, 2) <= target && target <= pow_rational(x.hi(), 2);
    };
    return holds(2) || holds(3) ? QueryOutcome::yes() : QueryOutcome::no();
  };
  Oracle bad(bad_rule, iv(1, 2), std::nullopt, "sqrt2-or-sqrt3");
  AxiomReport report = axiom_check(bad, {iv(1, 2)}, 200);
  CHECK(!report.pass());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.property == "separating" || v.property == "disjoint-yes") found = true;
  CHECK(found);
}

TEST_CASE("Yes intervals intersect pairwise and No intervals union") {
  Oracle root2 = nth_root(rat(2), 2);
  Interval y1 = refine_bisect(root2, iv(0, 2), rat(1, 8));
  Interval y2 = refine_bisect(root2, iv(1, 2), rat(1, 16));
  REQUIRE(!disjoint(y1, y2));
  CHECK(root2.query(*intersect(y1, y2)).is_yes());
  Interval n1(rat(3, 2), rat(7, 4)), n2(rat(13, 8), rat(2));
  REQUIRE(root2.query(n1).is_no());
  REQUIRE(root2.query(n2).is_no());
  CHECK(root2.query(hull(n1, n2)).is_no());
}

TEST_CASE("budget exhaustion reports Undecided") {
  Oracle root2 = nth_root(rat(2), 2);
  Budget tiny(0);
  CHECK(root2.query(iv(1, 2), tiny).is_undecided());
}
