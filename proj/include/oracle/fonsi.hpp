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

#ifndef ORACLE_FONSI_HPP
#define ORACLE_FONSI_HPP

#include <functional>
#include <utility>

#include "oracle/oracle.hpp"

namespace oracle {

struct NoSmallEnoughError : std::runtime_error {
  explicit NoSmallEnoughError(const std::string& what = "no interval small enough in the family")
      : std::runtime_error(what) {}
};

// Family of overlapping, notionally shrinking intervals, given functionally
// by its shrink rule: shrink(eps) returns a member of length <= eps, and any
// two members intersect. A rooted family exposes its root instead of a
// shrink-to-zero guarantee.
struct Fonsi {
  std::function<Interval(const Rational& eps, Budget&)> shrink;
  std::string description;
  std::optional<Rational> root;
};

// The unique oracle whose Yes intervals include every member of the family.
// A query shrinks the family until a member is nested in the asked interval
// (Yes) or disjoint from it (No); a member straddling an endpoint past the
// budget yields Undecided("boundary").
Oracle fonsi_to_oracle(Fonsi f);

// q_i : q_i + eps_i for the first index whose bound fits. The caller
// guarantees q_m stays inside every earlier interval.
Fonsi from_error_sequence(std::function<Rational(int)> values, std::function<Rational(int)> bounds,
                          std::string description, int index_budget = 1 << 20);

struct SeriesSpec {
  std::function<Rational(int)> term;        // a_i, i >= 0
  std::function<Rational(int)> tail_bound;  // p_n, bound on everything past S_n
};

// Positive series give S_n : S_n + p_n; absolutely convergent (signed) series
// give S_n - p_n : S_n + p_n. Partial sums are memoized.
Fonsi from_series(SeriesSpec spec, bool signed_terms, std::string description);

// Cauchy sequences: the modulus hands back, for a natural M, an index N and
// an interval of length <= 1/M containing every later element. The family of
// these intervals converges to the sequence's limit.
Fonsi from_cauchy(std::function<std::pair<int, Interval>(const Int& M)> modulus,
                  std::string description);

// Nested intervals I_0 >= I_1 >= ... inside 0:1 with I_i a No interval of
// list[j] for every j <= i: an oracle differing from every listed one.
Fonsi anti_diagonal(std::vector<Oracle> list);

}  // namespace oracle

#endif  // ORACLE_FONSI_HPP
