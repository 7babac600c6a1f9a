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

#ifndef ORACLE_STERN_BROCOT_HPP
#define ORACLE_STERN_BROCOT_HPP

#include "oracle/oracle.hpp"

namespace oracle {

// Fraction kept as produced, not reduced; den >= 0 with the pseudo-rationals
// +-1/0 allowed as process endpoints.
struct Frac {
  Int num;
  Int den;
  friend bool operator==(const Frac&, const Frac&) = default;
};

bool frac_is_finite(const Frac& f);
Rational frac_value(const Frac& f);  // needs den > 0
bool frac_less(const Frac& a, const Frac& b);
std::string to_string(const Frac& f);

Frac mediant(const Frac& a, const Frac& b);

struct FareyInterval {
  Frac lo;
  Frac hi;
  friend bool operator==(const FareyInterval&, const FareyInterval&) = default;
};

inline FareyInterval canonical_start() { return FareyInterval{{0, 1}, {1, 0}}; }
// bc - ad for lo = a/b, hi = c/d; 1 exactly for true Farey pairs.
Int determinant(const FareyInterval& fi);
Frac mediant(const FareyInterval& fi);

// k-fold mediant in one step: Right replaces the low endpoint (choosing the
// right subinterval k times), Left replaces the high one.
enum class Side { Left, Right };
FareyInterval cf_step(const FareyInterval& fi, Side side, const Int& k);

struct CFExpansion {
  std::vector<Int> terms;  // [a0; a1, a2, ...], a_i >= 1 for i >= 1
  bool exact = false;      // terminated at a rational
};
// "[a0; a1, a2, ...]" with a trailing "..." marker when exact is false.
std::string to_string(const CFExpansion& cf);
// Exact expansions never end in 1 past the first term.
CFExpansion canonical_cf(std::vector<Int> terms, bool exact);

// Bracketing Farey interval after consuming every term from the canonical
// start; exact expansions give the singleton at the final mediant.
FareyInterval cf_eval(const CFExpansion& cf);

struct MediantStep {
  Frac mediant;
  char choice;  // 'L', 'R', '=' (root hit), 'S' (straddle round)
};

struct MediantResult {
  std::vector<FareyInterval> intervals;  // after each step
  std::vector<MediantStep> steps;
  CFExpansion cf;                       // valid from the canonical or n:n+1 starts
  std::optional<Rational> root;
  bool exhausted = false;               // ran out of steps or of oracle budget
  std::optional<Interval> bracket;      // best confident bracket from straddling
};

// The mediant walk: ask the mediant singleton (Yes ends the process at the
// root), then pick the subinterval the oracle confirms, recording run lengths
// of same-side choices as continued-fraction terms. An undecidable mediant
// switches to symmetric straddles around the stuck point and reports the
// bracket it reached.
MediantResult mediant_process(const Oracle& r, const FareyInterval& start, int max_steps,
                              std::optional<int> stop_after_terms = std::nullopt);
MediantResult mediant_process(const Oracle& r, const FareyInterval& start, int max_steps,
                              Budget& budget, std::optional<int> stop_after_terms = std::nullopt);

// State of continued-fraction arithmetic on
//   z = (a + bx + cy + dxy) / (e + fx + gy + hxy).
struct BihomState {
  Int a, b, c, d;
  Int e, f, g, h;
  friend bool operator==(const BihomState&, const BihomState&) = default;
};

enum class GosperOp { Add, Sub, Mul, Div };
BihomState gosper_init(GosperOp op);

enum class Var { X, Y };
// Consume the next continued-fraction term of one input: the substitution
// x = t + 1/x' (resp. y), expanded and cleared of the 1/x'.
BihomState gosper_ingest(const BihomState& st, Var var, const Int& term);

// Corner values z(x,y) for x,y in {0, inf}: a/e, b/f, c/g, d/h. A zero
// denominator makes a corner undefined and blocks extraction.
std::array<std::optional<Int>, 4> gosper_corner_floors(const BihomState& st);

struct GosperExtract {
  std::optional<Int> term;
  BihomState state;  // transformed when a term came out, unchanged otherwise
};
// Emits the common floor of the corners when they all agree, rotating the
// state to z = r + 1/w.
GosperExtract gosper_extract(const BihomState& st);

struct TargetOutsideIntervalError : std::invalid_argument {
  TargetOutsideIntervalError() : std::invalid_argument("target outside the interval") {}
};

struct WeightedMediant {
  Int m, n;  // coprime weights: (m*a + n*c) / (m*b + n*d) = r*e / (r*f)
  Int r;
};
// Solves for the weighted mediant landing exactly on target = e/f inside
// lo : hi; the plain mediant walk reaches that fraction.
WeightedMediant weighted_mediant_solve(const Frac& lo, const Frac& hi, const Frac& target);

}  // namespace oracle

#endif  // ORACLE_STERN_BROCOT_HPP
