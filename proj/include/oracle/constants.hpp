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

#ifndef ORACLE_CONSTANTS_HPP
#define ORACLE_CONSTANTS_HPP

#include <functional>
#include <vector>

#include "oracle/fonsi.hpp"

namespace oracle {

struct InvalidInputError : std::invalid_argument {
  explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// Positive n-th root of q > 0: Yes on a:b exactly when b > 0 and
// max(a,0)^n <= q <= b^n. Fully decidable; never Undecided.
Oracle nth_root(const Rational& q, int n);

// Guess/partner intervals x : q/x^(n-1) with the weighted-average update
// ((n-1)x + q/x^(n-1))/n. Quadratic convergence once close.
Fonsi newton_root_fonsi(const Rational& q, int n, const Rational& x0);
std::vector<Rational> newton_iterates(const Rational& q, int n, const Rational& x0, int count);

// e as the factorial series: S_n : S_n + 1/(n! n).
Fonsi e_series();
Rational e_partial_sum(int n);
Interval e_series_interval(int n);

// e as compound interest: (1+1/n)^n : (1+1/n)^(n+1). Converges like 4/n, so
// the family is only evaluated at power-of-two indices to keep the exact
// powers tractable.
Fonsi e_compound();
Interval e_compound_interval(unsigned long n);

// pi by the hexadecimal series with tail bound 1/(15*16^n).
Fonsi pi_bbp();
Rational pi_bbp_partial_sum(int n);
Interval pi_bbp_interval(int n);

enum class Sign { Negative, Zero, Positive, Unknown };

// Sign of sin(q) from alternating Taylor partial sums with the rigorous
// next-term remainder; exact rational arithmetic only. Unknown when the
// bracket still straddles zero at the given depth.
Sign sin_sign(const Rational& q, int depth = 30);

using SignCallback = std::function<Sign(const Rational&)>;

// Root of a (caller-asserted strictly monotone) function on a:b via the sign
// callback for f(q) - y: query c:d is Yes exactly when the signs straddle
// zero on the intersection with a:b.
Oracle ivt_oracle(SignCallback sign_of_f_minus_y, const Rational& a, const Rational& b);

// The conjecture-limited oracle: Yes on intervals containing
// -1/bound : 1/bound (termination verified for every k <= bound at
// construction), No away from it, Undecided("conjecture") otherwise.
Oracle collatz_oracle(long long bound = 10'000);

using BitSource = std::function<bool()>;
BitSource seeded_bits(unsigned long long seed);

// Stateful: keeps a current interval and settles unseen questions by coin
// flips. Same seed and question sequence, same transcript. Single-owner.
Oracle coin_toss_oracle(BitSource bits, const Interval& start);

// Witnesses for the n-th power inequalities: given r^n < q, a rational
// s = r + 1/N with s^n still < q (and the mirrored version for r^n > q),
// with N = max(1, (3/a) n r^(n-1), (3/a)(r+1)^n), a = |q - r^n|.
Rational power_witness_below(const Rational& r, const Rational& q, int n);
Rational power_witness_above(const Rational& r, const Rational& q, int n);

// Right triangles from the rational circle parametrization: the interval
// (1+t^2)/(1-t^2) : (1+t^2)/(2t) brackets sqrt(2) for 0 < t < 1.
Interval pythagorean_sqrt2_interval(const Rational& t);

// No fraction with denominator q lies strictly inside S_q : S_q + 1/(q! q);
// checked by exact integer arithmetic.
bool e_denominator_exclusion(unsigned long q);

}  // namespace oracle

#endif  // ORACLE_CONSTANTS_HPP
