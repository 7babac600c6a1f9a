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

#ifndef ORACLE_RATIONAL_HPP
#define ORACLE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oracle {

// Exact arbitrary-precision arithmetic. Rationals are always stored
// canonically: reduced, denominator > 0. GMP keeps that invariant for us.
// Expression templates are off so that `auto` and deduced lambda returns
// always hold plain values.
using Int =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

struct RationalParseError : std::runtime_error {
  explicit RationalParseError(const std::string& what) : std::runtime_error(what) {}
};

Rational make_rational(const Int& num, const Int& den);

// Fast constructor for endpoints we already know are coprime with a positive
// denominator. Skips the gcd pass, which matters for the multi-megabit values
// produced by the compound-interest family.
Rational rational_from_coprime(const Int& num, const Int& den);

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

Int floor_int(const Rational& q);
Int ceil_int(const Rational& q);
inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int pow_int(const Int& base, unsigned long exp);
// n may be negative; throws std::domain_error on 0^negative. n == 0 gives 1.
Rational pow_rational(const Rational& base, long n);

Int factorial(unsigned long n);

// Accepts "p/q", plain integers, and exact decimals such as "-1.41".
Rational parse_rational(std::string_view text);

// Exact decimal literal: value and the number of fraction digits.
struct DecimalLiteral {
  Rational value;
  int frac_digits = 0;
  bool negative = false;  // sign as written, so "-0.00" keeps its sign
};
DecimalLiteral parse_decimal(std::string_view text);

// Exact decimal rendering of q, which must have a denominator dividing
// 10^digits. Produces a fixed number of fraction digits.
std::string format_decimal(const Rational& q, int digits);

std::string to_string(const Rational& q);

}  // namespace oracle

#endif  // ORACLE_RATIONAL_HPP
