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

#include "oracle/rational.hpp"

#include <cassert>
#include <cctype>

namespace oracle {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

Rational rational_from_coprime(const Int& num, const Int& den) {
  assert(den > 0);
  assert(gcd(num, den) == 1);
  Rational r;
  mpq_ptr raw = r.backend().data();
  mpz_set(mpq_numref(raw), num.backend().data());
  mpz_set(mpq_denref(raw), den.backend().data());
  return r;
}

Int floor_int(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.backend().data(), numerator(q).backend().data(),
             denominator(q).backend().data());
  return out;
}

Int ceil_int(const Rational& q) {
  Int out;
  mpz_cdiv_q(out.backend().data(), numerator(q).backend().data(),
             denominator(q).backend().data());
  return out;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exp);
  return out;
}

Rational pow_rational(const Rational& base, long n) {
  if (n == 0) return Rational(1);
  const unsigned long e = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  Int num = pow_int(numerator(base), e);
  Int den = pow_int(denominator(base), e);
  if (n > 0) return rational_from_coprime(num, den);
  if (num == 0) throw std::domain_error("zero to a negative power");
  if (num < 0) return rational_from_coprime(Int(-den), Int(-num));
  return rational_from_coprime(den, num);
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.backend().data(), n);
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// GMP autodetects bases from prefixes ("0" octal, "0x" hex); digit strings
// here are always decimal.
Int int_from_digits(std::string_view digits, bool negative = false) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  Int v(std::string(digits.substr(i)));
  return negative ? Int(-v) : v;
}

}  // namespace

DecimalLiteral parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  if (!all_digits(int_part)) throw RationalParseError("bad decimal: '" + std::string(text) + "'");
  if (dot != std::string_view::npos && !frac_part.empty() && !all_digits(frac_part))
    throw RationalParseError("bad decimal: '" + std::string(text) + "'");

  Int mantissa = int_from_digits(std::string(int_part) + std::string(frac_part), negative);
  Int scale = pow_int(Int(10), frac_part.size());
  return DecimalLiteral{make_rational(mantissa, scale), static_cast<int>(frac_part.size()),
                        negative};
}

namespace {

Int parse_signed_int(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) throw RationalParseError("bad integer: '" + std::string(text) + "'");
  return int_from_digits(text, negative);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    try {
      return make_rational(parse_signed_int(text.substr(0, slash)),
                           parse_signed_int(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw RationalParseError("bad rational: '" + std::string(text) + "'");
    }
  }
  return parse_decimal(text).value;
}

std::string format_decimal(const Rational& q, int digits) {
  Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
  Rational scaled = q * scale;
  if (!is_integer(scaled)) throw std::domain_error("value is not a " + std::to_string(digits) + "-digit decimal");
  Int m = numerator(scaled);
  const bool neg = m < 0;
  Int a = neg ? Int(-m) : m;
  Int ip = a / scale, fp = a % scale;
  std::string out = neg ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    std::string f = fp.str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace oracle
