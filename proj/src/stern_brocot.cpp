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

#include "oracle/stern_brocot.hpp"

namespace oracle {

bool frac_is_finite(const Frac& f) { return f.den != 0; }

Rational frac_value(const Frac& f) { return make_rational(f.num, f.den); }

bool frac_less(const Frac& a, const Frac& b) {
  // cross-multiplication is order-preserving for den >= 0, with n/0 = +-inf
  if (a.den == 0 && b.den == 0) return a.num < b.num;
  return a.num * b.den < b.num * a.den;
}

std::string to_string(const Frac& f) { return f.num.str() + "/" + f.den.str(); }

Frac mediant(const Frac& a, const Frac& b) { return Frac{a.num + b.num, a.den + b.den}; }

Int determinant(const FareyInterval& fi) {
  return fi.lo.den * fi.hi.num - fi.lo.num * fi.hi.den;
}

Frac mediant(const FareyInterval& fi) { return mediant(fi.lo, fi.hi); }

FareyInterval cf_step(const FareyInterval& fi, Side side, const Int& k) {
  if (k < 1) throw std::invalid_argument("cf_step needs k >= 1");
  if (side == Side::Right) {
    return FareyInterval{Frac{fi.lo.num + k * fi.hi.num, fi.lo.den + k * fi.hi.den}, fi.hi};
  }
  return FareyInterval{fi.lo, Frac{fi.hi.num + k * fi.lo.num, fi.hi.den + k * fi.lo.den}};
}

std::string to_string(const CFExpansion& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    out += cf.terms[i].str();
    out += i == 0 ? "; " : (i + 1 < cf.terms.size() ? ", " : "");
  }
  if (cf.terms.size() == 1) out.erase(out.size() - 2);  // "[a0" without separator
  if (!cf.exact) out += cf.terms.size() > 1 ? ", ..." : "; ...";
  return out + "]";
}

CFExpansion canonical_cf(std::vector<Int> terms, bool exact) {
  if (exact && terms.size() >= 2 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  return CFExpansion{std::move(terms), exact};
}

FareyInterval cf_eval(const CFExpansion& cf) {
  if (cf.terms.empty()) throw std::invalid_argument("empty continued fraction");
  // A negative leading term shifts an expansion evaluated from zero.
  Int shift = 0;
  std::vector<Int> terms = cf.terms;
  if (terms[0] < 0) {
    shift = terms[0];
    terms[0] = 0;
  }
  FareyInterval fi = canonical_start();
  Side side = Side::Right;
  Frac last = fi.lo;
  for (const Int& t : terms) {
    if (t > 0) {
      fi = cf_step(fi, side, t);
      last = side == Side::Right ? fi.lo : fi.hi;
    }
    side = side == Side::Right ? Side::Left : Side::Right;
  }
  if (shift != 0) {
    fi.lo.num += shift * fi.lo.den;
    fi.hi.num += shift * fi.hi.den;
    last.num += shift * last.den;
  }
  if (cf.exact) return FareyInterval{last, last};
  return fi;
}

namespace {

struct RunRecorder {
  // a0 handling depends on the start: from the canonical start the leading
  // R-run is a0; from an integer start n : n+1 the descent already happened,
  // so a0 = n and the first L-run counts one extra.
  bool canonical = false;
  std::optional<Int> integer_a0;

  std::vector<Int> terms;
  char run_side = 0;  // 'R' for canonical, 'L' after an integer start
  Int run_length = 0;
  bool started = false;

  void setup_canonical() {
    canonical = true;
    run_side = 'R';
    run_length = 0;
    started = true;
  }
  void setup_integer(Int a0) {
    integer_a0 = a0;
    terms.push_back(std::move(a0));
    run_side = 'L';
    run_length = 1;  // the implicit step down from the integer interval
    started = true;
  }

  void choice(char side) {
    if (!started) return;
    if (side == run_side) {
      run_length += 1;
      return;
    }
    terms.push_back(run_length);
    run_side = side;
    run_length = 1;
  }

  // The root occupies the next slot of the active run.
  std::vector<Int> finish_exact() {
    std::vector<Int> out = terms;
    if (started) out.push_back(run_length + 1);
    return out;
  }
  std::vector<Int> finish_partial() const { return terms; }
};

}  // namespace

MediantResult mediant_process(const Oracle& r, const FareyInterval& start, int max_steps,
                              Budget& budget, std::optional<int> stop_after_terms) {
  MediantResult result;
  FareyInterval cur = start;
  RunRecorder rec;
  if (start == canonical_start()) {
    rec.setup_canonical();
  } else if (start.lo.den == 1 && start.hi.den == 1 && start.hi.num == start.lo.num + 1) {
    rec.setup_integer(start.lo.num);
  }

  auto enough_terms = [&]() {
    return stop_after_terms && static_cast<int>(rec.terms.size()) >= *stop_after_terms;
  };

  for (int step = 0; step < max_steps && !enough_terms(); ++step) {
    Frac m = mediant(cur);
    Rational mv = frac_value(m);
    QueryOutcome at_m = r.query(Interval::singleton(mv), budget);
    if (at_m.is_yes()) {
      result.steps.push_back({m, '='});
      result.root = mv;
      result.cf = canonical_cf(rec.finish_exact(), true);
      result.intervals.push_back(FareyInterval{m, m});
      return result;
    }
    if (at_m.is_undecided()) {
      // Stuck point: hug it with mediants from both flanks for the remaining
      // steps, keeping the narrowest interval the oracle still affirms.
      Frac flank_lo = cur.lo, flank_hi = cur.hi;
      for (; step < max_steps; ++step) {
        Frac l = mediant(flank_lo, m), h = mediant(m, flank_hi);
        QueryOutcome q = r.query(Interval(frac_value(l), frac_value(h)), budget);
        if (!q.is_yes()) break;
        flank_lo = l;
        flank_hi = h;
        result.steps.push_back({m, 'S'});
        result.intervals.push_back(FareyInterval{flank_lo, flank_hi});
      }
      if (frac_is_finite(flank_lo) && frac_is_finite(flank_hi))
        result.bracket = Interval(frac_value(flank_lo), frac_value(flank_hi));
      result.cf = canonical_cf(rec.finish_partial(), false);
      result.exhausted = true;
      return result;
    }
    // Decide the side against the finite flank.
    const bool lo_finite = frac_is_finite(cur.lo);
    QueryOutcome side_q = lo_finite ? r.query(Interval(frac_value(cur.lo), mv), budget)
                                    : r.query(Interval(mv, frac_value(cur.hi)), budget);
    const bool left_yes = lo_finite ? side_q.is_yes() : side_q.is_no();
    if (side_q.is_undecided()) {
      result.cf = canonical_cf(rec.finish_partial(), false);
      result.exhausted = true;
      return result;
    }
    if (left_yes) {
      cur = FareyInterval{cur.lo, m};
      rec.choice('L');
      result.steps.push_back({m, 'L'});
    } else {
      cur = FareyInterval{m, cur.hi};
      rec.choice('R');
      result.steps.push_back({m, 'R'});
    }
    result.intervals.push_back(cur);
  }
  result.cf = canonical_cf(rec.finish_partial(), false);
  result.exhausted = !enough_terms();
  return result;
}

MediantResult mediant_process(const Oracle& r, const FareyInterval& start, int max_steps,
                              std::optional<int> stop_after_terms) {
  Budget budget(static_cast<long long>(max_steps) * Budget::kDefault);
  return mediant_process(r, start, max_steps, budget, stop_after_terms);
}

BihomState gosper_init(GosperOp op) {
  switch (op) {
    case GosperOp::Add:
      return BihomState{0, 1, 1, 0, 1, 0, 0, 0};
    case GosperOp::Sub:
      return BihomState{0, 1, -1, 0, 1, 0, 0, 0};
    case GosperOp::Mul:
      return BihomState{0, 0, 0, 1, 1, 0, 0, 0};
    case GosperOp::Div:
      return BihomState{1, 0, 0, 0, 0, 0, 0, 1};
  }
  throw std::logic_error("bad gosper op");
}

BihomState gosper_ingest(const BihomState& s, Var var, const Int& t) {
  if (var == Var::X) {
    return BihomState{s.c, s.d, s.a + s.c * t, s.b + s.d * t,
                      s.g, s.h, s.e + s.g * t, s.f + s.h * t};
  }
  return BihomState{s.b, s.a + s.b * t, s.d, s.c + s.d * t,
                    s.f, s.e + s.f * t, s.h, s.g + s.h * t};
}

std::array<std::optional<Int>, 4> gosper_corner_floors(const BihomState& s) {
  auto corner = [](const Int& num, const Int& den) -> std::optional<Int> {
    if (den == 0) return std::nullopt;  // infinite or 0/0: no finite corner
    Int out;
    mpz_fdiv_q(out.backend().data(), num.backend().data(), den.backend().data());
    return out;
  };
  return {corner(s.a, s.e), corner(s.b, s.f), corner(s.c, s.g), corner(s.d, s.h)};
}

GosperExtract gosper_extract(const BihomState& s) {
  auto floors = gosper_corner_floors(s);
  for (const auto& f : floors)
    if (!f) return GosperExtract{std::nullopt, s};
  const Int r = *floors[0];
  for (const auto& f : floors)
    if (*f != r) return GosperExtract{std::nullopt, s};
  // z = r + 1/w: the denominator row moves up and the remainder takes over.
  BihomState next{s.e, s.f, s.g, s.h,
                  s.a - s.e * r, s.b - s.f * r, s.c - s.g * r, s.d - s.h * r};
  return GosperExtract{r, next};
}

WeightedMediant weighted_mediant_solve(const Frac& lo, const Frac& hi, const Frac& target) {
  if (!frac_less(lo, target) || !frac_less(target, hi)) throw TargetOutsideIntervalError();
  const Int det = determinant(FareyInterval{lo, hi});
  const Int cf_de = hi.num * target.den - hi.den * target.num;  // cf - de
  const Int be_af = lo.den * target.num - lo.num * target.den;  // be - af
  const Int s = gcd(cf_de, be_af);
  if (det % s != 0) throw std::logic_error("scale does not divide the determinant");
  return WeightedMediant{cf_de / s, be_af / s, det / s};
}

}  // namespace oracle
