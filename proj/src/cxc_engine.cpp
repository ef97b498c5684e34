#include "seshadri/cxc_engine.hpp"

#include <stdexcept>

namespace seshadri {

namespace {

void require_positive(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("aF1 + bF2 needs a, b >= 1, got a = " + a.get_str() +
                                ", b = " + b.get_str());
  }
}

BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Condition 4 for (primary, partner) = (a1, a2); condition 5 swaps the roles.
// The ceiling parameter is only defined when primary > |a3|, which ampleness
// guarantees.
BigInt negative_shift_parameter(const BigInt& primary, const BigInt& a3) {
  BigInt gap = primary - abs_of(a3);
  if (gap < 1) {
    throw std::invalid_argument("ceiling parameter needs a_i > |a3|, got a_i = " +
                                primary.get_str() + ", a3 = " + a3.get_str());
  }
  return ceil_of_ratio(abs_of(a3), gap);
}

}  // namespace

TwoPointConfig classify_two_points(const FiberPoint& p, const FiberPoint& q) {
  bool same1 = p.f1_fiber == q.f1_fiber;
  bool same2 = p.f2_fiber == q.f2_fiber;
  if (same1 && same2) throw std::invalid_argument("two-point configuration needs distinct points");
  if (same1) return TwoPointConfig::SameFiberF1;
  if (same2) return TwoPointConfig::SameFiberF2;
  return TwoPointConfig::General;
}

std::string to_string(Fiber f) { return f == Fiber::F1 ? "F1" : "F2"; }

Rational epsilon_fiber_one_point(const BigInt& a, const BigInt& b) {
  require_positive(a, b);
  return min(Rational(a), Rational(b));
}

Rational epsilon_fiber_two_points(const BigInt& a, const BigInt& b, TwoPointConfig cfg) {
  require_positive(a, b);
  switch (cfg) {
    case TwoPointConfig::SameFiberF1:
      return min(Rational(a), Rational(b, 2));
    case TwoPointConfig::SameFiberF2:
      return min(Rational(a, 2), Rational(b));
    case TwoPointConfig::General:
      break;
  }
  return min(Rational(a), Rational(b));
}

Rational cond4_threshold(const BigInt& k, const Genus& g) {
  if (k < 1) throw std::invalid_argument("condition parameter must be >= 1");
  return Rational(2 * g.value() * k * k + 2 * k + 1, 2 * (k + 1));
}

BigInt cond4_min_partner(const BigInt& a1, const BigInt& a3, const Genus& g) {
  if (a3 >= 0) throw std::invalid_argument("condition 4 needs a3 < 0");
  Rational bound = cond4_threshold(negative_shift_parameter(a1, a3), g) * Rational(a1);
  BigInt out;
  BigInt num = bound.numerator();
  BigInt den = bound.denominator();
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

bool fiber_is_submaximal(const DivisorClass& l, Fiber f, const Genus& g) {
  DivisorClass fiber = f == Fiber::F1 ? DivisorClass::fiber1() : DivisorClass::fiber2();
  BigInt lf = intersect(l, fiber, g);
  return lf * lf <= self_int(l, g);
}

RationalityVerdict rationality_classify(const DivisorClass& l, const Genus& g) {
  if (!ample_necessary(l, g)) {
    throw std::invalid_argument("class " + l.to_string() + " fails the ampleness conditions");
  }
  const BigInt& a1 = l.a1;
  const BigInt& a2 = l.a2;
  const BigInt& a3 = l.a3;
  RationalityVerdict verdict;
  auto& matched = verdict.matched_conditions;

  if (a3 == 0) matched.push_back({1, std::nullopt, std::nullopt});
  if (a3 > 0 && a1 <= a2 && a1 * a1 + a3 * a3 < 2 * a1 * a2) {
    matched.push_back({2, std::nullopt, std::nullopt});
  }
  if (a3 > 0 && a2 <= a1 && a2 * a2 + a3 * a3 < 2 * a1 * a2) {
    matched.push_back({3, std::nullopt, std::nullopt});
  }
  if (a3 < 0) {
    BigInt k = negative_shift_parameter(a1, a3);
    Rational t4 = cond4_threshold(k, g);
    if (Rational(a2) >= t4 * Rational(a1)) matched.push_back({4, k, t4});
    BigInt lp = negative_shift_parameter(a2, a3);
    Rational t5 = cond4_threshold(lp, g);
    if (Rational(a1) >= t5 * Rational(a2)) matched.push_back({5, lp, t5});
    verdict.k = k;
    verdict.l = lp;
  }

  if (!matched.empty()) {
    if (fiber_is_submaximal(l, Fiber::F2, g)) {
      verdict.submaximal_fiber = Fiber::F2;
    } else if (fiber_is_submaximal(l, Fiber::F1, g)) {
      verdict.submaximal_fiber = Fiber::F1;
    }
  }
  return verdict;
}

SqrtQuantity threshold_thm32(const BigInt& r, const Genus& g) {
  BigInt k2 = self_int(canonical_class(g), g);
  if (r < k2) {
    throw std::invalid_argument("threshold needs r >= K^2 = " + k2.get_str() +
                                ", got r = " + r.get_str());
  }
  return SqrtQuantity(Rational((r + 2) * k2, (r + 3) * r));
}

Rational fiber_sum_epsilon(const BigInt& a, const BigInt& r, const Genus& g) {
  if (a < 1 || r < 1) throw std::invalid_argument("fiber_sum_epsilon needs a, r >= 1");
  DivisorClass k = canonical_class(g);
  BigInt degree = intersect(k, DivisorClass::fiber1(), g) + intersect(k, DivisorClass::fiber2(), g);
  return Rational(a * degree, r);
}

BigInt thm32_case2_gap(const BigInt& r, const BigInt& s) {
  if (s < 2 || s > r - 1) {
    throw std::invalid_argument("thm32_case2_gap needs 2 <= s <= r-1, got r = " + r.get_str() +
                                ", s = " + s.get_str());
  }
  return r * (r + 3) * (s - 1) - s * s * (r + 2);
}

bool thm32_class_gap(const DivisorClass& d, const Genus& g) {
  return 3 * (d.a1 * d.a1 + d.a2 * d.a2 + 4 * g.value() * d.a3 * d.a3) >=
         6 * d.a1 * d.a2 + 2;
}

}  // namespace seshadri
