#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/exact_arith.hpp"
#include "seshadri/ns_lattice.hpp"

namespace seshadri {

/// How two distinct points of C x C sit relative to the fibrations.
enum class TwoPointConfig { SameFiberF1, SameFiberF2, General };

/// A point of C x C, identified only by which fibers it lies on.
struct FiberPoint {
  long f1_fiber;  // first coordinate
  long f2_fiber;  // second coordinate
};

/// Throws std::invalid_argument when p and q coincide.
TwoPointConfig classify_two_points(const FiberPoint& p, const FiberPoint& q);

enum class Fiber { F1, F2 };

std::string to_string(Fiber f);

/// One matched hypothesis of the rationality theorem. `parameter` carries k
/// for condition 4 and l for condition 5.
struct MatchedCondition {
  int index = 0;  // 1..5
  std::optional<BigInt> parameter;
  std::optional<Rational> threshold;  // (2g p^2 + 2p + 1) / (2(p + 1))

  friend bool operator==(const MatchedCondition&, const MatchedCondition&) = default;
};

struct RationalityVerdict {
  std::vector<MatchedCondition> matched_conditions;
  /// A fiber F with (L.F)^2 <= L^2, present whenever a condition matched.
  std::optional<Fiber> submaximal_fiber;
  /// k (resp. l) from the ceiling formula, whenever a3 < 0, matched or not.
  std::optional<BigInt> k;
  std::optional<BigInt> l;
};

/// eps(aF1 + bF2, x) = min(a, b) at every point.
Rational epsilon_fiber_one_point(const BigInt& a, const BigInt& b);

/// Two-point value for aF1 + bF2:
///   SameFiberF1 -> min(a, b/2), SameFiberF2 -> min(a/2, b), General -> min(a, b).
Rational epsilon_fiber_two_points(const BigInt& a, const BigInt& b, TwoPointConfig cfg);

/// (2 g k^2 + 2k + 1) / (2(k + 1)).
Rational cond4_threshold(const BigInt& k, const Genus& g);

/// Smallest integral a2 satisfying condition 4 for the given a1, a3 < 0.
BigInt cond4_min_partner(const BigInt& a1, const BigInt& a3, const Genus& g);

/// Tests all five sufficient conditions for eps(L) to be rational and reports
/// every match, together with a fiber witnessing L.F <= sqrt(L^2).
/// Throws std::invalid_argument unless ample_necessary(L, g).
RationalityVerdict rationality_classify(const DivisorClass& l, const Genus& g);

/// (L.F)^2 <= L^2 for the given fiber.
bool fiber_is_submaximal(const DivisorClass& l, Fiber f, const Genus& g);

/// sqrt((r+2)/(r+3)) * sqrt(K^2/r) as one surd. Requires r >= K^2 = 8(g-1)^2.
SqrtQuantity threshold_thm32(const BigInt& r, const Genus& g);

/// a(K.F1 + K.F2)/r = 4a(g-1)/r.
Rational fiber_sum_epsilon(const BigInt& a, const BigInt& r, const Genus& g);

/// r(r+3)(s-1) - s^2(r+2), for 2 <= s <= r-1.
BigInt thm32_case2_gap(const BigInt& r, const BigInt& s);

/// 3(a1^2 + a2^2 + 4 g a3^2) >= 6 a1 a2 + 2, i.e. (L.D)^2 >= (D^2 + 1/3) L^2
/// for L = F1 + F2. Fails exactly when a3 = 0 and a1 = a2.
bool thm32_class_gap(const DivisorClass& d, const Genus& g);

}  // namespace seshadri
