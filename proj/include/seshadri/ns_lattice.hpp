#pragma once

#include <array>
#include <compare>
#include <string>

#include "seshadri/exact_arith.hpp"

namespace seshadri {

/// Genus of the base curve C. Always >= 2.
class Genus {
 public:
  /// Throws std::invalid_argument when g < 2.
  explicit Genus(BigInt g);
  explicit Genus(long g) : Genus(BigInt(g)) {}

  const BigInt& value() const { return g_; }

  friend bool operator==(const Genus&, const Genus&) = default;

 private:
  BigInt g_;
};

/// Numerical class a1*F1 + a2*F2 + a3*delta in NS(C x C).
///
/// F1 is the fiber of the first projection: two points lie on a common F1
/// fiber iff their first coordinates agree. Classes need not be effective.
struct DivisorClass {
  BigInt a1;
  BigInt a2;
  BigInt a3;

  DivisorClass() = default;
  DivisorClass(BigInt c1, BigInt c2, BigInt c3)
      : a1(std::move(c1)), a2(std::move(c2)), a3(std::move(c3)) {}
  DivisorClass(long c1, long c2, long c3) : a1(c1), a2(c2), a3(c3) {}

  static DivisorClass fiber1() { return {1L, 0L, 0L}; }
  static DivisorClass fiber2() { return {0L, 1L, 0L}; }
  static DivisorClass diagonal() { return {0L, 0L, 1L}; }

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    return {x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3};
  }
  friend DivisorClass operator*(const BigInt& k, const DivisorClass& x) {
    return {k * x.a1, k * x.a2, k * x.a3};
  }

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
  }
  /// Lexicographic on (a1, a2, a3).
  friend std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y);

  std::string to_string() const;
};

/// Gram matrix of the basis (F1, F2, delta).
std::array<std::array<BigInt, 3>, 3> gram_matrix(const Genus& g);

/// Determinant of gram_matrix(g) by cofactor expansion.
BigInt gram_determinant(const Genus& g);

/// Intersection pairing D.E; symmetric and bilinear.
BigInt intersect(const DivisorClass& d, const DivisorClass& e, const Genus& g);

/// D^2 = 2(a1 a2 + a1 a3 + a2 a3) - (2g - 2) a3^2.
BigInt self_int(const DivisorClass& d, const Genus& g);

/// K_X = 2(g-1)(F1 + F2).
DivisorClass canonical_class(const Genus& g);

/// The four positivity conditions L.F1 > 0, L.F2 > 0, L.delta > 0, L^2 > 0.
/// They are necessary for ampleness, not sufficient.
bool ample_necessary(const DivisorClass& l, const Genus& g);

/// p_a(D) = 1 + (D^2 + K.D)/2. Half-integral when D^2 + K.D is odd.
Rational arithmetic_genus(const DivisorClass& d, const Genus& g);

/// K.D = 0 and D^2 = -2.
bool is_minus_two_class(const DivisorClass& d, const Genus& g);

/// (L.D)^2 - L^2 D^2, nonnegative for every D by the Hodge index theorem.
/// Throws std::invalid_argument when L^2 <= 0.
BigInt hodge_gap(const DivisorClass& l, const DivisorClass& d, const Genus& g);

}  // namespace seshadri
