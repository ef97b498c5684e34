#pragma once

#include <compare>
#include <vector>

#include "seshadri/exact_arith.hpp"
#include "seshadri/ns_lattice.hpp"

namespace seshadri {

/// A pair (d, m) = (K.C, sum of multiplicities) with m > d r and
/// phi_{r,d}(m) < 0 for the r it was produced under.
struct FeasiblePair {
  BigInt d;
  BigInt m;

  Rational ratio() const { return Rational(d, m); }

  friend bool operator==(const FeasiblePair& x, const FeasiblePair& y) {
    return x.d == y.d && x.m == y.m;
  }
  friend std::strong_ordering operator<=>(const FeasiblePair& x, const FeasiblePair& y) {
    if (int c = cmp(x.d, y.d); c != 0) return c <=> 0;
    return cmp(x.m, y.m) <=> 0;
  }
};

/// phi_{r,d}(m) = m^2 - r m - r (2 + d^2 + d). Throws for r < 2.
BigInt phi(const BigInt& r, const BigInt& d, const BigInt& m);

/// Largest m worth testing for a given (r, d): one past the floor of the
/// positive root of phi_{r,d}, computed with an integer square root.
BigInt phi_search_limit(const BigInt& r, const BigInt& d);

/// Exhaustive sweep of d in 1..3 and m in (dr, phi_search_limit], keeping
/// every pair with phi < 0. Sorted by (d, m).
///
/// The d = 3 row must come back empty; phi is increasing in d along
/// m = dr + j, so no d > 3 can contribute either. A nonempty d = 3 row throws
/// std::logic_error.
std::vector<FeasiblePair> feasible_pairs(const BigInt& r);

/// Closed-form list of the values 0 < eps(K_X; x_1..x_r) < 1/r can take,
/// ascending:
///   r = 2        -> 1/3, 2/5
///   3 <= r <= 9  -> 1/(r+2), 1/(r+1)
///   r >= 10      -> 1/(r+3), 1/(r+2), 1/(r+1)
/// These are candidates; whether a given surface attains them is geometric.
std::vector<Rational> possible_values(const BigInt& r);

/// { d/m : (d, m) in feasible_pairs(r) }, ascending and deduplicated.
std::vector<Rational> oracle_values(const BigInt& r);

/// Numerical certificate for eps(K_X; ...) = 0: the class is a (-2)-class.
bool epsilon_zero_iff(const DivisorClass& d, const Genus& g);

/// The universal bound sqrt(L^2 / r) on an r-point Seshadri constant.
SqrtQuantity multipoint_upper_bound(const BigInt& l_squared, const BigInt& r);

/// eps < sqrt(L^2 / r) strictly.
bool is_submaximal(const Rational& eps, const BigInt& l_squared, const BigInt& r);

}  // namespace seshadri
