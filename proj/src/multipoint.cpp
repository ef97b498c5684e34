#include "seshadri/multipoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

namespace {

void require_r(const BigInt& r) {
  if (r < 2) throw std::invalid_argument("number of points r must be >= 2, got " + r.get_str());
}

}  // namespace

BigInt phi(const BigInt& r, const BigInt& d, const BigInt& m) {
  require_r(r);
  return m * m - r * m - r * (2 + d * d + d);
}

BigInt phi_search_limit(const BigInt& r, const BigInt& d) {
  require_r(r);
  BigInt disc = r * r + 4 * r * (2 + d * d + d);
  return BigInt((r + isqrt(disc)) / 2) + 1;
}

std::vector<FeasiblePair> feasible_pairs(const BigInt& r) {
  require_r(r);
  std::vector<FeasiblePair> out;
  for (long dv = 1; dv <= 3; ++dv) {
    BigInt d(dv);
    BigInt limit = phi_search_limit(r, d);
    for (BigInt m = d * r + 1; m <= limit; ++m) {
      if (phi(r, d, m) < 0) {
        if (dv == 3) {
          throw std::logic_error("phi_{r,3} negative at r = " + r.get_str() +
                                 ", m = " + m.get_str());
        }
        out.push_back({d, m});
      }
    }
  }
  return out;
}

std::vector<Rational> possible_values(const BigInt& r) {
  require_r(r);
  if (r == 2) return {Rational(1, 3), Rational(2, 5)};
  std::vector<Rational> out;
  if (r >= 10) out.emplace_back(1, r + 3);
  out.emplace_back(1, r + 2);
  out.emplace_back(1, r + 1);
  return out;
}

std::vector<Rational> oracle_values(const BigInt& r) {
  std::vector<Rational> out;
  for (const auto& pair : feasible_pairs(r)) out.push_back(pair.ratio());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool epsilon_zero_iff(const DivisorClass& d, const Genus& g) {
  return is_minus_two_class(d, g);
}

SqrtQuantity multipoint_upper_bound(const BigInt& l_squared, const BigInt& r) {
  if (r < 1) throw std::invalid_argument("number of points must be >= 1");
  if (l_squared <= 0) throw std::invalid_argument("L^2 must be positive");
  return SqrtQuantity(Rational(l_squared, r));
}

bool is_submaximal(const Rational& eps, const BigInt& l_squared, const BigInt& r) {
  return cmp_rational_sqrt(eps, multipoint_upper_bound(l_squared, r)) < 0;
}

}  // namespace seshadri
