#include "seshadri/ns_lattice.hpp"

#include <stdexcept>

namespace seshadri {

Genus::Genus(BigInt g) : g_(std::move(g)) {
  if (g_ < 2) throw std::invalid_argument("genus must be >= 2, got " + g_.get_str());
}

std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y) {
  if (int c = cmp(x.a1, y.a1); c != 0) return c <=> 0;
  if (int c = cmp(x.a2, y.a2); c != 0) return c <=> 0;
  return cmp(x.a3, y.a3) <=> 0;
}

std::string DivisorClass::to_string() const {
  return "(" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + ")";
}

std::array<std::array<BigInt, 3>, 3> gram_matrix(const Genus& g) {
  BigInt diag_sq = 2 - 2 * g.value();
  return {{{0, 1, 1}, {1, 0, 1}, {1, 1, diag_sq}}};
}

BigInt gram_determinant(const Genus& g) {
  auto m = gram_matrix(g);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BigInt intersect(const DivisorClass& d, const DivisorClass& e, const Genus& g) {
  return d.a1 * e.a2 + d.a2 * e.a1 + d.a1 * e.a3 + d.a3 * e.a1 + d.a2 * e.a3 +
         d.a3 * e.a2 + (2 - 2 * g.value()) * d.a3 * e.a3;
}

BigInt self_int(const DivisorClass& d, const Genus& g) {
  return 2 * (d.a1 * d.a2 + d.a1 * d.a3 + d.a2 * d.a3) -
         (2 * g.value() - 2) * d.a3 * d.a3;
}

DivisorClass canonical_class(const Genus& g) {
  BigInt c = 2 * (g.value() - 1);
  return {c, c, BigInt(0)};
}

bool ample_necessary(const DivisorClass& l, const Genus& g) {
  return l.a2 + l.a3 > 0 && l.a1 + l.a3 > 0 &&
         l.a1 + l.a2 - (2 * g.value() - 2) * l.a3 > 0 && self_int(l, g) > 0;
}

Rational arithmetic_genus(const DivisorClass& d, const Genus& g) {
  BigInt twice = self_int(d, g) + intersect(canonical_class(g), d, g);
  return Rational(1L) + Rational(twice, 2);
}

bool is_minus_two_class(const DivisorClass& d, const Genus& g) {
  return intersect(d, canonical_class(g), g) == 0 && self_int(d, g) == -2;
}

BigInt hodge_gap(const DivisorClass& l, const DivisorClass& d, const Genus& g) {
  BigInt l2 = self_int(l, g);
  if (l2 <= 0) {
    throw std::invalid_argument("hodge_gap needs L^2 > 0, got L = " + l.to_string() +
                                " with L^2 = " + l2.get_str());
  }
  BigInt ld = intersect(l, d, g);
  return ld * ld - l2 * self_int(d, g);
}

}  // namespace seshadri
