#include "seshadri/exact_arith.hpp"

#include <ostream>
#include <stdexcept>

namespace seshadri {

namespace {

bool is_decimal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': zero denominator");
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.value_ + y.value_));
}
Rational operator-(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.value_ - y.value_));
}
Rational operator*(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.value_ * y.value_));
}
Rational operator/(const Rational& x, const Rational& y) {
  if (y.value_ == 0) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }

SqrtQuantity::SqrtQuantity(Rational radicand) : radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) {
    throw std::domain_error("square root of negative rational " + radicand_.to_string());
  }
}

std::strong_ordering cmp_rational_sqrt(const Rational& q, const SqrtQuantity& s) {
  if (q.sign() < 0) {
    return std::strong_ordering::less;
  }
  return q * q <=> s.radicand();
}

BigInt ceil_of_ratio(const BigInt& p, const BigInt& q) {
  if (q < 1) throw std::invalid_argument("ceil_of_ratio: divisor must be >= 1");
  if (p < 1) throw std::invalid_argument("ceil_of_ratio: dividend must be >= 1");
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return out;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

BigInt parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace seshadri
