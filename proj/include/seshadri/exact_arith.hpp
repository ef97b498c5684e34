#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seshadri {

using BigInt = mpz_class;

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Structural equality is value equality, so rationals can be stored in
/// sorted containers and compared as sets.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  /// Throws std::invalid_argument on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" (optional leading '-', decimal digits only).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

Rational min(const Rational& x, const Rational& y);

/// The nonnegative real sqrt(radicand) for a rational radicand >= 0.
class SqrtQuantity {
 public:
  /// Throws std::domain_error for a negative radicand.
  explicit SqrtQuantity(Rational radicand);

  const Rational& radicand() const { return radicand_; }

  friend bool operator==(const SqrtQuantity&, const SqrtQuantity&) = default;
  /// sqrt is monotone, so surds order like their radicands.
  friend std::strong_ordering operator<=>(const SqrtQuantity& x,
                                          const SqrtQuantity& y) {
    return x.radicand_ <=> y.radicand_;
  }

 private:
  Rational radicand_;
};

/// Exact order of q versus sqrt(s.radicand()): sign analysis first, then q^2
/// against the radicand.
std::strong_ordering cmp_rational_sqrt(const Rational& q, const SqrtQuantity& s);

/// ceil(p / q) for p >= 1, q >= 1. Throws std::invalid_argument otherwise.
BigInt ceil_of_ratio(const BigInt& p, const BigInt& q);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Parses a signed decimal integer; throws std::invalid_argument on anything
/// else (no whitespace, no '+' sign, no exponent).
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& n);

}  // namespace seshadri
