#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shiftdist {

using BigInt = mpz_class;

// Exact rational p/q over arbitrary-precision integers.
//
// Always stored in lowest terms with a positive denominator, so two equal
// values have identical representations (0 is 0/1).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  // Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, Normalized{}); }
  Rational pow(unsigned exponent) const;

  double to_double() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(BigInt(-num_), den_, Normalized{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Normalized {};
  Rational(BigInt num, BigInt den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Square root of a non-negative rational, when that root is itself rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace shiftdist
