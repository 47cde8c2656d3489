#pragma once

#include <array>
#include <map>
#include <string>

#include "shiftdist/rational.hpp"

namespace shiftdist {

// Dense-in-spirit, sparse-in-storage integer polynomial in one variable (s)
// or two variables (s, eta). Zero coefficients are never stored.
class IntPolynomial {
 public:
  using Exponents = std::array<unsigned, 2>;  // {deg in s, deg in eta}
  using Terms = std::map<Exponents, BigInt>;

  explicit IntPolynomial(unsigned arity = 1);

  static IntPolynomial constant(const BigInt& c, unsigned arity = 1);
  // variable(0) is s, variable(1) is eta (requires arity 2).
  static IntPolynomial variable(unsigned index, unsigned arity = 1);

  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(unsigned s_degree, unsigned eta_degree = 0) const;
  // Highest exponent of the given variable; -1 for the zero polynomial.
  int degree(unsigned var = 0) const;

  Rational evaluate(const Rational& s) const;
  Rational evaluate(const Rational& s, const Rational& eta) const;

  // Drops every term containing eta and returns a univariate polynomial in s.
  IntPolynomial at_eta_zero() const;

  IntPolynomial pow(unsigned exponent) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator*(long c, IntPolynomial a) { return a *= BigInt(c); }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Human-readable form, highest degree first, e.g. "-8*s^8".
  std::string to_string() const;

 private:
  void require_same_arity(const IntPolynomial& other) const;
  void add_term(const Exponents& e, const BigInt& c);

  unsigned arity_;
  Terms terms_;
};

}  // namespace shiftdist
