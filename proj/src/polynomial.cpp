#include "shiftdist/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace shiftdist {

IntPolynomial::IntPolynomial(unsigned arity) : arity_(arity) {
  if (arity != 1 && arity != 2) throw std::invalid_argument("IntPolynomial: arity must be 1 or 2");
}

IntPolynomial IntPolynomial::constant(const BigInt& c, unsigned arity) {
  IntPolynomial p(arity);
  p.add_term({0, 0}, c);
  return p;
}

IntPolynomial IntPolynomial::variable(unsigned index, unsigned arity) {
  IntPolynomial p(arity);
  if (index >= arity) throw std::invalid_argument("IntPolynomial: variable index exceeds arity");
  Exponents e{0, 0};
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

BigInt IntPolynomial::coefficient(unsigned s_degree, unsigned eta_degree) const {
  auto it = terms_.find({s_degree, eta_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int IntPolynomial::degree(unsigned var) const {
  if (var >= arity_) throw std::invalid_argument("IntPolynomial: variable index exceeds arity");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Rational IntPolynomial::evaluate(const Rational& s) const {
  if (arity_ != 1) throw std::invalid_argument("IntPolynomial: univariate evaluation of a bivariate polynomial");
  // Horner over the descending exponents; missing exponents multiply by s.
  Rational acc;
  int current = degree(0);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int e = static_cast<int>(it->first[0]);
    while (current > e) {
      acc *= s;
      --current;
    }
    acc += Rational(it->second);
  }
  while (current > 0) {
    acc *= s;
    --current;
  }
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& s, const Rational& eta) const {
  if (arity_ != 2) throw std::invalid_argument("IntPolynomial: bivariate evaluation of a univariate polynomial");
  Rational acc;
  for (const auto& [e, c] : terms_) acc += Rational(c) * s.pow(e[0]) * eta.pow(e[1]);
  return acc;
}

IntPolynomial IntPolynomial::at_eta_zero() const {
  IntPolynomial out(1);
  for (const auto& [e, c] : terms_) {
    if (arity_ == 1 || e[1] == 0) out.add_term({e[0], 0}, c);
  }
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1, arity_);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

void IntPolynomial::require_same_arity(const IntPolynomial& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("IntPolynomial: arity mismatch");
}

void IntPolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, BigInt(-c));
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  require_same_arity(rhs);
  IntPolynomial out(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, BigInt(ca * cb));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e[0] > 0 || e[1] > 0;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      if (has_var) os << "*";
    }
    bool wrote = false;
    auto var = [&](const char* name, unsigned power) {
      if (power == 0) return;
      if (wrote) os << "*";
      os << name;
      if (power > 1) os << "^" << power;
      wrote = true;
    };
    var("s", e[0]);
    var("eta", e[1]);
  }
  return os.str();
}

}  // namespace shiftdist
