#include "shiftdist/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace shiftdist {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  auto parse_int = [&](std::string_view v) {
    v = trim(v);
    std::size_t start = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (v.size() == start) throw std::invalid_argument("Rational: empty integer in '" + std::string(text) + "'");
    for (std::size_t i = start; i < v.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i])))
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    }
    std::string digits(v[0] == '+' ? v.substr(1) : v);
    return BigInt(digits, 10);
  };

  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), exponent);
  return Rational(std::move(n), std::move(d), Normalized{});
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.num().get_mpz_t()) || !mpz_perfect_square_p(value.den().get_mpz_t()))
    return std::nullopt;
  return Rational(sqrt(value.num()), sqrt(value.den()));
}

}  // namespace shiftdist
