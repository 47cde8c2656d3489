#include "shiftdist/lattice.hpp"

#include <stdexcept>

namespace shiftdist {

ShiftClass ShiftClass::algebraic(unsigned degree) {
  if (degree < 1) throw std::invalid_argument("ShiftClass: algebraic degree must be >= 1");
  return ShiftClass(Kind(AlgebraicShift{degree}));
}

std::string ShiftClass::describe() const {
  if (auto r = as_rational()) return r->to_string();
  if (auto a = std::get_if<AlgebraicShift>(&kind_)) return "algebraic(degree=" + std::to_string(a->degree) + ")";
  return "transcendental";
}

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::admissible: return "admissible";
    case Admissibility::not_admissible: return "not_admissible";
    case Admissibility::undetermined: return "undetermined";
  }
  return "?";
}

bool lattice_membership(const Rational& x, std::span<const Rational> generators) {
  if (generators.empty()) throw std::invalid_argument("lattice_membership: empty generator list");

  // Clear every denominator at once, then x is in the lattice iff the gcd of
  // the integer generators divides the integer image of x.
  BigInt common = x.den();
  for (const auto& g : generators) common = lcm(common, g.den());

  BigInt g = 0;
  for (const auto& gen : generators) g = gcd(g, BigInt(gen.num() * (common / gen.den())));
  BigInt image = x.num() * (common / x.den());

  if (g == 0) return image == 0;
  return image % g == 0;
}

std::vector<Rational> obstruction_generators(const Rational& s) {
  static constexpr long kMultipliers[8] = {1, 4, 2, 4, 1, 2, 2, 4};
  std::vector<Rational> out;
  out.reserve(8);
  Rational power(1);
  for (long m : kMultipliers) {
    out.push_back(Rational(m) * power);
    power *= s;
  }
  return out;
}

Rational obstruction_value(const Rational& s) { return Rational(8) * s.pow(8); }

BigInt obstruction_gcd(const Rational& s) {
  static constexpr long kMultipliers[8] = {1, 4, 2, 4, 1, 2, 2, 4};
  const BigInt& p = s.num();
  const BigInt& q = s.den();
  BigInt g = 0;
  for (unsigned i = 0; i < 8; ++i) {
    BigInt pi, qi;
    mpz_pow_ui(pi.get_mpz_t(), p.get_mpz_t(), i);
    mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), 8 - i);
    g = gcd(g, BigInt(kMultipliers[i] * pi * qi));
  }
  return g;
}

Admissibility shift_admissible(const ShiftClass& s) {
  if (const Rational* r = s.as_rational()) {
    // Multiplying the relation by q^8 turns it into: does g divide 8 p^8?
    BigInt g = obstruction_gcd(*r);
    BigInt p8;
    mpz_pow_ui(p8.get_mpz_t(), r->num().get_mpz_t(), 8);
    BigInt target = 8 * p8;
    bool member = (g == 0) ? (target == 0) : (target % g == 0);
    return member ? Admissibility::not_admissible : Admissibility::admissible;
  }
  if (const auto* a = std::get_if<AlgebraicShift>(&s.kind())) {
    return a->degree >= 9 ? Admissibility::admissible : Admissibility::undetermined;
  }
  return Admissibility::admissible;
}

}  // namespace shiftdist
