#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shiftdist/rational.hpp"

namespace shiftdist {

struct AlgebraicShift {
  unsigned degree = 1;
};

// Transcendence cannot be tested from a finite description; this tag records
// the caller's declaration.
struct TranscendentalShift {};

// What is known about a shift s: an exact rational, an algebraic number of
// given degree, or a declared transcendental.
class ShiftClass {
 public:
  using Kind = std::variant<Rational, AlgebraicShift, TranscendentalShift>;

  static ShiftClass rational(Rational s) { return ShiftClass(Kind(std::move(s))); }
  static ShiftClass algebraic(unsigned degree);
  static ShiftClass transcendental() { return ShiftClass(Kind(TranscendentalShift{})); }

  const Kind& kind() const { return kind_; }
  const Rational* as_rational() const { return std::get_if<Rational>(&kind_); }
  std::string describe() const;

 private:
  explicit ShiftClass(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

enum class Admissibility { admissible, not_admissible, undetermined };

const char* to_string(Admissibility a);

// True iff x is an integer combination of the generators. All-zero generators
// only contain 0. Throws std::invalid_argument on an empty generator list.
bool lattice_membership(const Rational& x, std::span<const Rational> generators);

// The eight generators {1, 4s, 2s^2, 4s^3, s^4, 2s^5, 2s^6, 4s^7} of the
// obstruction lattice for shift s.
std::vector<Rational> obstruction_generators(const Rational& s);

// The obstruction value 8 s^8 whose membership in the lattice above decides
// whether the four-point argument goes through.
Rational obstruction_value(const Rational& s);

// gcd(q^8, 4pq^7, 2p^2q^6, 4p^3q^5, p^4q^4, 2p^5q^3, 2p^6q^2, 4p^7q) for s = p/q.
BigInt obstruction_gcd(const Rational& s);

Admissibility shift_admissible(const ShiftClass& s);
inline Admissibility shift_admissible(const Rational& s) { return shift_admissible(ShiftClass::rational(s)); }

}  // namespace shiftdist
