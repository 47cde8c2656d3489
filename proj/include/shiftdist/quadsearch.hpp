#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "shiftdist/point_set.hpp"
#include "shiftdist/polynomial.hpp"
#include "shiftdist/rational.hpp"

namespace shiftdist {

// Integer labels of a candidate four-point set {a0, a1, a2, a3} whose six
// distances are k1+s = |a1-a0|, k2+s = |a2-a0|, k3+s = |a3-a0|,
// l2+s = |a2-a1|, l3+s = |a3-a1| and m+s = |a3-a2|.
struct DistanceTuple {
  long k1 = 0, k2 = 0, k3 = 0, l2 = 0, l3 = 0, m = 0;

  std::array<long, 6> as_array() const { return {k1, k2, k3, l2, l3, m}; }
  // Relabels a2 <-> a3.
  DistanceTuple swapped() const { return {k1, k3, k2, l3, l2, m}; }

  friend auto operator<=>(const DistanceTuple&, const DistanceTuple&) = default;
};

// The law-of-cosines chain on the six squared lengths, ordered
// (|a0a1|^2, |a0a2|^2, |a0a3|^2, |a1a2|^2, |a1a3|^2, |a2a3|^2):
//
//   T   = 2 A1 (A2 + A3 - M)           4|a1|^2|a2||a3| cos(t3 - t2)
//   Qj  = A1 + Aj - Lj                 2|a1||aj| cos tj
//   Sj  = 4 A1 Aj - Qj^2               (2|a1||aj| sin tj)^2
//   F   = (T - Q2 Q3)^2 - S2 S3
//
// F vanishes for every planar quadruple. Generic over the scalar type so the
// same chain runs on doubles, exact integers and polynomials.
template <class T>
T residual_from_squares(const T& a1, const T& a2, const T& a3, const T& l2, const T& l3, const T& m) {
  T two_a1 = a1 + a1;
  T t = two_a1 * (a2 + a3 - m);
  T q2 = a1 + a2 - l2;
  T q3 = a1 + a3 - l3;
  T four_a1 = two_a1 + two_a1;
  T s2 = four_a1 * a2 - q2 * q2;
  T s3 = four_a1 * a3 - q3 * q3;
  T u = t - q2 * q3;
  return u * u - s2 * s3;
}

// F(s) for a tuple: the residual with each squared length (x+s)^2.
// Degree <= 8, integer coefficients.
IntPolynomial consistency_polynomial(const DistanceTuple& t);

// F(s, eta) with each squared length replaced by (x+s)^2 + eta.
IntPolynomial perturbed_consistency_polynomial(const DistanceTuple& t);

// The residual on six raw squared lengths (same ordering as above).
double generalized_residual(const std::array<double, 6>& squared_lengths);
// |residual| divided by (largest squared length)^4, the residual's natural scale.
double generalized_relative_residual(const std::array<double, 6>& squared_lengths);

// True iff three collinear points with pairwise distances in Z+ + s cannot
// exist, i.e. iff s is not an integer.
bool collinear_obstruction(const Rational& s);

struct CertificateReport {
  Rational shift;
  long bound = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_pruned = 0;
  std::vector<DistanceTuple> violations;  // tuples with F(s) == 0, tuple order
  double wall_time = 0.0;                 // seconds
  unsigned workers = 1;
};

class NotAdmissibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Exhaustively evaluates F(s) exactly on every tuple with entries in
// [0, bound] that survives the shifted triangle inequalities on the four
// triangles of the quadruple. Requires an admissible shift; otherwise throws
// NotAdmissibleError since an empty violation list would prove nothing.
CertificateReport certify_no_quadruple(const Rational& s, long bound, unsigned workers = 0,
                                       const ProgressFn& progress = {});

// {0, 1, (2k+1)e^{i theta}, -(2k+1)e^{-i theta}} with
// cos(theta) = (2l+1) / (2(2k+1)), carried with exact coordinates.
// Requires 2l+1 <= 2(2k+1).
PlanarPointSet half_integer_family(long k, long l);

struct OddSearchResult {
  bool found = false;  // best residual < tol
  double residual = 0.0;
  std::array<PlanarPoint, 4> points{};
  // (d01, d02, d03, d12, d13) as placed, then the nearest odd value for d23.
  std::array<long, 6> distances{};
  double measured_d23 = 0.0;
  std::uint64_t configurations = 0;
};

// Places a0 = 0 and a1 = (d01, 0), solves for a2 (upper half-plane) and a3
// (either half-plane) from odd candidate distances <= bound, and measures how
// far |a3 - a2| is from the nearest odd integer. Returns the argmin.
OddSearchResult search_odd_distance_quadruple(long bound, double tol = 1e-9);

// A squared distance of the form c0 + c1/pi^2 + c2/pi^4 with rational c_i.
struct ModelSquaredDistance {
  long k = 0;
  Rational constant;
  Rational inv_pi2;
  Rational inv_pi4;

  double value() const;
  double distance() const;
};

// Truncations of the large-zero expansion of |xi|^2 for the disk transform:
//   terms = 1: (1/4)(k+1/4)^2 + 3/(16 pi^2)
//   terms = 2: adds (1/4)(k+1/4)^2 * c2 / (pi^4 (k+1/4)^4) with c2 = 3/16
// for k = 1..k_max.
std::vector<ModelSquaredDistance> truncated_bessel_distances(long k_max, int terms = 1);

}  // namespace shiftdist
