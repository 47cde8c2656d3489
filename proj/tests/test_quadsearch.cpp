#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shiftdist/quadsearch.hpp"

using namespace shiftdist;

namespace {

Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

IntPolynomial S() { return IntPolynomial::variable(0, 1); }

// F evaluated directly on exact squared lengths, no polynomial in between.
Rational direct_residual(const DistanceTuple& t, const Rational& s) {
  auto sq = [&](long x) { return (Rational(x) + s) * (Rational(x) + s); };
  return residual_from_squares(sq(t.k1), sq(t.k2), sq(t.k3), sq(t.l2), sq(t.l3), sq(t.m));
}

DistanceTuple random_tuple(std::mt19937_64& rng, long hi = 30) {
  std::uniform_int_distribution<long> d(0, hi);
  return {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
}

double dist2(double ax, double ay, double bx, double by) { return (ax - bx) * (ax - bx) + (ay - by) * (ay - by); }

}  // namespace

TEST_CASE("equidistant tuples give -8 (c+s)^8") {
  CHECK(consistency_polynomial({0, 0, 0, 0, 0, 0}) == -8 * S().pow(8));
  IntPolynomial one = IntPolynomial::constant(BigInt(1), 1);
  CHECK(consistency_polynomial({1, 1, 1, 1, 1, 1}) == -8 * (S() + one).pow(8));
  CHECK(consistency_polynomial({1, 1, 1, 1, 1, 1}).evaluate(R(0)) == R(-8));
  CHECK(consistency_polynomial({0, 0, 0, 0, 0, 0}).to_string() == "-8*s^8");
}

TEST_CASE("the 3-4-5 rectangle satisfies the necessary condition") {
  CHECK(consistency_polynomial({3, 4, 5, 5, 4, 3}).evaluate(R(0)) == R(0));
  // scaled copy
  CHECK(consistency_polynomial({6, 8, 10, 10, 8, 6}).evaluate(R(0)) == R(0));
  CHECK(consistency_polynomial({3, 4, 5, 5, 4, 3}).evaluate(R(1, 4)) != R(0));
}

TEST_CASE("polynomial and direct exact evaluation agree") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  for (int i = 0; i < 200; ++i) {
    DistanceTuple t = random_tuple(rng);
    Rational s = R(num(rng), den(rng));
    IntPolynomial f = consistency_polynomial(t);
    CHECK(f.degree(0) <= 8);
    CHECK(f.evaluate(s) == direct_residual(t, s));
    // floating chain on the same squares
    std::array<double, 6> sq;
    auto arr = t.as_array();
    for (int j = 0; j < 6; ++j) sq[j] = std::pow(arr[j] + s.to_double(), 2);
    const double expect = f.evaluate(s).to_double();
    CHECK(generalized_residual(sq) == doctest::Approx(expect).epsilon(1e-9).scale(std::pow(31.0 * 31.0, 4)));
  }
}

TEST_CASE("relabeling a2 <-> a3 leaves F unchanged") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    DistanceTuple t = random_tuple(rng);
    CHECK(consistency_polynomial(t) == consistency_polynomial(t.swapped()));
  }
}

TEST_CASE("perturbed polynomial") {
  IntPolynomial s = IntPolynomial::variable(0, 2), eta = IntPolynomial::variable(1, 2);
  CHECK(perturbed_consistency_polynomial({0, 0, 0, 0, 0, 0}) == -8 * (s * s + eta).pow(4));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    DistanceTuple t = random_tuple(rng, 12);
    IntPolynomial f = perturbed_consistency_polynomial(t);
    CHECK(f.degree(1) <= 4);
    CHECK(f.at_eta_zero() == consistency_polynomial(t));
    CHECK(f.evaluate(R(1, 3), R(0)) == consistency_polynomial(t).evaluate(R(1, 3)));
  }
}

TEST_CASE("planar identity on random quadruples") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> c(-10, 10);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double x[4], y[4];
    for (int j = 0; j < 4; ++j) x[j] = c(rng), y[j] = c(rng);
    std::array<double, 6> sq{dist2(x[0], y[0], x[1], y[1]), dist2(x[0], y[0], x[2], y[2]),
                             dist2(x[0], y[0], x[3], y[3]), dist2(x[1], y[1], x[2], y[2]),
                             dist2(x[1], y[1], x[3], y[3]), dist2(x[2], y[2], x[3], y[3])};
    worst = std::max(worst, generalized_relative_residual(sq));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("non-planar quadruples have non-zero residual") {
  // regular tetrahedron with unit edges does not lie in the plane
  std::array<double, 6> sq{1, 1, 1, 1, 1, 1};
  CHECK(generalized_residual(sq) == doctest::Approx(-8.0));
  CHECK_THROWS_AS(generalized_residual({1, 1, -1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("collinear obstruction") {
  CHECK(collinear_obstruction(R(1, 2)));
  CHECK(collinear_obstruction(R(1, 4)));
  CHECK_FALSE(collinear_obstruction(R(0)));
  CHECK_FALSE(collinear_obstruction(R(3)));
}

TEST_CASE("certificate matches a brute-force exact enumeration") {
  const long bound = 4;
  for (Rational s : {R(1, 4), R(1, 3), R(3, 4), R(-1, 3)}) {
    std::uint64_t feasible = 0, zeros = 0;
    auto len = [&](long k) { return Rational(k) + s; };
    auto tri = [](const Rational& a, const Rational& b, const Rational& c) {
      return a <= b + c && b <= a + c && c <= a + b;
    };
    for (long k1 = 0; k1 <= bound; ++k1)
      for (long k2 = 0; k2 <= bound; ++k2)
        for (long k3 = 0; k3 <= bound; ++k3)
          for (long l2 = 0; l2 <= bound; ++l2)
            for (long l3 = 0; l3 <= bound; ++l3)
              for (long m = 0; m <= bound; ++m) {
                DistanceTuple t{k1, k2, k3, l2, l3, m};
                bool positive = true;
                for (long x : t.as_array()) positive = positive && len(x).sign() > 0;
                if (!positive || !tri(len(k1), len(k2), len(l2)) || !tri(len(k1), len(k3), len(l3)) ||
                    !tri(len(k2), len(k3), len(m)) || !tri(len(l2), len(l3), len(m)))
                  continue;
                ++feasible;
                if (direct_residual(t, s).is_zero()) ++zeros;
              }
    CertificateReport rep = certify_no_quadruple(s, bound, 1);
    CHECK(rep.tuples_checked == feasible);
    CHECK(rep.tuples_checked + rep.tuples_pruned == 15625);
    CHECK(zeros == 0);
    CHECK(rep.violations.empty());
    CHECK(rep.shift == s);
  }
}

TEST_CASE("certificate reports are independent of the worker count") {
  CertificateReport a = certify_no_quadruple(R(1, 3), 9, 1);
  CertificateReport b = certify_no_quadruple(R(1, 3), 9, 3);
  CHECK(a.tuples_checked == b.tuples_checked);
  CHECK(a.tuples_pruned == b.tuples_pruned);
  CHECK(a.violations == b.violations);
}

TEST_CASE("large shifts take the big-integer path") {
  // q * bound beyond the 128-bit fast path threshold
  CertificateReport rep = certify_no_quadruple(R(1, 10007), 3, 1);
  CHECK(rep.violations.empty());
  CHECK(rep.tuples_checked == certify_no_quadruple(R(1, 3), 3, 1).tuples_checked);
}

TEST_CASE("certificate refuses non-admissible shifts") {
  CHECK_THROWS_AS(certify_no_quadruple(R(1, 2), 10), NotAdmissibleError);
  CHECK_THROWS_AS(certify_no_quadruple(R(0), 10), NotAdmissibleError);
  CHECK_THROWS_AS(certify_no_quadruple(R(1, 4), 0), std::invalid_argument);
}

TEST_CASE("progress callback covers every slice") {
  std::size_t last = 0, total = 0;
  certify_no_quadruple(R(1, 4), 5, 1, [&](std::size_t done, std::size_t all) {
    last = done;
    total = all;
  });
  CHECK(total == 6);
  CHECK(last == total);
}

TEST_CASE("half-integer family") {
  for (long k = 0; k <= 20; ++k)
    for (long l = 0; l <= 2 * k; ++l) {
      PlanarPointSet a = half_integer_family(k, l);
      REQUIRE(a.size() == 4);
      CHECK(a.exact_squared_distance(0, 1) == R(1));
      CHECK(a.exact_squared_distance(0, 2) == R((2 * k + 1) * (2 * k + 1)));
      CHECK(a.exact_squared_distance(0, 3) == R((2 * k + 1) * (2 * k + 1)));
      CHECK(a.exact_squared_distance(1, 2) == R(4 * k * k + 2 * (2 * k - l) + 1));
      CHECK(a.exact_squared_distance(1, 3) == R(4 * k * k + 2 * (2 * k + l) + 3));
      CHECK(a.exact_squared_distance(2, 3) == R((2 * l + 1) * (2 * l + 1)));
      CHECK(a.distance(2, 3) == doctest::Approx(2.0 * l + 1.0));
    }
  CHECK_THROWS_AS(half_integer_family(0, 1), std::domain_error);
  CHECK_THROWS_AS(half_integer_family(-1, 0), std::invalid_argument);
}

TEST_CASE("odd-distance search") {
  OddSearchResult r = search_odd_distance_quadruple(25, 1e-9);
  CHECK_FALSE(r.found);
  CHECK(r.residual > 1e-9);
  CHECK(r.configurations > 0);
  for (long d : r.distances) CHECK(d % 2 == 1);
  // the reported placement reproduces the first five distances
  CHECK(std::sqrt(dist2(r.points[0].x, r.points[0].y, r.points[1].x, r.points[1].y)) ==
        doctest::Approx(r.distances[0]));
  CHECK(std::sqrt(dist2(r.points[2].x, r.points[2].y, r.points[3].x, r.points[3].y)) ==
        doctest::Approx(r.measured_d23));
  CHECK(std::abs(r.measured_d23 - r.distances[5]) == doctest::Approx(r.residual));
  CHECK_THROWS_AS(search_odd_distance_quadruple(2), std::invalid_argument);
}

TEST_CASE("truncated model distances") {
  auto one = truncated_bessel_distances(5, 1);
  REQUIRE(one.size() == 5);
  CHECK(one[0].constant == R(25, 64));
  CHECK(one[0].inv_pi2 == R(3, 16));
  CHECK(one[0].inv_pi4 == R(0));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(one[0].value() == doctest::Approx(25.0 / 64.0 + 3.0 / (16.0 * pi2)));
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i].value() > one[i - 1].value());

  auto two = truncated_bessel_distances(5, 2);
  CHECK(two[0].inv_pi4 == R(3, 100));
  CHECK(two[0].constant == one[0].constant);
  CHECK_THROWS(truncated_bessel_distances(0, 1));
  CHECK_THROWS(truncated_bessel_distances(3, 3));
}
