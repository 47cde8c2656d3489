#include "shiftdist/quadsearch.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "shiftdist/lattice.hpp"
#include "shiftdist/parallel.hpp"

namespace shiftdist {

namespace {

IntPolynomial shifted_square(long x, unsigned arity) {
  IntPolynomial s = IntPolynomial::variable(0, arity);
  IntPolynomial base = s + IntPolynomial::constant(x, arity);
  IntPolynomial sq = base * base;
  if (arity == 2) sq += IntPolynomial::variable(1, 2);
  return sq;
}

IntPolynomial chain_polynomial(const DistanceTuple& t, unsigned arity) {
  return residual_from_squares(shifted_square(t.k1, arity), shifted_square(t.k2, arity),
                               shifted_square(t.k3, arity), shifted_square(t.l2, arity),
                               shifted_square(t.l3, arity), shifted_square(t.m, arity));
}

template <class Int>
bool triangle_ok(const Int& a, const Int& b, const Int& c) {
  return a <= b + c && b <= a + c && c <= a + b;
}

struct SliceResult {
  std::uint64_t checked = 0;
  std::uint64_t pruned = 0;
  std::vector<DistanceTuple> violations;
};

// One k1 slice of the enumeration. Side lengths are scaled by q, so every
// length is the integer q*k + p and the residual equals q^8 F(p/q) exactly.
template <class Int>
SliceResult enumerate_slice(long k1, long bound, const Int& p, const Int& q) {
  SliceResult out;
  const std::uint64_t n = static_cast<std::uint64_t>(bound) + 1;
  auto side = [&](long k) { return Int(q * Int(k) + p); };

  const Int d1 = side(k1);
  if (d1 <= 0) {
    out.pruned = n * n * n * n * n;
    return out;
  }
  const Int a1 = d1 * d1;
  const Int four_a1 = 4 * a1;

  for (long k2 = 0; k2 <= bound; ++k2) {
    const Int d2 = side(k2);
    if (d2 <= 0) {
      out.pruned += n * n * n * n;
      continue;
    }
    const Int a2 = d2 * d2;
    for (long l2 = 0; l2 <= bound; ++l2) {
      const Int e2 = side(l2);
      if (e2 <= 0 || !triangle_ok(d1, d2, e2)) {
        out.pruned += n * n * n;
        continue;
      }
      const Int q2 = a1 + a2 - e2 * e2;
      const Int s2 = four_a1 * a2 - q2 * q2;
      for (long k3 = 0; k3 <= bound; ++k3) {
        const Int d3 = side(k3);
        if (d3 <= 0) {
          out.pruned += n * n;
          continue;
        }
        const Int a3 = d3 * d3;
        for (long l3 = 0; l3 <= bound; ++l3) {
          const Int e3 = side(l3);
          if (e3 <= 0 || !triangle_ok(d1, d3, e3)) {
            out.pruned += n;
            continue;
          }
          const Int q3 = a1 + a3 - e3 * e3;
          const Int s2s3 = s2 * (four_a1 * a3 - q3 * q3);
          const Int q2q3 = q2 * q3;
          const Int two_a1 = 2 * a1;
          const Int a2a3 = a2 + a3;
          for (long m = 0; m <= bound; ++m) {
            const Int f = side(m);
            if (f <= 0 || !triangle_ok(d2, d3, f) || !triangle_ok(e2, e3, f)) {
              ++out.pruned;
              continue;
            }
            ++out.checked;
            const Int u = two_a1 * (a2a3 - f * f) - q2q3;
            if (u * u == s2s3) out.violations.push_back({k1, k2, k3, l2, l3, m});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

IntPolynomial consistency_polynomial(const DistanceTuple& t) { return chain_polynomial(t, 1); }

IntPolynomial perturbed_consistency_polynomial(const DistanceTuple& t) { return chain_polynomial(t, 2); }

double generalized_residual(const std::array<double, 6>& sq) {
  for (double v : sq) {
    if (!(v >= 0.0)) throw std::invalid_argument("generalized_residual: squared lengths must be non-negative");
  }
  long double r = residual_from_squares<long double>(sq[0], sq[1], sq[2], sq[3], sq[4], sq[5]);
  return static_cast<double>(r);
}

double generalized_relative_residual(const std::array<double, 6>& sq) {
  double scale = 0.0;
  for (double v : sq) scale = std::max(scale, v);
  double r = generalized_residual(sq);
  if (scale == 0.0) return std::abs(r);
  return std::abs(r) / (scale * scale * scale * scale);
}

bool collinear_obstruction(const Rational& s) { return !s.is_integer(); }

CertificateReport certify_no_quadruple(const Rational& s, long bound, unsigned workers, const ProgressFn& progress) {
  if (bound < 1) throw std::invalid_argument("certify_no_quadruple: bound must be positive");
  Admissibility verdict = shift_admissible(s);
  if (verdict != Admissibility::admissible) {
    throw NotAdmissibleError("shift " + s.to_string() +
                             " is not admissible: 8s^8 lies in Z+4sZ+2s^2Z+4s^3Z+s^4Z+2s^5Z+2s^6Z+4s^7Z, "
                             "so an empty search would not certify anything");
  }

  auto start = std::chrono::steady_clock::now();
  if (workers == 0) workers = default_workers();

  const std::size_t slices = static_cast<std::size_t>(bound) + 1;
  std::vector<SliceResult> results(slices);

  // int128 holds |F| <= ~100 D^4 for side lengths D up to 1e4 with a wide
  // margin; beyond that fall back to GMP integers.
  const BigInt max_side = s.den() * bound + abs(s.num());
  const bool fast = s.num().fits_slong_p() && s.den().fits_slong_p() && max_side <= 10000;

  std::mutex progress_mutex;
  std::size_t done = 0;
  parallel_for(slices, workers, [&](std::size_t i) {
    long k1 = static_cast<long>(i);
    if (fast) {
      results[i] = enumerate_slice<__int128>(k1, bound, s.num().get_si(), s.den().get_si());
    } else {
      results[i] = enumerate_slice<BigInt>(k1, bound, s.num(), s.den());
    }
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(++done, slices);
    }
  });

  CertificateReport report;
  report.shift = s;
  report.bound = bound;
  report.workers = workers;
  for (auto& r : results) {
    report.tuples_checked += r.checked;
    report.tuples_pruned += r.pruned;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  }
  // Each hit is re-derived through the symbolic polynomial; a disagreement
  // would mean the scaled integer route is wrong.
  for (const auto& t : report.violations) {
    if (!consistency_polynomial(t).evaluate(s).is_zero())
      throw std::logic_error("certify_no_quadruple: integer and polynomial routes disagree");
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

PlanarPointSet half_integer_family(long k, long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("half_integer_family: k and l must be non-negative");
  if (2 * l + 1 > 2 * (2 * k + 1))
    throw std::domain_error("half_integer_family: (2l+1)/(2(2k+1)) exceeds 1, no such angle");

  const Rational radius(2 * k + 1);
  const Rational c = Rational(BigInt(2 * l + 1), BigInt(2));  // (2k+1) cos(theta)
  const Rational y2 = radius * radius - c * c;               // ((2k+1) sin(theta))^2
  const int sign = y2.is_zero() ? 0 : 1;

  std::vector<QuadraticPoint> pts{
      {Rational(0), Rational(0), 0},
      {Rational(1), Rational(0), 0},
      {c, y2, sign},
      {-c, y2, sign},
  };
  return PlanarPointSet(std::move(pts), {"a0", "a1", "a2", "a3"});
}

OddSearchResult search_odd_distance_quadruple(long bound, double tol) {
  if (bound < 3) throw std::invalid_argument("search_odd_distance_quadruple: bound must be >= 3");

  // Odd distances are the lattice 2Z+ + 1; halving gives Z+ + 1/2, where no
  // three points are collinear, so degenerate placements never carry a
  // candidate and are skipped.
  if (!collinear_obstruction(Rational(BigInt(1), BigInt(2))))
    throw std::logic_error("search_odd_distance_quadruple: collinear odd triples are impossible");

  std::vector<long> odd;
  for (long v = 1; v <= bound; v += 2) odd.push_back(v);

  OddSearchResult best;
  best.residual = std::numeric_limits<double>::infinity();

  auto place = [](double base, double r0, double r1, double& x, double& y) {
    x = (base * base + r0 * r0 - r1 * r1) / (2.0 * base);
    double y2 = r0 * r0 - x * x;
    if (y2 <= 0.0) return false;
    y = std::sqrt(y2);
    return true;
  };

  for (long d01 : odd) {
    const double b = static_cast<double>(d01);
    for (long d02 : odd) {
      for (long d12 : odd) {
        if (d02 + d12 < d01 || d02 + d01 < d12 || d12 + d01 < d02) continue;
        double x2, y2;
        if (!place(b, static_cast<double>(d02), static_cast<double>(d12), x2, y2)) continue;
        for (long d03 : odd) {
          for (long d13 : odd) {
            if (d03 + d13 < d01 || d03 + d01 < d13 || d13 + d01 < d03) continue;
            double x3, y3;
            if (!place(b, static_cast<double>(d03), static_cast<double>(d13), x3, y3)) continue;
            for (int side : {1, -1}) {
              if (side == 1 && d03 == d02 && d13 == d12) continue;  // a3 == a2
              const double yy = side * y3;
              ++best.configurations;
              double d23 = std::hypot(x3 - x2, yy - y2);
              long j = 0;
              double res = nearest_lattice_residual(d23, 2.0, 1.0, &j);
              if (res < best.residual) {
                best.residual = res;
                best.points = {PlanarPoint{0.0, 0.0}, PlanarPoint{b, 0.0}, PlanarPoint{x2, y2},
                               PlanarPoint{x3, yy}};
                best.distances = {d01, d02, d03, d12, d13, 2 * j + 1};
                best.measured_d23 = d23;
              }
            }
          }
        }
      }
    }
  }
  best.found = best.residual < tol;
  return best;
}

double ModelSquaredDistance::value() const {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return constant.to_double() + inv_pi2.to_double() / pi2 + inv_pi4.to_double() / (pi2 * pi2);
}

double ModelSquaredDistance::distance() const { return std::sqrt(value()); }

std::vector<ModelSquaredDistance> truncated_bessel_distances(long k_max, int terms) {
  if (k_max < 1) throw std::invalid_argument("truncated_bessel_distances: k_max must be >= 1");
  if (terms != 1 && terms != 2) throw std::invalid_argument("truncated_bessel_distances: terms must be 1 or 2");

  const Rational quarter(BigInt(1), BigInt(4));
  const Rational c1(BigInt(3), BigInt(4));
  const Rational c2(BigInt(3), BigInt(16));
  std::vector<ModelSquaredDistance> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (long k = 1; k <= k_max; ++k) {
    Rational shifted = Rational(k) + quarter;
    Rational lead = quarter * shifted * shifted;
    ModelSquaredDistance d;
    d.k = k;
    d.constant = lead;
    d.inv_pi2 = lead * c1 / (shifted * shifted);  // = 3/16
    if (terms == 2) d.inv_pi4 = lead * c2 / shifted.pow(4);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace shiftdist
