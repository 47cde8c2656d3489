// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "shiftdist/bessel.hpp"
#include "shiftdist/fourier.hpp"
#include "shiftdist/lattice.hpp"
#include "shiftdist/ortho.hpp"
#include "shiftdist/quadsearch.hpp"

using namespace shiftdist;

namespace {

constexpr double kPi = std::numbers::pi;

Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  criterion(1, "admissibility closed form", [] {
    const auto t0 = std::chrono::steady_clock::now();
    long checked = 0, wrong = 0;
    for (long q = 1; q <= 100; ++q)
      for (long p = -100; p <= 100; ++p) {
        if (std::gcd(p, q) != 1) continue;
        ++checked;
        const bool refused = shift_admissible(R(p, q)) == Admissibility::not_admissible;
        if (refused != (q <= 2)) ++wrong;
      }
    const double t = seconds_since(t0);
    return Outcome{wrong == 0 && t < 1.0, fmt("%ld reduced shifts, %ld mismatches, %.3f s (limit 1 s)", checked, wrong, t)};
  });

  criterion(2, "equidistant obstruction", [] {
    IntPolynomial f = consistency_polynomial({0, 0, 0, 0, 0, 0});
    const bool ok = f == -8 * IntPolynomial::variable(0, 1).pow(8);
    return Outcome{ok, "F(0,0,0,0,0,0) = " + f.to_string()};
  });

  criterion(3, "rectangle realization", [] {
    Rational v = consistency_polynomial({3, 4, 5, 5, 4, 3}).evaluate(R(0));
    return Outcome{v.is_zero(), "F(3,4,5,5,4,3)(0) = " + v.to_string()};
  });

  criterion(4, "certificate run at bound 25", [] {
    bool ok = true;
    std::ostringstream d;
    for (Rational s : {R(1, 4), R(1, 3), R(3, 4)}) {
      CertificateReport rep = certify_no_quadruple(s, 25);
      ok = ok && rep.violations.empty() && rep.wall_time < 60.0 &&
           rep.tuples_checked + rep.tuples_pruned == 308915776ULL;
      d << "s=" << s.to_string() << ": " << rep.tuples_checked << " feasible, " << rep.violations.size()
        << " zeros, " << fmt("%.2f", rep.wall_time) << " s; ";
    }
    d << "limit 60 s each";
    return Outcome{ok, d.str()};
  });

  criterion(5, "planar identity", [] {
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> c(-10, 10);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      double x[4], y[4];
      for (int j = 0; j < 4; ++j) x[j] = c(rng), y[j] = c(rng);
      auto sq = [&](int a, int b) { return (x[a] - x[b]) * (x[a] - x[b]) + (y[a] - y[b]) * (y[a] - y[b]); };
      worst = std::max(worst, generalized_relative_residual({sq(0, 1), sq(0, 2), sq(0, 3), sq(1, 2), sq(1, 3), sq(2, 3)}));
    }
    return Outcome{worst <= 1e-6, fmt("worst relative residual %.3e over 10^4 quadruples (limit 1e-6)", worst)};
  });

  criterion(6, "half-integer family", [] {
    long sets = 0, bad = 0;
    for (long k = 0; k <= 100; ++k)
      for (long l = 0; l <= 2 * k; ++l) {
        ++sets;
        PlanarPointSet a = half_integer_family(k, l);
        const long o = 2 * l + 1;
        auto d23 = exact_sqrt(a.exact_squared_distance(2, 3).value());
        const bool ok = a.exact_squared_distance(1, 2) == R(4 * k * k + 2 * (2 * k - l) + 1) &&
                        a.exact_squared_distance(1, 3) == R(4 * k * k + 2 * (2 * k + l) + 3) && d23 &&
                        *d23 == R(o);
        if (!ok) ++bad;
      }
    return Outcome{bad == 0, fmt("%ld sets for k <= 100, %ld with a wrong distance", sets, bad)};
  });

  criterion(7, "odd-distance search", [] {
    OddSearchResult r = search_odd_distance_quadruple(25, 1e-9);
    std::ostringstream d;
    d << (r.found ? "found" : "none found") << fmt(", minimum residual %.3e at distances [", r.residual);
    for (int i = 0; i < 6; ++i) d << r.distances[i] << (i < 5 ? "," : "]");
    d << ", " << r.configurations << " configurations";
    return Outcome{!r.found, d.str()};
  });

  criterion(8, "Bessel zeros", [] {
    ZeroTable t = j1_zeros(50, 1e-12);
    bool certified = true;
    for (const auto& e : t.entries)
      certified = certified && e.hi - e.lo <= 2e-10 && (shiftdist::j1(e.lo) > 0) != (shiftdist::j1(e.hi) > 0);
    // bisection on the standard library J1
    double lo = 3.0, hi = 4.5;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if ((std::cyl_bessel_j(1.0, lo) > 0) == (std::cyl_bessel_j(1.0, mid) > 0)) lo = mid;
      else hi = mid;
    }
    const double first_err = std::abs(t.entries[0].value - 0.5 * (lo + hi));
    ResidualReport stated = verify_zero_asymptotics(t, kStatedZeroCorrection, 5);
    ExpansionFit fit = fit_expansion_coefficients(t, 2);
    const double c1 = fit.coefficients[0];
    const bool slope_ok = stated.slope >= -2.15 && stated.slope <= -1.85;
    const bool c1_ok = std::abs(c1 - 0.75) <= 0.01;
    const bool ok = certified && first_err <= 1e-9 && slope_ok && c1_ok;

    ResidualReport flipped = verify_zero_asymptotics(t, kMcMahonZeroCorrection, 5);
    std::string d = fmt("50 zeros certified: %s; first zero vs bisection %.1e (limit 1e-9); "
                        "slope with +3/(4pi^2) = %.4f (need [-2.15,-1.85]), residual -> %.6f; "
                        "fitted c1 = %.4f +/- %.1e (need 0.75 +/- 0.01)",
                        certified ? "yes" : "no", first_err, stated.slope, stated.residual.back(), c1,
                        fit.std_errors[0]);
    if (!ok)
      d += fmt(" || with -3/(4pi^2) instead: slope %.4f, max |r_k| k^2 = %.4f; the zeros satisfy "
               "4 rho_k^2 = (k+1/4)^2 - 3/(4pi^2) + O(k^-2), so c1 = -3/4",
               flipped.slope, flipped.max_scaled);
    return Outcome{ok, d};
  });

  criterion(9, "disk Fourier transform", [] {
    ConvexBody disk = ConvexBody::disk();
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double r = 0.2 * i;
      const double phi = 0.37 * i;
      const double q = chi_hat(disk, {r * std::cos(phi), r * std::sin(phi)}).value;
      worst = std::max(worst, std::abs(q - std::cyl_bessel_j(1.0, 2 * kPi * r) / r));
    }
    const double origin = std::abs(chi_hat(disk, {0.0, 0.0}).value - kPi);
    return Outcome{worst <= 1e-8 && origin <= 1e-10,
                   fmt("max |quadrature - J1(2 pi r)/r| = %.2e over 100 radii in (0,20] (limit 1e-8); "
                       "|chi_hat(0) - area| = %.1e (limit 1e-10)",
                       worst, origin)};
  });

  criterion(10, "stationary phase", [] {
    std::vector<double> radii;
    for (int i = 0; i < 400; ++i) radii.push_back(5.0 + 45.0 * i / 399.0);
    DecayReport d = stationary_phase_check(ConvexBody::disk(), {1.0, 0.0}, radii);
    const double c1_rel = std::abs(d.c1 * kPi - 1.0);
    bool ok = c1_rel <= 0.01 && d.decay_exponent >= -2.7 && d.decay_exponent <= -2.3;
    std::string detail = fmt("disk C1 = %.6f (1/pi = %.6f, rel %.1e, limit 1e-2), error exponent %.3f (need [-2.7,-2.3])",
                             d.c1, 1.0 / kPi, c1_rel, d.decay_exponent);
    ConvexBody e = ConvexBody::ellipse(2.0, 1.0);
    for (Vec2 u : {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
      DecayReport r = stationary_phase_check(e, u, radii, 10.0);
      const bool axis_ok = !r.sign_change_radii.empty() && r.max_phase_deviation <= 1e-2;
      ok = ok && axis_ok;
      detail += fmt("; ellipse (2,1) along (%g,%g): %zu sign changes, max phase deviation %.1e (limit 1e-2)", u.x, u.y,
                    r.sign_change_radii.size(), r.max_phase_deviation);
    }
    return Outcome{ok, detail};
  });

  criterion(11, "orthogonal cliques", [] {
    ConvexBody disk = ConvexBody::disk();
    ZeroTable z = j1_zeros(40);
    CliqueReport rep = max_orthogonal_clique(disk, z.entries.back().value / (2 * kPi), 1e-8);
    bool witness_ok = rep.witness.size() == 3;
    for (std::size_t i = 0; witness_ok && i < rep.witness.size(); ++i)
      for (std::size_t j = i + 1; j < rep.witness.size(); ++j)
        witness_ok = witness_ok && orthogonality_check(disk, {rep.witness[i].x, rep.witness[i].y},
                                                       {rep.witness[j].x, rep.witness[j].y}, 1e-8);
    const bool ok = rep.distances.size() == 40 && rep.max_clique == 3 && witness_ok &&
                    rep.embeddable_quadruples.empty() && rep.wall_time < 300.0;
    return Outcome{ok, fmt("%zu distances, max clique %d, equilateral witness orthogonal: %s, %zu embeddable "
                           "quadruples, min normalized Cayley-Menger %.3e, %llu quadruples checked, %.2f s (limit 300 s)",
                           rep.distances.size(), rep.max_clique, witness_ok ? "yes" : "no",
                           rep.embeddable_quadruples.size(), rep.min_residual,
                           static_cast<unsigned long long>(rep.quadruples_checked), rep.wall_time)};
  });

  criterion(12, "integer-distance construction", [] {
    SolymosiSet s = solymosi_example(12, 40);
    bool ok = s.m_values == std::vector<long>{5, 9, 16, 35} && has_integer_distances(s.points);
    std::string detail = "n=12, N=40: m = {";
    for (std::size_t i = 0; i < s.m_values.size(); ++i) detail += (i ? "," : "") + std::to_string(s.m_values[i]);
    detail += has_integer_distances(s.points) ? "}, integer distances" : "}, NON-integer distances";

    const long n = 1155;
    GrowthTable g = count_growth_scan(n, {1000, 10000, 100000});
    double max_ratio = 0.0;
    for (const auto& row : g.rows) {
      SolymosiSet big = solymosi_example(n, row.limit);
      CountReport c = verify_linear_count(big.points, static_cast<double>(row.q), 1.0);
      ok = ok && c.within_bound && has_integer_distances(big.points);
      max_ratio = std::max(max_ratio, row.linear_ratio);
      detail += fmt("; N=%ld: %zu points, count/q = %.4f", row.limit, row.count, row.linear_ratio);
    }
    ok = ok && max_ratio <= 1.0 && g.rows.back().linear_ratio <= g.rows.front().linear_ratio;
    detail += fmt("; n=%ld, max ratio %.4f", n, max_ratio);
    return Outcome{ok, detail};
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
