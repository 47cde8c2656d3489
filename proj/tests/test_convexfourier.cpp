#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "shiftdist/convex_body.hpp"
#include "shiftdist/fourier.hpp"

using namespace shiftdist;

namespace {

constexpr double kPi = std::numbers::pi;

double disk_transform(double R, double rho) {
  if (rho == 0.0) return kPi * R * R;
  return R * std::cyl_bessel_j(1.0, 2.0 * kPi * R * rho) / rho;
}

// int_K e^{-2 pi i <x, xi>} dx = (i / (2 pi |xi|^2)) oint e^{-2 pi i <x, xi>} <xi, n> ds
// by the divergence theorem, with the trapezoid rule on the boundary.
double boundary_integral(const ConvexBody& body, Vec2 xi, int nodes = 4096) {
  std::complex<double> sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = 2.0 * kPi * i / nodes;
    Vec2 p = body.boundary(t), d = body.tangent(t);
    Vec2 n_ds{d.y, -d.x};
    sum += std::exp(std::complex<double>(0.0, -2.0 * kPi * dot(p, xi))) * dot(xi, n_ds);
  }
  sum *= 2.0 * kPi / nodes;
  std::complex<double> value = std::complex<double>(0.0, 1.0) / (2.0 * kPi * dot(xi, xi)) * sum;
  return value.real();
}

// gamma(t) = (cos t + e cos 3t, sin t - e sin 3t): odd harmonics only, so
// centrally symmetric, and convex with positive curvature for small e.
ConvexBody rounded_square(double e = 0.08) {
  ConvexBody::Curve c{
      [e](double t) { return Vec2{std::cos(t) + e * std::cos(3 * t), std::sin(t) - e * std::sin(3 * t)}; },
      [e](double t) { return Vec2{-std::sin(t) - 3 * e * std::sin(3 * t), std::cos(t) - 3 * e * std::cos(3 * t)}; },
      [e](double t) { return Vec2{-std::cos(t) - 9 * e * std::cos(3 * t), -std::sin(t) + 9 * e * std::sin(3 * t)}; },
  };
  return ConvexBody::generic(c, "rounded-square");
}

ConvexBody ellipse_as_generic(double a, double b) {
  ConvexBody::Curve c{
      [=](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; },
      [=](double t) { return Vec2{-a * std::sin(t), b * std::cos(t)}; },
      [=](double t) { return Vec2{-a * std::cos(t), -b * std::sin(t)}; },
  };
  return ConvexBody::generic(c, "ellipse-generic");
}

}  // namespace

TEST_CASE("body construction and validation") {
  CHECK(ConvexBody::disk(2.0).area() == doctest::Approx(4 * kPi));
  CHECK(ConvexBody::ellipse(2.0, 1.0).area() == doctest::Approx(2 * kPi));
  CHECK(ellipse_as_generic(2.0, 1.0).area() == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK_THROWS_AS(ConvexBody::disk(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexBody::ellipse(1.0, -1.0), std::invalid_argument);

  // shifted circle: not centrally symmetric about the origin
  ConvexBody::Curve shifted{
      [](double t) { return Vec2{0.5 + std::cos(t), std::sin(t)}; },
      [](double t) { return Vec2{-std::sin(t), std::cos(t)}; },
      [](double t) { return Vec2{-std::cos(t), -std::sin(t)}; },
  };
  CHECK_THROWS_AS(ConvexBody::generic(shifted), std::invalid_argument);
  // strong third harmonic: curvature changes sign
  CHECK_THROWS_AS(rounded_square(0.3), std::invalid_argument);
  CHECK_NOTHROW(rounded_square());

  std::vector<Vec2> samples;
  for (int i = 0; i < 64; ++i) {
    const double t = 2 * kPi * i / 64;
    samples.push_back({1.5 * std::cos(t), 0.75 * std::sin(t)});
  }
  ConvexBody sampled = ConvexBody::from_boundary_samples(samples);
  CHECK(sampled.area() == doctest::Approx(kPi * 1.5 * 0.75).epsilon(1e-10));
  CHECK(sampled.boundary(0.3).x == doctest::Approx(1.5 * std::cos(0.3)));
  CHECK_THROWS_AS(ConvexBody::from_boundary_samples(std::vector<Vec2>(7)), std::invalid_argument);
}

TEST_CASE("support function") {
  CHECK(support_function(ConvexBody::disk(), {2.0, 0.0}) == doctest::Approx(2.0));
  CHECK(support_function(ConvexBody::ellipse(2.0, 1.0), {1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(support_function(ConvexBody::disk(), {0.0, 0.0}) == 0.0);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3), lam(0.1, 10);
  ConvexBody bodies[] = {ConvexBody::ellipse(2.0, 1.0), rounded_square(), ellipse_as_generic(1.3, 0.6)};
  for (const auto& body : bodies) {
    for (int i = 0; i < 40; ++i) {
      Vec2 xi{u(rng), u(rng)};
      const double l = lam(rng);
      CHECK(support_function(body, l * xi) == doctest::Approx(l * support_function(body, xi)).epsilon(1e-10));
      double brute = -1e300;
      for (int j = 0; j < 20000; ++j) brute = std::max(brute, dot(body.boundary(2 * kPi * j / 20000), xi));
      CHECK(support_function(body, xi) == doctest::Approx(brute).epsilon(1e-7));
    }
  }
  Vec2 xi{0.3, -1.1};
  CHECK(support_function(ellipse_as_generic(2, 1), xi) ==
        doctest::Approx(std::sqrt(4 * xi.x * xi.x + xi.y * xi.y)).epsilon(1e-12));
}

TEST_CASE("Minkowski functional") {
  ConvexBody e = ConvexBody::ellipse(2.0, 1.0);
  CHECK(minkowski_functional(e, {1.0, 0.5}) == doctest::Approx(std::sqrt(0.25 + 0.25)));
  CHECK(minkowski_functional(e, {0.0, 0.0}) == 0.0);
  ConvexBody g = rounded_square();
  for (int i = 0; i < 50; ++i) {
    const double t = 0.1 + 2 * kPi * i / 50;
    Vec2 p = g.boundary(t);
    CHECK(minkowski_functional(g, p) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(minkowski_functional(g, 0.5 * p) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(minkowski_functional(g, 3.0 * p) == doctest::Approx(3.0).epsilon(1e-9));
  }
  ConvexBody ge = ellipse_as_generic(2.0, 1.0);
  CHECK(minkowski_functional(ge, {1.0, 0.5}) == doctest::Approx(minkowski_functional(e, {1.0, 0.5})).epsilon(1e-9));
}

TEST_CASE("chord lengths") {
  ConvexBody d = ConvexBody::disk(2.0);
  CHECK(chord_length(d, {1.0, 0.0}, 1.0) == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(chord_length(d, {0.0, 1.0}, 0.0) == doctest::Approx(4.0));
  CHECK(chord_length(d, {1.0, 0.0}, 2.5) == 0.0);
  ConvexBody e = ConvexBody::ellipse(2.0, 1.0), ge = ellipse_as_generic(2.0, 1.0);
  for (double ang : {0.0, 0.4, 1.1, 2.0}) {
    Vec2 u{std::cos(ang), std::sin(ang)};
    const double h = support_function(e, u);
    for (double f : {0.0, 0.3, 0.9, 0.999}) {
      CHECK(chord_length(ge, u, f * h) == doctest::Approx(chord_length(e, u, f * h)).epsilon(1e-8));
      CHECK(chord_length(e, u, f * h) == doctest::Approx(chord_length(e, u, -f * h)));
    }
  }
}

TEST_CASE("disk transform against the Bessel closed form") {
  ConvexBody d = ConvexBody::disk();
  CHECK(chi_hat(d, {0.0, 0.0}).value == doctest::Approx(kPi).epsilon(1e-12));
  for (int i = 1; i <= 60; ++i) {
    const double rho = 20.0 * i / 60.0;
    const double ang = 0.37 * i;
    FourierSample s = chi_hat(d, {rho * std::cos(ang), rho * std::sin(ang)});
    CHECK(std::abs(s.value - disk_transform(1.0, rho)) <= 1e-8);
    CHECK(s.error_estimate <= 1e-8);
  }
  ConvexBody d2 = ConvexBody::disk(1.7);
  CHECK(std::abs(chi_hat(d2, {2.2, -0.4}).value - disk_transform(1.7, norm({2.2, -0.4}))) <= 1e-8);
}

TEST_CASE("ellipse transform follows the affine rule") {
  const double a = 2.0, b = 1.0;
  ConvexBody e = ConvexBody::ellipse(a, b);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-6, 6);
  for (int i = 0; i < 40; ++i) {
    Vec2 xi{u(rng), u(rng)};
    const double expected = a * b * disk_transform(1.0, norm({a * xi.x, b * xi.y}));
    CHECK(std::abs(chi_hat(e, xi).value - expected) <= 1e-8);
    CHECK(chi_hat(e, xi).value == doctest::Approx(chi_hat(e, -xi).value).epsilon(1e-12));
  }
}

TEST_CASE("generic bodies against the boundary integral") {
  ConvexBody g = rounded_square();
  CHECK(chi_hat(g, {0.0, 0.0}).value == doctest::Approx(g.area()).epsilon(1e-12));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 25; ++i) {
    Vec2 xi{u(rng), u(rng)};
    CHECK(std::abs(chi_hat(g, xi).value - boundary_integral(g, xi)) <= 1e-8);
  }
  ConvexBody ge = ellipse_as_generic(2.0, 1.0);
  CHECK(std::abs(chi_hat(ge, {1.3, 0.7}).value - chi_hat(ConvexBody::ellipse(2.0, 1.0), {1.3, 0.7}).value) <= 1e-8);
}

TEST_CASE("quadrature budget") {
  bool thrown = false;
  try {
    chi_hat(ConvexBody::disk(), {40.0, 0.0}, 1e-12, 50);
  } catch (const QuadratureError& e) {
    thrown = true;
    CHECK(std::isfinite(e.best_estimate()));
  }
  CHECK(thrown);
}

TEST_CASE("orthogonality") {
  ConvexBody d = ConvexBody::disk();
  const double r1 = 3.8317059702075123 / (2 * kPi);
  CHECK(orthogonality_check(d, {0.0, 0.0}, {r1, 0.0}, 1e-8));
  CHECK(orthogonality_check(d, {0.2, 0.1}, {0.2 + r1 * std::cos(1.0), 0.1 + r1 * std::sin(1.0)}, 1e-8));
  CHECK_FALSE(orthogonality_check(d, {0.0, 0.0}, {0.5, 0.0}, 1e-8));
  CHECK_THROWS_AS(orthogonality_check(d, {1.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("sign-change radii") {
  auto disk = sign_change_radii(ConvexBody::disk(), {1.0, 0.0}, 3.0);
  const double zeros[] = {3.8317059702075123, 7.0155866698156187, 10.173468135062722, 13.323691936314223,
                          16.470630050877633};
  REQUIRE(disk.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(disk[i] == doctest::Approx(zeros[i] / (2 * kPi)).epsilon(1e-11));

  // ellipse along the minor axis: zeros at j / (2 pi b)
  auto ell = sign_change_radii(ConvexBody::ellipse(2.0, 1.0), {0.0, 1.0}, 1.0);
  REQUIRE(ell.size() >= 1);
  CHECK(ell[0] == doctest::Approx(zeros[0] / (2 * kPi)).epsilon(1e-10));
}

TEST_CASE("contact curvature") {
  CHECK(contact_curvature(ConvexBody::disk(2.0), {0.3, 0.4}) == doctest::Approx(0.5));
  CHECK(contact_curvature(ConvexBody::ellipse(2.0, 1.0), {1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(contact_curvature(ConvexBody::ellipse(2.0, 1.0), {0.0, 1.0}) == doctest::Approx(0.25));
  CHECK(contact_curvature(ellipse_as_generic(2.0, 1.0), {0.0, 1.0}) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("stationary phase for the disk and an ellipse") {
  std::vector<double> radii;
  for (int i = 0; i < 400; ++i) radii.push_back(5.0 + 45.0 * i / 399.0);
  DecayReport d = stationary_phase_check(ConvexBody::disk(), {1.0, 0.0}, radii);
  CHECK(d.reliable);
  CHECK(d.c1 == doctest::Approx(1.0 / kPi).epsilon(0.01));
  CHECK(d.c1_predicted == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK(d.decay_exponent >= -2.7);
  CHECK(d.decay_exponent <= -2.3);

  for (Vec2 u : {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
    DecayReport e = stationary_phase_check(ConvexBody::ellipse(2.0, 1.0), u, radii);
    CHECK(e.reliable);
    CHECK(!e.sign_change_radii.empty());
    CHECK(e.max_phase_deviation < 1e-2);
    for (double r : e.sign_change_radii) CHECK(r >= 10.0);
    CHECK(e.c1 == doctest::Approx(e.c1_predicted).epsilon(0.01));
  }

  std::vector<double> coarse;
  for (int i = 0; i < 120; ++i) coarse.push_back(5.0 + 25.0 * i / 119.0);
  DecayReport g = stationary_phase_check(rounded_square(), {0.6, 0.8}, coarse);
  CHECK(g.c1 == doctest::Approx(g.c1_predicted).epsilon(0.02));

  DecayReport bad = stationary_phase_check(ConvexBody::disk(), {1.0, 0.0}, {0.5, 1.0, 1.5});
  CHECK_FALSE(bad.reliable);
}
