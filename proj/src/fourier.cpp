#include "shiftdist/fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace shiftdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& coarse_rule() {
  static const GaussRule rule = gauss_legendre(12);
  return rule;
}

const GaussRule& fine_rule() {
  static const GaussRule rule = gauss_legendre(24);
  return rule;
}

Vec2 unit(Vec2 v) {
  double n = norm(v);
  return {v.x / n, v.y / n};
}

// Parameter of the boundary point maximizing <gamma(t), u>: best sample on
// the validation grid, then Newton on <gamma'(t), u> = 0.
double generic_contact_parameter(const ConvexBody& body, Vec2 u) {
  const int n = ConvexBody::kValidationGrid - 1;
  double best_t = 0.0, best = -INFINITY;
  for (int i = 0; i < n; ++i) {
    double t = kTwoPi * i / n;
    double v = dot(body.boundary(t), u);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  const double step = kTwoPi / n;
  double lo = best_t - step, hi = best_t + step;
  double t = best_t;
  for (int iter = 0; iter < 60; ++iter) {
    double g = dot(body.tangent(t), u);
    double dg = dot(body.second_derivative(t), u);
    double next = (dg < 0.0) ? t - g / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // <gamma', u> decreases through the maximum
    if (dot(body.tangent(next), u) > 0.0) {
      lo = next;
    } else {
      hi = next;
    }
    if (std::abs(next - t) < 1e-15) {
      t = next;
      break;
    }
    t = next;
  }
  return t;
}

double ellipse_contact_parameter(const ConvexBody& body, Vec2 u) {
  return std::atan2(body.semi_b() * u.y, body.semi_a() * u.x);
}

// Solves <gamma(t), u> = target on [lo, hi] where the left side is monotone
// with value f_lo at lo.
double solve_on_arc(const ConvexBody& body, Vec2 u, double target, double lo, double hi) {
  double f_lo = dot(body.boundary(lo), u) - target;
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    double f = dot(body.boundary(t), u) - target;
    if (f == 0.0) return t;
    if (std::signbit(f) == std::signbit(f_lo)) {
      lo = t;
      f_lo = f;
    } else {
      hi = t;
    }
    double df = dot(body.tangent(t), u);
    double next = (df != 0.0) ? t - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 1e-15 || hi - lo < 1e-15) return next;
    t = next;
  }
  return t;
}

// Illinois variant of regula falsi on a sign-change bracket; keeps the
// bracket like bisection but converges superlinearly on smooth f.
template <class F>
double refine_root(F&& f, double lo, double hi, double flo, double fhi, double xtol) {
  double c = 0.5 * (lo + hi);
  int side = 0;
  for (int iter = 0; iter < 100 && hi - lo > xtol; ++iter) {
    c = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(c > lo && c < hi)) c = 0.5 * (lo + hi);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if (std::signbit(fc) == std::signbit(fhi)) {
      hi = c;
      fhi = fc;
      if (side == 1) flo *= 0.5;
      side = 1;
    } else {
      lo = c;
      flo = fc;
      if (side == -1) fhi *= 0.5;
      side = -1;
    }
  }
  return c;
}

}  // namespace

double support_function(const ConvexBody& body, Vec2 xi) {
  if (xi.x == 0.0 && xi.y == 0.0) return 0.0;
  switch (body.kind()) {
    case ConvexBody::Kind::disk: return body.semi_a() * norm(xi);
    case ConvexBody::Kind::ellipse: return std::hypot(body.semi_a() * xi.x, body.semi_b() * xi.y);
    case ConvexBody::Kind::generic: break;
  }
  double t = generic_contact_parameter(body, unit(xi));
  return dot(body.boundary(t), xi);
}

double minkowski_functional(const ConvexBody& body, Vec2 x) {
  if (x.x == 0.0 && x.y == 0.0) return 0.0;
  switch (body.kind()) {
    case ConvexBody::Kind::disk: return norm(x) / body.semi_a();
    case ConvexBody::Kind::ellipse: return std::hypot(x.x / body.semi_a(), x.y / body.semi_b());
    case ConvexBody::Kind::generic: break;
  }
  // Find where the ray through x leaves K: cross(gamma(t), x) = 0 with
  // gamma(t) on the same side as x.
  const Vec2 u = unit(x);
  const int n = ConvexBody::kValidationGrid - 1;
  for (int i = 0; i < n; ++i) {
    double t0 = kTwoPi * i / n, t1 = kTwoPi * (i + 1) / n;
    Vec2 p0 = body.boundary(t0), p1 = body.boundary(t1);
    double c0 = cross(p0, u), c1 = cross(p1, u);
    if (dot(p0, u) <= 0.0) continue;
    if (c0 == 0.0) return norm(x) / norm(p0);
    if (std::signbit(c0) == std::signbit(c1)) continue;
    for (int iter = 0; iter < 200 && t1 - t0 > 1e-16; ++iter) {
      double tm = 0.5 * (t0 + t1);
      double cm = cross(body.boundary(tm), u);
      if (std::signbit(cm) == std::signbit(c0)) {
        t0 = tm;
        c0 = cm;
      } else {
        t1 = tm;
      }
    }
    return norm(x) / norm(body.boundary(0.5 * (t0 + t1)));
  }
  throw std::logic_error("minkowski_functional: ray does not meet the boundary");
}

double chord_length(const ConvexBody& body, Vec2 u, double offset) {
  const double h = support_function(body, u);
  if (std::abs(offset) >= h) return 0.0;
  if (body.kind() != ConvexBody::Kind::generic) {
    // affine image of the unit disk: w(t) = (2ab/h) sqrt(1 - (t/h)^2)
    const double ratio = offset / h;
    return 2.0 * body.semi_a() * body.semi_b() / h * std::sqrt(1.0 - ratio * ratio);
  }
  // <gamma, u> decreases from h to -h on [t0, t0 + pi] and increases back on
  // [t0 + pi, t0 + 2 pi] (central symmetry puts the minimum at t0 + pi).
  const double t0 = generic_contact_parameter(body, u);
  double ta = solve_on_arc(body, u, offset, t0, t0 + kPi);
  double tb = solve_on_arc(body, u, offset, t0 + kPi, t0 + kTwoPi);
  return norm(body.boundary(ta) - body.boundary(tb));
}

double contact_curvature(const ConvexBody& body, Vec2 direction) {
  const Vec2 u = unit(direction);
  switch (body.kind()) {
    case ConvexBody::Kind::disk: return 1.0 / body.semi_a();
    case ConvexBody::Kind::ellipse: return body.curvature(ellipse_contact_parameter(body, u));
    case ConvexBody::Kind::generic: break;
  }
  return body.curvature(generic_contact_parameter(body, u));
}

FourierSample chi_hat(const ConvexBody& body, Vec2 xi, double tol, std::size_t max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("chi_hat: tol must be positive");
  FourierSample sample;
  sample.xi = xi;
  const double rho = norm(xi);
  if (rho == 0.0) {
    sample.value = body.area();
    return sample;
  }
  const Vec2 u = unit(xi);
  const double h = support_function(body, u);
  const bool closed_chord = body.kind() != ConvexBody::Kind::generic;
  const double ab = body.semi_a() * body.semi_b();
  const double generic_t0 = closed_chord ? 0.0 : generic_contact_parameter(body, u);

  // chi_hat = 2 int_0^{pi/2} w(h sin phi) h cos(phi) cos(2 pi rho h sin phi) dphi
  auto integrand = [&](double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    const double t = h * s;
    double w;
    if (closed_chord) {
      w = 2.0 * ab / h * c;
    } else if (t >= h) {
      w = 0.0;
    } else {
      double ta = solve_on_arc(body, u, t, generic_t0, generic_t0 + kPi);
      double tb = solve_on_arc(body, u, t, generic_t0 + kPi, generic_t0 + kTwoPi);
      w = norm(body.boundary(ta) - body.boundary(tb));
    }
    return 2.0 * w * h * c * std::cos(kTwoPi * rho * t);
  };

  struct Panel {
    double lo, hi;
    int depth;
  };
  auto apply = [&](const GaussRule& rule, double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    return sum * half;
  };

  const double span = 0.5 * kPi;
  // phase 2 pi rho h sin(phi) moves at most pi/2 per panel
  const std::size_t initial = std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(kTwoPi * rho * h)));
  std::vector<Panel> stack;
  stack.reserve(initial);
  for (std::size_t i = initial; i-- > 0;) stack.push_back({span * i / initial, span * (i + 1) / initial, 0});

  const std::size_t per_panel = coarse_rule().nodes.size() + fine_rule().nodes.size();
  double total = 0.0, error = 0.0;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    if (sample.evaluations + per_panel > max_evaluations) {
      throw QuadratureError("chi_hat: panel budget exhausted before reaching tol", total + apply(fine_rule(), p.lo, span),
                            error);
    }
    double coarse = apply(coarse_rule(), p.lo, p.hi);
    double fine = apply(fine_rule(), p.lo, p.hi);
    sample.evaluations += per_panel;
    double diff = std::abs(fine - coarse);
    double panel_tol = tol * (p.hi - p.lo) / span;
    if (diff <= panel_tol || diff <= 1e-17 || p.depth >= 40) {
      total += fine;
      error += diff;
    } else {
      double mid = 0.5 * (p.lo + p.hi);
      stack.push_back({mid, p.hi, p.depth + 1});
      stack.push_back({p.lo, mid, p.depth + 1});
    }
  }
  sample.value = total;
  sample.error_estimate = error;
  if (error > tol) {
    throw QuadratureError("chi_hat: estimated error exceeds tol", total, error);
  }
  return sample;
}

bool orthogonality_check(const ConvexBody& body, Vec2 a, Vec2 a_prime, double tol) {
  if (a == a_prime) throw std::invalid_argument("orthogonality_check: a == a' (chi_hat(0) is the area)");
  const double quad_tol = std::max(tol * 1e-2, 1e-14);
  return std::abs(chi_hat(body, a - a_prime, quad_tol).value) < tol;
}

std::vector<double> sign_change_radii(const ConvexBody& body, Vec2 unit_direction, double radius_bound, double tol) {
  const Vec2 u = unit(unit_direction);
  const double h = support_function(body, u);
  const double step = 1.0 / (8.0 * h);  // eighth of a period of sin(2 pi h r)
  auto f = [&](double r) { return chi_hat(body, r * u, tol).value; };

  std::vector<double> roots;
  double r0 = step, f0 = f(r0);
  while (r0 < radius_bound) {
    double r1 = r0 + step, f1 = f(r1);
    if (std::signbit(f0) != std::signbit(f1)) {
      const double root = refine_root(f, r0, r1, f0, f1, 1e-13 * r1);
      if (root <= radius_bound) roots.push_back(root);
    }
    r0 = r1;
    f0 = f1;
  }
  return roots;
}

DecayReport stationary_phase_check(const ConvexBody& body, Vec2 direction, const std::vector<double>& radii,
                                   double phase_min_radius, double quadrature_tol) {
  if (radii.size() < 2) throw std::invalid_argument("stationary_phase_check: need at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1])))
      throw std::invalid_argument("stationary_phase_check: radii must be positive and increasing");
  }

  DecayReport report;
  report.direction = unit(direction);
  const Vec2 u = report.direction;
  const double h = support_function(body, u);
  report.support = h;
  report.radii = radii;
  report.c1_predicted = 1.0 / (kPi * std::sqrt(contact_curvature(body, u)));

  auto phase = [&](double r) { return kTwoPi * (h * r - 0.125); };
  auto value_at = [&](double r) { return chi_hat(body, r * u, quadrature_tol).value; };

  report.values.reserve(radii.size());
  for (double r : radii) report.values.push_back(value_at(r));

  // Two-term template at the two largest radii:
  //   chi_hat = C1 r^{-3/2} sin(phase) + B r^{-5/2} cos(phase)
  const std::size_t n = radii.size();
  const double ra = radii[n - 2], rb = radii[n - 1];
  const double ga = std::pow(ra, -1.5) * std::sin(phase(ra)), gb = std::pow(rb, -1.5) * std::sin(phase(rb));
  const double fa = std::pow(ra, -2.5) * std::cos(phase(ra)), fb = std::pow(rb, -2.5) * std::cos(phase(rb));
  const double det = ga * fb - gb * fa;
  const double va = report.values[n - 2], vb = report.values[n - 1];
  if (std::abs(det) > 1e-3 * std::hypot(ga, gb) * std::hypot(fa, fb)) {
    report.c1 = (va * fb - vb * fa) / det;
    report.next_order = (ga * vb - gb * va) / det;
  } else {
    report.c1 = (std::abs(gb) >= std::abs(ga)) ? vb / gb : va / ga;
    report.note += "two-term amplitude fit singular; used one radius. ";
  }

  report.errors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.errors.push_back(report.values[i] - report.c1 * std::pow(radii[i], -1.5) * std::sin(phase(radii[i])));
  }

  // |E| oscillates with the phase; fit its envelope through the maximum of
  // |E| over each full period 1/h of the leading term.
  std::vector<double> bx, by;
  {
    const double period = 1.0 / h;
    std::size_t i = 0;
    while (i < n) {
      const double bin_end = radii[i] + period;
      double best = 0.0, best_r = radii[i];
      std::size_t count = 0;
      while (i < n && radii[i] < bin_end) {
        if (std::abs(report.errors[i]) > best) {
          best = std::abs(report.errors[i]);
          best_r = radii[i];
        }
        ++i;
        ++count;
      }
      if (count >= 3 && best > 0.0 && bin_end <= radii.back() + 1e-12) {
        bx.push_back(std::log(best_r));
        by.push_back(std::log(best));
      }
    }
  }
  report.envelope_bins = bx.size();
  if (bx.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < bx.size(); ++i) {
      sx += bx[i];
      sy += by[i];
      sxx += bx[i] * bx[i];
      sxy += bx[i] * by[i];
    }
    const double m = static_cast<double>(bx.size());
    report.decay_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (radii[i] < phase_min_radius) continue;
    double flo = report.values[i], fhi = report.values[i + 1];
    if (std::signbit(flo) == std::signbit(fhi)) continue;
    const double root = refine_root(value_at, radii[i], radii[i + 1], flo, fhi, 1e-11);
    const double shifted = h * root - 0.125;
    const double dev = std::abs(shifted - 0.5 * std::round(2.0 * shifted));
    report.sign_change_radii.push_back(root);
    report.phase_deviation.push_back(dev);
    report.max_phase_deviation = std::max(report.max_phase_deviation, dev);
  }

  if (radii.front() < 2.0) {
    report.reliable = false;
    report.note += "radii below 2 are outside the asymptotic regime. ";
  }
  if (report.envelope_bins < 3) {
    report.reliable = false;
    report.note += "fewer than three full periods sampled for the error envelope. ";
  }
  return report;
}

}  // namespace shiftdist
