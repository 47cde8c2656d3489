#include "shiftdist/convex_body.hpp"

#include <memory>
#include <numbers>
#include <stdexcept>

namespace shiftdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fourier coefficients of one coordinate; only odd harmonics are kept.
struct Harmonics {
  std::vector<int> k;
  std::vector<double> cos_coef;
  std::vector<double> sin_coef;
};

Harmonics odd_harmonics(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  Harmonics h;
  for (int k = 1; k < (n + 1) / 2; k += 2) {
    double c = 0.0, s = 0.0;
    for (int j = 0; j < n; ++j) {
      double t = kTwoPi * j / n;
      c += values[j] * std::cos(k * t);
      s += values[j] * std::sin(k * t);
    }
    h.k.push_back(k);
    h.cos_coef.push_back(2.0 * c / n);
    h.sin_coef.push_back(2.0 * s / n);
  }
  return h;
}

// derivative order 0, 1 or 2 of sum a_k cos kt + b_k sin kt
double eval_harmonics(const Harmonics& h, double t, int order) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.k.size(); ++i) {
    const double k = h.k[i];
    const double c = std::cos(k * t), s = std::sin(k * t);
    switch (order) {
      case 0: sum += h.cos_coef[i] * c + h.sin_coef[i] * s; break;
      case 1: sum += k * (-h.cos_coef[i] * s + h.sin_coef[i] * c); break;
      default: sum += -k * k * (h.cos_coef[i] * c + h.sin_coef[i] * s); break;
    }
  }
  return sum;
}

}  // namespace

ConvexBody ConvexBody::disk(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("ConvexBody::disk: radius must be positive");
  ConvexBody body(Kind::disk, "disk");
  body.a_ = body.b_ = radius;
  body.area_ = std::numbers::pi * radius * radius;
  return body;
}

ConvexBody ConvexBody::ellipse(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("ConvexBody::ellipse: semi-axes must be positive");
  ConvexBody body(Kind::ellipse, "ellipse");
  body.a_ = a;
  body.b_ = b;
  body.area_ = std::numbers::pi * a * b;
  return body;
}

ConvexBody ConvexBody::generic(Curve curve, std::string name) {
  if (!curve.point || !curve.d1 || !curve.d2)
    throw std::invalid_argument("ConvexBody::generic: boundary, first and second derivatives are required");
  ConvexBody body(Kind::generic, std::move(name));
  body.curve_ = std::move(curve);

  double scale = 0.0;
  for (int i = 0; i < kValidationGrid; ++i) scale = std::max(scale, norm(body.boundary(kTwoPi * i / (kValidationGrid - 1))));
  if (!(scale > 0.0)) throw std::invalid_argument("ConvexBody::generic: degenerate boundary");

  for (int i = 0; i < kValidationGrid; ++i) {
    const double t = kTwoPi * i / (kValidationGrid - 1);
    if (!(body.curvature(t) > 0.0))
      throw std::invalid_argument("ConvexBody::generic: curvature not positive at t = " + std::to_string(t));
    Vec2 sym = body.boundary(t + std::numbers::pi) + body.boundary(t);
    if (norm(sym) > 1e-9 * scale)
      throw std::invalid_argument("ConvexBody::generic: not centrally symmetric at t = " + std::to_string(t));
  }

  // Area by the trapezoid rule on (1/2) cross(gamma, gamma'); spectrally
  // accurate for a smooth periodic integrand.
  const int n = 4096;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    sum += cross(body.boundary(t), body.tangent(t));
  }
  body.area_ = 0.5 * sum * kTwoPi / n;
  return body;
}

ConvexBody ConvexBody::from_boundary_samples(const std::vector<Vec2>& samples) {
  if (samples.size() < 8 || samples.size() % 2 != 0)
    throw std::invalid_argument("ConvexBody::from_boundary_samples: need an even number (>= 8) of samples");
  std::vector<double> xs, ys;
  for (const auto& p : samples) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  auto hx = std::make_shared<Harmonics>(odd_harmonics(xs));
  auto hy = std::make_shared<Harmonics>(odd_harmonics(ys));
  Curve curve{
      [hx, hy](double t) { return Vec2{eval_harmonics(*hx, t, 0), eval_harmonics(*hy, t, 0)}; },
      [hx, hy](double t) { return Vec2{eval_harmonics(*hx, t, 1), eval_harmonics(*hy, t, 1)}; },
      [hx, hy](double t) { return Vec2{eval_harmonics(*hx, t, 2), eval_harmonics(*hy, t, 2)}; },
  };
  return generic(std::move(curve), "sampled");
}

Vec2 ConvexBody::boundary(double t) const {
  if (kind_ == Kind::generic) return curve_.point(t);
  return {a_ * std::cos(t), b_ * std::sin(t)};
}

Vec2 ConvexBody::tangent(double t) const {
  if (kind_ == Kind::generic) return curve_.d1(t);
  return {-a_ * std::sin(t), b_ * std::cos(t)};
}

Vec2 ConvexBody::second_derivative(double t) const {
  if (kind_ == Kind::generic) return curve_.d2(t);
  return {-a_ * std::cos(t), -b_ * std::sin(t)};
}

double ConvexBody::curvature(double t) const {
  Vec2 d1 = tangent(t);
  double speed = norm(d1);
  return cross(d1, second_derivative(t)) / (speed * speed * speed);
}

double ConvexBody::area() const { return area_; }

}  // namespace shiftdist
