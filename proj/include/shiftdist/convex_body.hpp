#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace shiftdist {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// A centrally symmetric planar convex body with smooth boundary and
// positive curvature. Disks and ellipses carry closed forms; generic bodies
// are a counter-clockwise boundary curve gamma on [0, 2pi) with caller
// supplied first and second derivatives.
class ConvexBody {
 public:
  enum class Kind { disk, ellipse, generic };

  struct Curve {
    std::function<Vec2(double)> point;
    std::function<Vec2(double)> d1;
    std::function<Vec2(double)> d2;
  };

  // Samples used when validating generic bodies.
  static constexpr int kValidationGrid = 721;

  static ConvexBody disk(double radius = 1.0);
  static ConvexBody ellipse(double a, double b);
  // Throws std::invalid_argument unless curvature > 0 and
  // gamma(t + pi) = -gamma(t) on the validation grid.
  static ConvexBody generic(Curve curve, std::string name = "generic");
  // Trigonometric interpolant through samples taken at equally spaced
  // parameters; even harmonics are dropped to enforce central symmetry.
  static ConvexBody from_boundary_samples(const std::vector<Vec2>& samples);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double semi_a() const { return a_; }  // disk: radius
  double semi_b() const { return b_; }

  Vec2 boundary(double t) const;
  Vec2 tangent(double t) const;
  Vec2 second_derivative(double t) const;
  double curvature(double t) const;
  double area() const;

 private:
  ConvexBody(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  double a_ = 1.0;
  double b_ = 1.0;
  Curve curve_;
  double area_ = 0.0;
};

}  // namespace shiftdist
