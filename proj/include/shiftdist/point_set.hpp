#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftdist/rational.hpp"

namespace shiftdist {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

double distance(const PlanarPoint& a, const PlanarPoint& b);

// A point whose x coordinate is rational and whose y coordinate is
// y_sign * sqrt(y_squared) with y_squared rational. Enough to carry every
// exact construction in this library (lattice points and the half-integer
// family) without algebraic-number arithmetic.
struct QuadraticPoint {
  Rational x;
  Rational y_squared;
  int y_sign = 1;  // -1, 0 or +1

  static QuadraticPoint integer(long x, long y);
  PlanarPoint approx() const;
};

// Exact squared distance, or nullopt when the cross term
// sqrt(y_a^2 * y_b^2) is irrational (the result would leave Q).
std::optional<Rational> exact_squared_distance(const QuadraticPoint& a, const QuadraticPoint& b);

// Finite point set A in the plane with optional exact coordinates.
class PlanarPointSet {
 public:
  PlanarPointSet() = default;
  explicit PlanarPointSet(std::vector<PlanarPoint> points, std::vector<std::string> labels = {});
  explicit PlanarPointSet(std::vector<QuadraticPoint> exact_points, std::vector<std::string> labels = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<PlanarPoint>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_exact() const { return exact_.has_value(); }
  const std::vector<QuadraticPoint>& exact_points() const { return *exact_; }

  // All pairwise distances |a_i - a_j|, i < j, in row-major pair order.
  std::vector<double> distance_set() const;
  double distance(std::size_t i, std::size_t j) const;
  std::optional<Rational> exact_squared_distance(std::size_t i, std::size_t j) const;

  // Image under x -> factor * x. Exact coordinates are kept when present.
  PlanarPointSet scaled(const Rational& factor) const;

  // True iff every pairwise distance lies within tol of step * k + shift for
  // some integer k >= 0.
  bool distances_in_shifted_lattice(double step, double shift, double tol) const;

 private:
  void validate() const;

  std::vector<PlanarPoint> points_;
  std::optional<std::vector<QuadraticPoint>> exact_;
  std::vector<std::string> labels_;
};

// Residual |x - (step*k + shift)| to the nearest lattice element with k >= 0;
// exact ties go to the smaller k.
double nearest_lattice_residual(double x, double step, double shift, long* nearest_index = nullptr);

}  // namespace shiftdist
