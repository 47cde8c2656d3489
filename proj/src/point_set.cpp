#include "shiftdist/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftdist {

double distance(const PlanarPoint& a, const PlanarPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

QuadraticPoint QuadraticPoint::integer(long x, long y) {
  return QuadraticPoint{Rational(x), Rational(y) * Rational(y), y > 0 ? 1 : (y < 0 ? -1 : 0)};
}

PlanarPoint QuadraticPoint::approx() const {
  return {x.to_double(), y_sign * std::sqrt(y_squared.to_double())};
}

std::optional<Rational> exact_squared_distance(const QuadraticPoint& a, const QuadraticPoint& b) {
  Rational dx = a.x - b.x;
  // (y_a - y_b)^2 = y_a^2 + y_b^2 - 2 sgn_a sgn_b sqrt(y_a^2 y_b^2)
  Rational dy2 = a.y_squared + b.y_squared;
  if (a.y_sign != 0 && b.y_sign != 0) {
    auto cross = exact_sqrt(a.y_squared * b.y_squared);
    if (!cross) return std::nullopt;
    dy2 -= Rational(2L * a.y_sign * b.y_sign) * *cross;
  }
  return dx * dx + dy2;
}

PlanarPointSet::PlanarPointSet(std::vector<PlanarPoint> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  validate();
}

PlanarPointSet::PlanarPointSet(std::vector<QuadraticPoint> exact_points, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (const auto& p : exact_points) {
    if (p.y_squared.sign() < 0) throw std::invalid_argument("PlanarPointSet: negative y^2");
    if (p.y_squared.is_zero() != (p.y_sign == 0))
      throw std::invalid_argument("PlanarPointSet: y sign inconsistent with y^2");
    points_.push_back(p.approx());
  }
  exact_ = std::move(exact_points);
  validate();
  for (std::size_t i = 0; i < exact_->size(); ++i) {
    for (std::size_t j = i + 1; j < exact_->size(); ++j) {
      auto d2 = shiftdist::exact_squared_distance((*exact_)[i], (*exact_)[j]);
      if (d2 && d2->is_zero()) throw std::invalid_argument("PlanarPointSet: duplicate points");
    }
  }
}

void PlanarPointSet::validate() const {
  if (!labels_.empty() && labels_.size() != points_.size())
    throw std::invalid_argument("PlanarPointSet: label count does not match point count");
  if (exact_) return;  // exact duplicates are checked exactly
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j]) throw std::invalid_argument("PlanarPointSet: duplicate points");
}

std::vector<double> PlanarPointSet::distance_set() const {
  std::vector<double> out;
  out.reserve(points_.size() * (points_.size() - (points_.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j) out.push_back(distance(i, j));
  return out;
}

double PlanarPointSet::distance(std::size_t i, std::size_t j) const {
  if (exact_) {
    if (auto d2 = exact_squared_distance(i, j)) return std::sqrt(d2->to_double());
  }
  return shiftdist::distance(points_.at(i), points_.at(j));
}

std::optional<Rational> PlanarPointSet::exact_squared_distance(std::size_t i, std::size_t j) const {
  if (!exact_) return std::nullopt;
  return shiftdist::exact_squared_distance(exact_->at(i), exact_->at(j));
}

PlanarPointSet PlanarPointSet::scaled(const Rational& factor) const {
  if (factor.is_zero()) throw std::invalid_argument("PlanarPointSet::scaled: zero factor");
  if (exact_) {
    std::vector<QuadraticPoint> pts;
    pts.reserve(exact_->size());
    for (const auto& p : *exact_) {
      int sign = p.y_sign * factor.sign();
      pts.push_back({p.x * factor, p.y_squared * factor * factor, sign});
    }
    return PlanarPointSet(std::move(pts), labels_);
  }
  double f = factor.to_double();
  std::vector<PlanarPoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back({p.x * f, p.y * f});
  return PlanarPointSet(std::move(pts), labels_);
}

bool PlanarPointSet::distances_in_shifted_lattice(double step, double shift, double tol) const {
  for (double d : distance_set())
    if (nearest_lattice_residual(d, step, shift) > tol) return false;
  return true;
}

double nearest_lattice_residual(double x, double step, double shift, long* nearest_index) {
  if (!(step > 0.0)) throw std::invalid_argument("nearest_lattice_residual: step must be positive");
  double y = (x - shift) / step;
  // ceil(y - 1/2) rounds to nearest with halves going down.
  long k = static_cast<long>(std::ceil(y - 0.5));
  if (k < 0) k = 0;
  if (nearest_index) *nearest_index = k;
  return std::abs(x - (step * static_cast<double>(k) + shift));
}

}  // namespace shiftdist
