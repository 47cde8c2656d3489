#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftdist/convex_body.hpp"

namespace shiftdist {

// rho*_K(xi) = sup_{x in K} <x, xi>. Closed form for disks and ellipses;
// Newton on <gamma'(t), xi> = 0 for generic bodies. rho*(0) = 0.
double support_function(const ConvexBody& body, Vec2 xi);

// Gauge of K: rho_K(x) <= 1 iff x in K.
double minkowski_functional(const ConvexBody& body, Vec2 x);

// Length of K intersected with the line {<x, u> = offset}; u a unit vector.
double chord_length(const ConvexBody& body, Vec2 unit_direction, double offset);

// Curvature of the boundary at the point whose outward normal is `direction`.
double contact_curvature(const ConvexBody& body, Vec2 direction);

struct FourierSample {
  Vec2 xi;
  double value = 0.0;  // real for centrally symmetric bodies
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

inline constexpr double kDefaultFourierTol = 1e-8;
inline constexpr std::size_t kDefaultPanelBudget = 1'000'000;

// Fourier transform of the indicator of K at xi, computed as the 1-D
// oscillatory integral of the chord-length function along xi/|xi|. The
// substitution t = h sin(phi) (h the support value) removes the square-root
// endpoint, and Gauss-Legendre panels no wider than a quarter period are
// refined until the estimated error is below tol. Throws QuadratureError
// (carrying the best estimate) when the evaluation budget runs out.
FourierSample chi_hat(const ConvexBody& body, Vec2 xi, double tol = kDefaultFourierTol,
                      std::size_t max_evaluations = kDefaultPanelBudget);

struct DecayReport {
  Vec2 direction;
  double support = 0.0;  // rho*(direction)
  std::vector<double> radii;
  std::vector<double> values;  // chi_hat along the ray
  std::vector<double> errors;  // E = chi_hat - C1 |xi|^{-3/2} sin(2 pi (rho* - 1/8))

  double c1 = 0.0;             // fitted amplitude for this direction
  double c1_predicted = 0.0;   // 1 / (pi sqrt(curvature at the contact point))
  double next_order = 0.0;     // fitted coefficient of |xi|^{-5/2} cos(...)
  double decay_exponent = 0.0; // log-log slope of the |E| envelope
  std::size_t envelope_bins = 0;

  std::vector<double> sign_change_radii;  // refined zeros of chi_hat with |xi| >= phase_min_radius
  std::vector<double> phase_deviation;    // distance of rho* - 1/8 to the nearest half-integer
  double max_phase_deviation = 0.0;

  bool reliable = true;
  std::string note;
};

// Fits the stationary-phase template along one ray. Radii must be positive
// and strictly increasing; radii below 2 (or too short a window) mark the
// report unreliable instead of failing.
DecayReport stationary_phase_check(const ConvexBody& body, Vec2 direction, const std::vector<double>& radii,
                                   double phase_min_radius = 10.0, double quadrature_tol = 1e-13);

// |chi_hat(a - a')| < tol. Throws std::invalid_argument when a == a'.
bool orthogonality_check(const ConvexBody& body, Vec2 a, Vec2 a_prime, double tol = kDefaultFourierTol);

// Radii r in (0, radius_bound] where chi_hat(r u) changes sign, refined by
// bisection; for the disk these are j_{1,k} / (2 pi R).
std::vector<double> sign_change_radii(const ConvexBody& body, Vec2 unit_direction, double radius_bound,
                                      double tol = 1e-12);

}  // namespace shiftdist
