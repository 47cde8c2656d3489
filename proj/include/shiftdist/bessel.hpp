#pragma once

#include <filesystem>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftdist {

// J1 switches from the power series to the large-argument expansion here.
inline constexpr double kJ1BranchSwitch = 18.0;

// Bessel function of the first kind, order 1, for r >= 0. Absolute error
// <= 1e-12 for r <= 1e4. Throws std::domain_error for negative r.
double j1(double r);
// Order 0, same branches; used for J1' = J0 - J1/r.
double j0(double r);

// The two branches, exposed for the overlap self-test.
double j1_series(double r);
double j1_asymptotic(double r);

struct ZeroEntry {
  int k = 0;         // 1-based index
  double value = 0;  // k-th positive zero of J1
  double lo = 0;     // J1(lo) and J1(hi) have opposite signs
  double hi = 0;
};

// First positive zeros of J1, strictly increasing in k.
struct ZeroTable {
  std::vector<ZeroEntry> entries;
  double precision = 1e-12;

  std::size_t size() const { return entries.size(); }
  // Throws std::invalid_argument if indices are not 1..n or values not
  // strictly increasing.
  void validate() const;
  // True iff J1 changes sign across every bracket and every bracket has
  // width <= 2 * precision.
  bool certified() const;
};

// Brackets each zero on ((k+1/4)pi - 1, (k+1/4)pi + 1), bisects until the
// sign-change interval is no wider than 2*precision, then takes one Newton
// step from the midpoint, kept only if it stays inside the bracket.
ZeroTable j1_zeros(int count, double precision = 1e-12, unsigned workers = 0);

// Constant term of 4|xi|^2 - (k+1/4)^2 at the zeros |xi| = j_{1,k}/(2 pi) of
// the disk transform, as the asymptotic model is usually written.
inline constexpr double kStatedZeroCorrection = 3.0 / (4.0 * std::numbers::pi * std::numbers::pi);
// The value McMahon's expansion j = b - 3/(8b) + ... (b = (k+1/4)pi) gives.
inline constexpr double kMcMahonZeroCorrection = -kStatedZeroCorrection;

struct ResidualReport {
  double correction = 0.0;
  std::vector<int> k;
  std::vector<double> residual;  // 4 rho_k^2 - (k+1/4)^2 - correction
  int fit_k_min = 0;
  int fit_k_max = 0;
  double slope = 0.0;       // least-squares slope of log|r_k| against log k
  double max_scaled = 0.0;  // max |r_k| k^2 over the table
};

// Throws std::invalid_argument for tables with fewer than 10 zeros.
ResidualReport verify_zero_asymptotics(const ZeroTable& zeros, double correction = kStatedZeroCorrection,
                                       int fit_k_min = 5);

struct ExpansionFit {
  int order = 0;
  std::vector<double> coefficients;  // c_1..c_N
  std::vector<double> std_errors;
  double rms_residual = 0.0;
  std::size_t samples = 0;
};

// Least-squares fit of |xi_k|^2 / ((1/4)(k+1/4)^2) - 1 against
// (pi (k+1/4))^{-2j}, j = 1..order. Needs at least 4*order zeros.
ExpansionFit fit_expansion_coefficients(const ZeroTable& zeros, int order);

class ZeroCacheError : public std::runtime_error {
 public:
  ZeroCacheError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: a header "#j1-zeros precision=<eps>" followed by one
// "<k> <value>" line per zero, values printed with 17 significant digits.
void save_zero_table(const ZeroTable& table, const std::filesystem::path& path);
ZeroTable load_zero_table(const std::filesystem::path& path);

}  // namespace shiftdist
