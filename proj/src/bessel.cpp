#include "shiftdist/bessel.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "shiftdist/parallel.hpp"

namespace shiftdist {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// sum_n (-1)^n (r/2)^(2n+order) / (n! (n+order)!), order 0 or 1. The terms
// peak near 1e9 at r = 25, so the sum runs in 50-digit arithmetic.
double power_series(double r, int order) {
  Wide half = Wide(r) / 2;
  Wide x2 = half * half;
  Wide term = order == 0 ? Wide(1) : half;
  Wide sum = term;
  for (int n = 1; n < 400; ++n) {
    term *= -x2 / (Wide(n) * Wide(n + order));
    sum += term;
    if (abs(term) < Wide(1e-40) * (abs(sum) + 1)) break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion J_nu(r) = sqrt(2/(pi r)) (P cos w - Q sin w),
// w = r - nu pi/2 - pi/4, truncated at its smallest term.
double hankel(double r, int order) {
  const long double mu = 4.0L * order * order;
  const long double z = r;
  long double p = 1.0L, q = 0.0L;
  long double a = 1.0L;  // a_k(nu) / z^k
  long double prev = 1.0L;
  for (int k = 1; k < 200; ++k) {
    long double odd = 2.0L * k - 1.0L;
    a *= (mu - odd * odd) / (8.0L * k * z);
    long double mag = std::fabs(a);
    if (mag > prev) break;
    prev = mag;
    // even k feed P with sign (-1)^(k/2), odd k feed Q with sign (-1)^((k-1)/2)
    long double sign = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      p += sign * a;
    } else {
      q += sign * a;
    }
    if (mag < 1e-22L) break;
  }
  long double w = z - (order * 0.5L + 0.25L) * kPiL;
  long double amp = std::sqrt(2.0L / (kPiL * z));
  return static_cast<double>(amp * (p * std::cos(w) - q * std::sin(w)));
}

double j1_derivative(double r) { return j0(r) - j1(r) / r; }

ZeroEntry refine_zero(int k, double precision) {
  const double center = (k + 0.25) * std::numbers::pi;
  double lo = center - 1.0, hi = center + 1.0;
  double flo = j1(lo), fhi = j1(hi);
  if (std::signbit(flo) == std::signbit(fhi))
    throw std::logic_error("j1_zeros: seed bracket has no sign change at k = " + std::to_string(k));

  while (hi - lo > 2.0 * precision) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at float resolution
    double fm = j1(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  double value = 0.5 * (lo + hi);
  double deriv = j1_derivative(value);
  if (deriv != 0.0) {
    double polished = value - j1(value) / deriv;
    if (polished >= lo && polished <= hi) value = polished;
  }
  return ZeroEntry{k, value, lo, hi};
}

}  // namespace

double j1_series(double r) { return power_series(r, 1); }

double j1_asymptotic(double r) { return hankel(r, 1); }

double j1(double r) {
  if (!(r >= 0.0)) throw std::domain_error("j1: negative argument");
  return r < kJ1BranchSwitch ? power_series(r, 1) : hankel(r, 1);
}

double j0(double r) {
  if (!(r >= 0.0)) throw std::domain_error("j0: negative argument");
  return r < kJ1BranchSwitch ? power_series(r, 0) : hankel(r, 0);
}

void ZeroTable::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].k != static_cast<int>(i) + 1)
      throw std::invalid_argument("ZeroTable: indices must run 1..n, found k = " + std::to_string(entries[i].k));
    if (i > 0 && !(entries[i].value > entries[i - 1].value))
      throw std::invalid_argument("ZeroTable: zeros not strictly increasing at k = " + std::to_string(entries[i].k));
  }
}

bool ZeroTable::certified() const {
  for (const auto& e : entries) {
    // a few ulps of slack: loaded brackets are value +/- precision in doubles
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(e.hi);
    if (!(e.hi - e.lo <= 2.0 * precision + slack)) return false;
    if (e.lo == e.hi) {
      if (j1(e.lo) != 0.0) return false;
      continue;
    }
    if (std::signbit(j1(e.lo)) == std::signbit(j1(e.hi))) return false;
  }
  return true;
}

ZeroTable j1_zeros(int count, double precision, unsigned workers) {
  if (count < 1) throw std::invalid_argument("j1_zeros: count must be >= 1");
  if (!(precision > 0.0)) throw std::invalid_argument("j1_zeros: precision must be positive");
  ZeroTable table;
  table.precision = precision;
  table.entries.resize(static_cast<std::size_t>(count));
  parallel_for(table.entries.size(), workers, [&](std::size_t i) {
    table.entries[i] = refine_zero(static_cast<int>(i) + 1, precision);
  });
  return table;
}

ResidualReport verify_zero_asymptotics(const ZeroTable& zeros, double correction, int fit_k_min) {
  if (zeros.size() < 10) throw std::invalid_argument("verify_zero_asymptotics: need at least 10 zeros");
  ResidualReport report;
  report.correction = correction;
  report.fit_k_min = fit_k_min;
  report.fit_k_max = zeros.entries.back().k;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& e : zeros.entries) {
    const double rho = e.value / (2.0 * std::numbers::pi);
    const double shifted = e.k + 0.25;
    const double r = 4.0 * rho * rho - shifted * shifted - correction;
    report.k.push_back(e.k);
    report.residual.push_back(r);
    report.max_scaled = std::max(report.max_scaled, std::abs(r) * e.k * e.k);
    if (e.k >= fit_k_min && r != 0.0) {
      const double x = std::log(static_cast<double>(e.k));
      const double y = std::log(std::abs(r));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
  }
  if (n < 2) throw std::invalid_argument("verify_zero_asymptotics: too few zeros above fit_k_min");
  report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return report;
}

ExpansionFit fit_expansion_coefficients(const ZeroTable& zeros, int order) {
  if (order < 1) throw std::invalid_argument("fit_expansion_coefficients: order must be >= 1");
  const std::size_t n = zeros.size();
  if (n < static_cast<std::size_t>(4 * order))
    throw std::invalid_argument("fit_expansion_coefficients: need at least 4*order zeros");

  // Columns are rescaled to unit max so the normal matrix stays well scaled.
  Eigen::MatrixXd basis(n, order);
  Eigen::VectorXd target(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = zeros.entries[i];
    const double shifted = e.k + 0.25;
    const double xi2 = (e.value / (2.0 * std::numbers::pi)) * (e.value / (2.0 * std::numbers::pi));
    target(i) = xi2 / (0.25 * shifted * shifted) - 1.0;
    const double inv = 1.0 / (std::numbers::pi * shifted * std::numbers::pi * shifted);
    double power = 1.0;
    for (int j = 0; j < order; ++j) {
      power *= inv;
      basis(i, j) = power;
    }
  }
  Eigen::VectorXd scale = basis.cwiseAbs().colwise().maxCoeff().transpose();
  for (int j = 0; j < order; ++j) basis.col(j) /= scale(j);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  qr.setThreshold(1e-13);
  if (qr.rank() < order) throw std::invalid_argument("fit_expansion_coefficients: rank-deficient fit");
  Eigen::VectorXd scaled_coef = qr.solve(target);
  Eigen::VectorXd resid = target - basis * scaled_coef;

  ExpansionFit fit;
  fit.order = order;
  fit.samples = n;
  fit.rms_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  const double dof = static_cast<double>(n) - order;
  const double sigma2 = dof > 0 ? resid.squaredNorm() / dof : 0.0;
  Eigen::MatrixXd cov = (basis.transpose() * basis).inverse() * sigma2;
  for (int j = 0; j < order; ++j) {
    fit.coefficients.push_back(scaled_coef(j) / scale(j));
    fit.std_errors.push_back(std::sqrt(std::max(0.0, cov(j, j))) / scale(j));
  }
  return fit;
}

void save_zero_table(const ZeroTable& table, const std::filesystem::path& path) {
  table.validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("save_zero_table: cannot open " + path.string());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", table.precision);
  out << "#j1-zeros precision=" << buf << "\n";
  for (const auto& e : table.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.value);
    out << e.k << " " << buf << "\n";
  }
  if (!out) throw std::runtime_error("save_zero_table: write failed for " + path.string());
}

ZeroTable load_zero_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ZeroCacheError("cannot open zero cache " + path.string(), 0);

  auto parse_double = [](std::string_view text, double& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
  };

  ZeroTable table;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ZeroCacheError("empty zero cache file", 1);
  ++line_no;
  const std::string prefix = "#j1-zeros precision=";
  if (line.rfind(prefix, 0) != 0) throw ZeroCacheError("missing '#j1-zeros precision=' header", line_no);
  if (!parse_double(std::string_view(line).substr(prefix.size()), table.precision) || !(table.precision > 0))
    throw ZeroCacheError("malformed precision in header", line_no);

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string k_text, value_text, extra;
    if (!(fields >> k_text >> value_text) || (fields >> extra))
      throw ZeroCacheError("expected '<k> <value>' at line " + std::to_string(line_no), line_no);
    ZeroEntry e;
    auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), e.k);
    if (ec != std::errc() || ptr != k_text.data() + k_text.size() || !parse_double(value_text, e.value))
      throw ZeroCacheError("malformed number at line " + std::to_string(line_no), line_no);
    e.lo = e.value - table.precision;
    e.hi = e.value + table.precision;
    if (!table.entries.empty()) {
      const auto& prev = table.entries.back();
      if (e.k != prev.k + 1 || !(e.value > prev.value))
        throw ZeroCacheError("non-monotone zero table at line " + std::to_string(line_no), line_no);
    } else if (e.k != 1) {
      throw ZeroCacheError("zero table must start at k = 1 (line " + std::to_string(line_no) + ")", line_no);
    }
    table.entries.push_back(e);
  }
  if (table.entries.empty()) throw ZeroCacheError("zero cache has no entries", line_no);
  return table;
}

}  // namespace shiftdist
