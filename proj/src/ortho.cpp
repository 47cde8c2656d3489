#include "shiftdist/ortho.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "shiftdist/bessel.hpp"
#include "shiftdist/fourier.hpp"
#include "shiftdist/parallel.hpp"

namespace shiftdist {

namespace {

constexpr double kTriangleSlack = 1e-12;
constexpr std::size_t kEmbeddableCap = 100;

bool triangle_ok(double a, double b, double c) {
  const double m = std::max({a, b, c});
  const double slack = kTriangleSlack * m;
  return a <= b + c + slack && b <= a + c + slack && c <= a + b + slack;
}

// 8 det(G) where G is the Gram matrix written in squared distances.
double cm_from_squares(double s01, double s02, double s03, double s12, double s13, double s23) {
  const long double g11 = s01, g22 = s02, g33 = s03;
  const long double g12 = (s01 + s02 - s12) / 2.0L;
  const long double g13 = (s01 + s03 - s13) / 2.0L;
  const long double g23 = (s02 + s03 - s23) / 2.0L;
  const long double det = g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13) +
                          g13 * (g12 * g23 - g22 * g13);
  return static_cast<double>(8.0L * det);
}

std::array<PlanarPoint, 4> trilaterate(const Sextuple& d) {
  const auto [d01, d02, d03, d12, d13, d23] = d;
  const double x2 = (d01 * d01 + d02 * d02 - d12 * d12) / (2.0 * d01);
  const double y2 = std::sqrt(std::max(0.0, d02 * d02 - x2 * x2));
  const double x3 = (d01 * d01 + d03 * d03 - d13 * d13) / (2.0 * d01);
  const double y3 = std::sqrt(std::max(0.0, d03 * d03 - x3 * x3));
  PlanarPoint a2{x2, y2};
  PlanarPoint up{x3, y3}, down{x3, -y3};
  PlanarPoint a3 = std::abs(distance(a2, up) - d23) <= std::abs(distance(a2, down) - d23) ? up : down;
  return {PlanarPoint{0.0, 0.0}, PlanarPoint{d01, 0.0}, a2, a3};
}

double witness_error(const std::array<PlanarPoint, 4>& w, const Sextuple& d) {
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const double dmax = *std::max_element(d.begin(), d.end());
  double err = 0.0;
  for (int i = 0; i < 6; ++i)
    err = std::max(err, std::abs(distance(w[pairs[i][0]], w[pairs[i][1]]) - d[i]) / dmax);
  return err;
}

struct SweepSlot {
  std::uint64_t checked = 0;
  std::uint64_t pruned = 0;
  double min_residual = std::numeric_limits<double>::infinity();
  std::array<int, 6> best{};
  std::vector<std::array<int, 6>> hits;
};

// Representatives: i01 >= every other index, i02 <= i03, i12, i13.
SweepSlot sweep_outer(const std::vector<double>& D, const std::vector<double>& S, int i01, double tol) {
  SweepSlot slot;
  const double dmax = D[i01];
  const double scale = std::pow(dmax, 4);
  const std::uint64_t inner = static_cast<std::uint64_t>(i01) + 1;  // choices of i23
  for (int i02 = 0; i02 <= i01; ++i02) {
    const std::uint64_t span = static_cast<std::uint64_t>(i01 - i02) + 1;
    for (int i12 = i02; i12 <= i01; ++i12) {
      if (!triangle_ok(D[i01], D[i02], D[i12])) {
        slot.pruned += span * span * inner;
        continue;
      }
      for (int i03 = i02; i03 <= i01; ++i03) {
        for (int i13 = i02; i13 <= i01; ++i13) {
          if (!triangle_ok(D[i01], D[i03], D[i13])) {
            slot.pruned += inner;
            continue;
          }
          for (int i23 = 0; i23 <= i01; ++i23) {
            if (!triangle_ok(D[i02], D[i03], D[i23]) || !triangle_ok(D[i12], D[i13], D[i23])) {
              ++slot.pruned;
              continue;
            }
            ++slot.checked;
            const double cm = cm_from_squares(S[i01], S[i02], S[i03], S[i12], S[i13], S[i23]);
            const double r = std::abs(cm) / scale;
            std::array<int, 6> idx{i01, i02, i03, i12, i13, i23};
            if (r < slot.min_residual) {
              slot.min_residual = r;
              slot.best = idx;
            }
            if (r <= tol && slot.hits.size() < kEmbeddableCap) slot.hits.push_back(idx);
          }
        }
      }
    }
  }
  return slot;
}

std::vector<PlanarPoint> equilateral(double side) {
  return {{0.0, 0.0}, {side, 0.0}, {side / 2.0, side * std::numbers::sqrt3 / 2.0}};
}

bool pairwise_orthogonal(const ConvexBody& body, const std::vector<PlanarPoint>& pts, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!orthogonality_check(body, {pts[i].x, pts[i].y}, {pts[j].x, pts[j].y}, tol)) return false;
  return true;
}

// Maximum clique by plain Bron-Kerbosch with pivoting; graphs here are small.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<int>& best) {
  if (p.empty() && x.empty()) {
    if (r.size() > best.size()) best = r;
    return;
  }
  if (r.size() + p.size() <= best.size()) return;
  int pivot = !p.empty() ? p.front() : x.front();
  std::vector<int> candidates;
  for (int v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[v][w]) np.push_back(w);
    for (int w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, best);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

bool near_member(double x, const std::vector<double>& sorted, double tol) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x - tol);
  return it != sorted.end() && *it <= x + tol;
}

CliqueReport collinear_heuristic(const ConvexBody& body, double radius_bound, double tol) {
  CliqueReport report;
  report.method = "collinear-heuristic";
  report.exact_claim = false;
  report.min_residual = std::numeric_limits<double>::quiet_NaN();

  std::vector<int> best_clique;
  std::vector<double> best_positions;
  Vec2 best_dir{1.0, 0.0};
  bool any = false;
  for (Vec2 u : {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
    std::vector<double> du = sign_change_radii(body, u, radius_bound);
    if (du.empty()) continue;
    any = true;
    if (report.distances.empty()) report.distances = du;
    // candidate offsets along u: 0, every distance and every pairwise sum
    std::vector<double> pos{0.0};
    for (double a : du) pos.push_back(a);
    for (std::size_t i = 0; i < du.size(); ++i)
      for (std::size_t j = i; j < du.size(); ++j) pos.push_back(du[i] + du[j]);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              pos.end());
    const double match = std::max(1e-9, tol) * std::max(1.0, radius_bound);
    const int n = static_cast<int>(pos.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = near_member(pos[j] - pos[i], du, match);
    std::vector<int> r, clique, p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    bron_kerbosch(adj, r, p, {}, clique);
    if (clique.size() > best_clique.size()) {
      best_clique = clique;
      best_positions = pos;
      best_dir = u;
    }
  }
  if (!any) throw std::invalid_argument("max_orthogonal_clique: no sign change of the transform below the radius bound");

  std::sort(best_clique.begin(), best_clique.end());
  for (int i : best_clique)
    report.witness.push_back({best_positions[i] * best_dir.x, best_positions[i] * best_dir.y});
  report.max_clique = static_cast<int>(best_clique.size());
  report.witness_orthogonal = pairwise_orthogonal(body, report.witness, std::max(tol, 1e-10));
  return report;
}

}  // namespace

double cayley_menger(const Sextuple& d) {
  return cm_from_squares(d[0] * d[0], d[1] * d[1], d[2] * d[2], d[3] * d[3], d[4] * d[4], d[5] * d[5]);
}

EmbeddingVerdict embeddable_quadruple(const Sextuple& d, double tol) {
  for (double x : d)
    if (!(x > 0.0)) throw std::invalid_argument("embeddable_quadruple: distances must be positive");
  if (!triangle_ok(d[0], d[1], d[3]) || !triangle_ok(d[0], d[2], d[4]) || !triangle_ok(d[1], d[2], d[5]) ||
      !triangle_ok(d[3], d[4], d[5]))
    throw std::invalid_argument("embeddable_quadruple: triangle inequality violated");

  EmbeddingVerdict v;
  const double dmax = *std::max_element(d.begin(), d.end());
  v.cayley_menger_value = cayley_menger(d);
  v.normalized_value = v.cayley_menger_value / std::pow(dmax, 4);
  v.embeddable = std::abs(v.normalized_value) <= tol;
  if (v.embeddable) {
    v.witness = trilaterate(d);
    v.witness_error = witness_error(*v.witness, d);
  }
  return v;
}

CliqueReport model_shifted_clique_search(const std::vector<double>& distances, double tol, unsigned workers) {
  if (distances.empty()) throw std::invalid_argument("clique search: empty distance set");
  for (double x : distances)
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("clique search: distances must be positive");
  const auto start = std::chrono::steady_clock::now();

  CliqueReport report;
  report.method = "cayley-menger";
  report.distances = distances;
  std::sort(report.distances.begin(), report.distances.end());
  const auto& D = report.distances;
  std::vector<double> S(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) S[i] = D[i] * D[i];

  std::vector<SweepSlot> slots(D.size());
  parallel_for(D.size(), workers, [&](std::size_t i) { slots[i] = sweep_outer(D, S, static_cast<int>(i), tol); });

  report.min_residual = std::numeric_limits<double>::infinity();
  for (const auto& s : slots) {
    report.quadruples_checked += s.checked;
    report.quadruples_pruned += s.pruned;
    if (s.checked > 0 && s.min_residual < report.min_residual) {
      report.min_residual = s.min_residual;
      for (int k = 0; k < 6; ++k) report.best_near_miss[k] = D[s.best[k]];
    }
    for (const auto& h : s.hits)
      if (report.embeddable_quadruples.size() < kEmbeddableCap) report.embeddable_quadruples.push_back(h);
  }
  if (report.quadruples_checked == 0) report.min_residual = std::numeric_limits<double>::quiet_NaN();

  if (report.embeddable_quadruples.empty()) {
    report.max_clique = 3;
    report.witness = equilateral(D.front());
  } else {
    report.max_clique = 4;
    Sextuple d;
    for (int k = 0; k < 6; ++k) d[k] = D[report.embeddable_quadruples.front()[k]];
    auto w = trilaterate(d);
    report.witness.assign(w.begin(), w.end());
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CliqueReport max_orthogonal_clique(const ConvexBody& body, double radius_bound, double tol, unsigned workers) {
  if (!(radius_bound > 0.0)) throw std::invalid_argument("max_orthogonal_clique: radius bound must be positive");
  const auto start = std::chrono::steady_clock::now();
  if (body.kind() != ConvexBody::Kind::disk) {
    CliqueReport report = collinear_heuristic(body, radius_bound, tol);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  // j_{1,k} < (k + 1/4) pi + 1, so 2 R bound + 2 zeros cover the range.
  const double R = body.semi_a();
  const int count = static_cast<int>(std::floor(2.0 * R * radius_bound)) + 2;
  ZeroTable zeros = j1_zeros(count, 1e-12, workers);
  std::vector<double> D;
  for (const auto& z : zeros.entries) {
    const double r = z.value / (2.0 * std::numbers::pi * R);
    if (r <= radius_bound * (1.0 + 1e-12)) D.push_back(r);
  }
  if (D.empty()) throw std::invalid_argument("max_orthogonal_clique: no admissible distance below the radius bound");

  CliqueReport report = model_shifted_clique_search(D, tol, workers);
  report.witness_orthogonal = pairwise_orthogonal(body, report.witness, std::max(tol, 1e-10));
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CountReport verify_linear_count(const PlanarPointSet& points, double q, double alpha) {
  if (!(q > 0.0) || !(alpha > 0.0)) throw std::invalid_argument("verify_linear_count: q and alpha must be positive");
  CountReport report;
  report.q = q;
  report.alpha = alpha;
  const auto strips = static_cast<std::size_t>(std::ceil(2.0 * q / alpha - 1e-12));
  report.per_rectangle.assign(std::max<std::size_t>(strips, 1), 0);
  for (const auto& p : points.points()) {
    if (std::abs(p.x) > q || std::abs(p.y) > q) continue;
    auto j = static_cast<std::size_t>(std::floor((p.y + q) / alpha));
    j = std::min(j, report.per_rectangle.size() - 1);
    ++report.per_rectangle[j];
    ++report.total;
  }
  report.max_count = *std::max_element(report.per_rectangle.begin(), report.per_rectangle.end());
  report.bound = 2 * report.per_rectangle.size();
  report.within_bound = report.total <= report.bound;
  return report;
}

namespace {

std::map<long, int> factorize(long n) {
  std::map<long, int> f;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

std::vector<__int128> divisors_of_square(long n) {
  std::vector<__int128> divs{1};
  for (auto [p, e] : factorize(n)) {
    std::vector<__int128> next;
    for (__int128 d : divs) {
      __int128 pk = 1;
      for (int k = 0; k <= 2 * e; ++k) {
        next.push_back(d * pk);
        pk *= p;
      }
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::uint64_t divisor_count_of_square(long n) {
  if (n <= 0) throw std::invalid_argument("divisor_count_of_square: n must be positive");
  std::uint64_t c = 1;
  for (auto [p, e] : factorize(n)) c *= static_cast<std::uint64_t>(2 * e + 1);
  return c;
}

SolymosiSet solymosi_example(long n, long limit) {
  if (n < 3) throw std::invalid_argument("solymosi_example: n must be at least 3");
  if (limit < 1) throw std::invalid_argument("solymosi_example: N must be positive");
  SolymosiSet set;
  set.n = n;
  set.limit = limit;
  const __int128 n2 = static_cast<__int128>(n) * n;
  std::vector<std::pair<long, long>> found;
  for (__int128 d : divisors_of_square(n)) {
    const __int128 e = n2 / d;
    if (d >= e || (e - d) % 2 != 0) continue;
    const __int128 m = (e - d) / 2;
    if (m <= limit) found.emplace_back(static_cast<long>(m), static_cast<long>((e + d) / 2));
  }
  std::sort(found.begin(), found.end());
  std::vector<QuadraticPoint> pts{QuadraticPoint::integer(n, 0)};
  std::vector<std::string> labels{"(" + std::to_string(n) + ",0)"};
  for (auto [m, l] : found) {
    set.m_values.push_back(m);
    set.hypotenuses.push_back(l);
    pts.push_back(QuadraticPoint::integer(0, m));
    labels.push_back("(0," + std::to_string(m) + ")");
  }
  set.points = PlanarPointSet(std::move(pts), std::move(labels));
  return set;
}

bool has_integer_distances(const PlanarPointSet& points) {
  if (!points.has_exact()) return false;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto sq = points.exact_squared_distance(i, j);
      if (!sq || !sq->is_integer() || sq->is_zero()) return false;
      BigInt r = sqrt(sq->num());
      if (r * r != sq->num()) return false;
    }
  return true;
}

GrowthTable count_growth_scan(long n, const std::vector<long>& limits) {
  if (limits.empty()) throw std::invalid_argument("count_growth_scan: empty N list");
  for (std::size_t i = 0; i < limits.size(); ++i) {
    if (limits[i] < 2) throw std::invalid_argument("count_growth_scan: N must be at least 2");
    if (i > 0 && limits[i] <= limits[i - 1]) throw std::invalid_argument("count_growth_scan: N list must increase");
  }
  GrowthTable table;
  table.n = n;
  table.divisor_cap = divisor_count_of_square(n);
  const SolymosiSet full = solymosi_example(n, limits.back());
  std::size_t previous = 0;
  for (long N : limits) {
    GrowthRow row;
    row.limit = N;
    row.count = 1 + static_cast<std::size_t>(std::upper_bound(full.m_values.begin(), full.m_values.end(), N) -
                                             full.m_values.begin());
    row.q = static_cast<double>(std::max(n, N));
    row.normalized = row.count * std::sqrt(std::log(static_cast<double>(N))) / N;
    row.linear_ratio = row.count / row.q;
    table.fitted_constant = std::max(table.fitted_constant, row.linear_ratio);
    if (row.count < previous) table.nondecreasing = false;
    previous = row.count;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace shiftdist
