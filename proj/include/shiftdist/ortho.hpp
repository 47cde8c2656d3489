#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftdist/convex_body.hpp"
#include "shiftdist/point_set.hpp"

namespace shiftdist {

// Six distances of a four-point configuration, ordered
// (d01, d02, d03, d12, d13, d23).
using Sextuple = std::array<double, 6>;

// Cayley-Menger determinant of four points, 288 V^2, computed as 8 det(G)
// with G the Gram matrix of a1-a0, a2-a0, a3-a0.
double cayley_menger(const Sextuple& d);

struct EmbeddingVerdict {
  bool embeddable = false;
  double cayley_menger_value = 0.0;
  double normalized_value = 0.0;  // CM / d_max^4
  std::optional<std::array<PlanarPoint, 4>> witness;
  double witness_error = 0.0;  // max |d_ij(witness) - d_ij| / d_max
};

// Planar embeddability of four points with the given distances: |CM| below
// tol * d_max^4. CM itself scales like d^6, so the test tightens for large
// configurations; near-misses among Bessel-zero distances sit around
// 1e-8 d^6 and would pass a scale-free threshold. Throws std::invalid_argument for non-positive distances or
// a violated triangle inequality in any of the four triangles.
EmbeddingVerdict embeddable_quadruple(const Sextuple& d, double tol = 1e-8);

struct CliqueReport {
  std::string method;          // "cayley-menger" or "collinear-heuristic"
  bool exact_claim = true;     // false for the heuristic search
  int max_clique = 0;
  std::vector<double> distances;
  std::vector<PlanarPoint> witness;
  bool witness_orthogonal = false;  // checked through chi_hat when a body is given
  std::uint64_t quadruples_checked = 0;
  std::uint64_t quadruples_pruned = 0;
  double min_residual = 0.0;        // smallest |CM| / d_max^4 over the sweep
  Sextuple best_near_miss{};
  std::vector<std::array<int, 6>> embeddable_quadruples;  // indices into distances, capped
  double wall_time = 0.0;
};

// Sweeps every distance assignment of a four-point set (one representative
// per relabeling: d01 is the largest distance and d02 the smallest edge at
// a0 or a1) that satisfies the triangle inequalities, testing planar
// embeddability. A set of one distance still yields the equilateral
// 3-clique. Throws std::invalid_argument for an empty list.
CliqueReport model_shifted_clique_search(const std::vector<double>& distances, double tol = 1e-8,
                                         unsigned workers = 0);

// Orthogonal-exponential clique search for K. For the disk the admissible
// distances are j_{1,k} / (2 pi R) <= radius_bound and the Cayley-Menger
// sweep above is exhaustive; the equilateral 3-clique is verified with
// orthogonality_check. Other bodies get a heuristic search for points on
// a coordinate axis. Throws std::invalid_argument when no admissible
// distance lies below radius_bound.
CliqueReport max_orthogonal_clique(const ConvexBody& body, double radius_bound, double tol = 1e-8,
                                   unsigned workers = 0);

struct CountReport {
  double q = 0.0;
  double alpha = 0.0;
  std::vector<std::size_t> per_rectangle;  // strip j covers y in [-q + j alpha, -q + (j+1) alpha)
  std::size_t max_count = 0;
  std::size_t total = 0;
  std::size_t bound = 0;  // 2 * number of strips
  bool within_bound = true;
};

// Counts points of A in [-q, q]^2 per horizontal strip of width alpha
// anchored at y = -q; the last strip may be partial and includes y = q.
CountReport verify_linear_count(const PlanarPointSet& points, double q, double alpha);

struct SolymosiSet {
  long n = 0;
  long limit = 0;                // N
  std::vector<long> m_values;    // increasing
  std::vector<long> hypotenuses; // l with n^2 + m^2 = l^2
  PlanarPointSet points;         // (n, 0) then (0, m)
};

// {(n,0)} together with {(0,m) : 0 < m <= N, n^2 + m^2 a perfect square},
// enumerated from factorizations n^2 = d e with d < e of equal parity.
// Requires n >= 3.
SolymosiSet solymosi_example(long n, long limit);

// Exact check that every pairwise distance is a positive integer.
bool has_integer_distances(const PlanarPointSet& points);

// Number of divisors of n^2.
std::uint64_t divisor_count_of_square(long n);

struct GrowthRow {
  long limit = 0;
  std::size_t count = 0;       // # A_N
  double q = 0.0;              // half-width of the smallest box [-q,q]^2 holding A_N
  double normalized = 0.0;     // count * sqrt(log N) / N
  double linear_ratio = 0.0;   // count / q
};

struct GrowthTable {
  long n = 0;
  std::vector<GrowthRow> rows;
  std::uint64_t divisor_cap = 0;
  double fitted_constant = 0.0;  // max linear_ratio
  bool nondecreasing = true;
};

GrowthTable count_growth_scan(long n, const std::vector<long>& limits);

}  // namespace shiftdist
