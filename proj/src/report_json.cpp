#include "shiftdist/report_json.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftdist {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

namespace {

json numbers(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void to_json(json& j, const PlanarPoint& p) { j = json::array({number(p.x), number(p.y)}); }

void to_json(json& j, const Vec2& v) { j = json::array({number(v.x), number(v.y)}); }

void to_json(json& j, const QuadraticPoint& p) {
  j = json{{"x", p.x}, {"y_squared", p.y_squared}, {"y_sign", p.y_sign}};
}

void to_json(json& j, const PlanarPointSet& set) {
  j = json::object();
  j["points"] = set.points();
  if (!set.labels().empty()) j["labels"] = set.labels();
  if (set.has_exact()) j["exact"] = set.exact_points();
}

void to_json(json& j, const DistanceTuple& t) { j = t.as_array(); }

void to_json(json& j, const CertificateReport& r) {
  j = json{{"shift", r.shift},
           {"bound", r.bound},
           {"tuples_checked", r.tuples_checked},
           {"tuples_pruned", r.tuples_pruned},
           {"violations", r.violations},
           {"wall_time", number(r.wall_time)},
           {"workers", r.workers}};
}

void to_json(json& j, const OddSearchResult& r) {
  j = json{{"found", r.found},
           {"residual", number(r.residual)},
           {"points", r.points},
           {"distances", r.distances},
           {"measured_d23", number(r.measured_d23)},
           {"configurations", r.configurations}};
}

void to_json(json& j, const ModelSquaredDistance& d) {
  j = json{{"k", d.k},
           {"constant", d.constant},
           {"inv_pi2", d.inv_pi2},
           {"inv_pi4", d.inv_pi4},
           {"value", number(d.value())},
           {"distance", number(d.distance())}};
}

void to_json(json& j, const ZeroTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back(json{{"k", e.k}, {"value", number(e.value)}, {"lo", number(e.lo)}, {"hi", number(e.hi)}});
  j = json{{"precision", t.precision}, {"certified", t.certified()}, {"zeros", std::move(entries)}};
}

void to_json(json& j, const ResidualReport& r) {
  j = json{{"correction", number(r.correction)},
           {"k", r.k},
           {"residual", numbers(r.residual)},
           {"fit_k_min", r.fit_k_min},
           {"fit_k_max", r.fit_k_max},
           {"slope", number(r.slope)},
           {"max_scaled", number(r.max_scaled)}};
}

void to_json(json& j, const ExpansionFit& f) {
  j = json{{"order", f.order},
           {"coefficients", numbers(f.coefficients)},
           {"std_errors", numbers(f.std_errors)},
           {"rms_residual", number(f.rms_residual)},
           {"samples", f.samples}};
}

void to_json(json& j, const FourierSample& s) {
  j = json{{"xi", s.xi},
           {"value", number(s.value)},
           {"error_estimate", number(s.error_estimate)},
           {"evaluations", s.evaluations}};
}

void to_json(json& j, const DecayReport& r) {
  j = json{{"direction", r.direction},
           {"support", number(r.support)},
           {"c1", number(r.c1)},
           {"c1_predicted", number(r.c1_predicted)},
           {"next_order", number(r.next_order)},
           {"decay_exponent", number(r.decay_exponent)},
           {"envelope_bins", r.envelope_bins},
           {"max_phase_deviation", number(r.max_phase_deviation)},
           {"reliable", r.reliable},
           {"note", r.note},
           {"radii", numbers(r.radii)},
           {"values", numbers(r.values)},
           {"errors", numbers(r.errors)},
           {"sign_change_radii", numbers(r.sign_change_radii)},
           {"phase_deviation", numbers(r.phase_deviation)}};
}

void to_json(json& j, const EmbeddingVerdict& v) {
  j = json{{"embeddable", v.embeddable},
           {"cayley_menger", number(v.cayley_menger_value)},
           {"normalized", number(v.normalized_value)}};
  if (v.witness) {
    j["witness"] = *v.witness;
    j["witness_error"] = number(v.witness_error);
  }
}

void to_json(json& j, const CliqueReport& r) {
  j = json{{"method", r.method},
           {"exact_claim", r.exact_claim},
           {"max_clique", r.max_clique},
           {"witness", r.witness},
           {"witness_orthogonal", r.witness_orthogonal},
           {"quadruples_checked", r.quadruples_checked},
           {"quadruples_pruned", r.quadruples_pruned},
           {"min_residual", number(r.min_residual)},
           {"best_near_miss", r.best_near_miss},
           {"embeddable_quadruples", r.embeddable_quadruples},
           {"distances", numbers(r.distances)},
           {"wall_time", number(r.wall_time)}};
}

void to_json(json& j, const CountReport& r) {
  j = json{{"q", number(r.q)},
           {"alpha", number(r.alpha)},
           {"per_rectangle", r.per_rectangle},
           {"max_count", r.max_count},
           {"total", r.total},
           {"bound", r.bound},
           {"within_bound", r.within_bound}};
}

void to_json(json& j, const SolymosiSet& s) {
  j = json{{"n", s.n},
           {"N", s.limit},
           {"m", s.m_values},
           {"hypotenuse", s.hypotenuses},
           {"count", s.points.size()},
           {"integer_distances", has_integer_distances(s.points)},
           {"points", s.points.points()}};
}

void to_json(json& j, const GrowthTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back(json{{"N", r.limit},
                        {"count", r.count},
                        {"q", number(r.q)},
                        {"normalized", number(r.normalized)},
                        {"linear_ratio", number(r.linear_ratio)}});
  j = json{{"n", t.n},
           {"divisor_cap", t.divisor_cap},
           {"fitted_constant", number(t.fitted_constant)},
           {"nondecreasing", t.nondecreasing},
           {"rows", std::move(rows)}};
}

ConvexBody body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("body: expected an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "disk") return ConvexBody::disk(j.value("radius", 1.0));
    if (kind == "ellipse") return ConvexBody::ellipse(j.at("a").get<double>(), j.at("b").get<double>());
    if (kind == "samples") {
      std::vector<Vec2> pts;
      for (const auto& p : j.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      return ConvexBody::from_boundary_samples(pts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("body: ") + e.what());
  }
  throw std::invalid_argument("body: unknown kind \"" + kind + "\"");
}

json body_to_json(const ConvexBody& body) {
  switch (body.kind()) {
    case ConvexBody::Kind::disk: return json{{"kind", "disk"}, {"radius", body.semi_a()}};
    case ConvexBody::Kind::ellipse: return json{{"kind", "ellipse"}, {"a", body.semi_a()}, {"b", body.semi_b()}};
    default: return json{{"kind", body.name()}};
  }
}

}  // namespace shiftdist
