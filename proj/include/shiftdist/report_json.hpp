#pragma once

// JSON forms of every report type. Exact quantities are written as "p/q"
// strings; non-finite doubles become null.

#include <json.hpp>

#include "shiftdist/bessel.hpp"
#include "shiftdist/convex_body.hpp"
#include "shiftdist/fourier.hpp"
#include "shiftdist/lattice.hpp"
#include "shiftdist/ortho.hpp"
#include "shiftdist/point_set.hpp"
#include "shiftdist/quadsearch.hpp"
#include "shiftdist/rational.hpp"

namespace shiftdist {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& r);
void to_json(json& j, const PlanarPoint& p);
void to_json(json& j, const Vec2& v);
void to_json(json& j, const QuadraticPoint& p);
void to_json(json& j, const PlanarPointSet& set);
void to_json(json& j, const DistanceTuple& t);
void to_json(json& j, const CertificateReport& r);
void to_json(json& j, const OddSearchResult& r);
void to_json(json& j, const ModelSquaredDistance& d);
void to_json(json& j, const ZeroTable& t);
void to_json(json& j, const ResidualReport& r);
void to_json(json& j, const ExpansionFit& f);
void to_json(json& j, const FourierSample& s);
void to_json(json& j, const DecayReport& r);
void to_json(json& j, const EmbeddingVerdict& v);
void to_json(json& j, const CliqueReport& r);
void to_json(json& j, const CountReport& r);
void to_json(json& j, const SolymosiSet& s);
void to_json(json& j, const GrowthTable& t);

// A double that serializes NaN and infinities as null.
json number(double x);

// {"kind": "disk", "radius": R}, {"kind": "ellipse", "a": a, "b": b} or
// {"kind": "samples", "points": [[x, y], ...]}. Throws std::invalid_argument.
ConvexBody body_from_json(const json& j);
json body_to_json(const ConvexBody& body);

}  // namespace shiftdist
