#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "shiftdist/bessel.hpp"
#include "shiftdist/convex_body.hpp"
#include "shiftdist/fourier.hpp"
#include "shiftdist/lattice.hpp"
#include "shiftdist/ortho.hpp"
#include "shiftdist/parallel.hpp"
#include "shiftdist/quadsearch.hpp"
#include "shiftdist/report_json.hpp"

namespace shiftdist::cli {

namespace {

namespace fs = std::filesystem;

// Thrown for bad flag values that CLI11 cannot catch itself.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Report that is still printed but makes the run exit with kDomainError.
struct Outcome {
  json result;
  int code = kOk;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  unsigned workers = 0;
  bool no_timing = false;
};

Vec2 parse_vec2(const std::string& text, const char* what) {
  std::istringstream in(text);
  double x, y;
  char comma;
  if (!(in >> x >> comma >> y) || comma != ',' || !in.eof() && (in >> std::ws, !in.eof()))
    throw UsageError(std::string(what) + ": expected \"x,y\", got \"" + text + "\"");
  return {x, y};
}

ConvexBody parse_body(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "disk") return ConvexBody::disk(arg.empty() ? 1.0 : std::stod(arg));
    if (kind == "ellipse") {
      Vec2 ab = parse_vec2(arg, "--body ellipse");
      return ConvexBody::ellipse(ab.x, ab.y);
    }
    if (kind == "file") {
      std::ifstream in(arg);
      if (!in) throw UsageError("--body: cannot open " + arg);
      return body_from_json(json::parse(in));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("--body: ") + e.what());
  }
  throw UsageError("--body: expected disk[:R], ellipse:a,b or file:<path.json>, got \"" + text + "\"");
}

Rational parse_shift(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--shift: " + std::string(e.what()));
  }
}

std::optional<fs::path> cache_path(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* dir = std::getenv("SHIFTDIST_CACHE_DIR"); dir && *dir) return fs::path(dir) / "j1-zeros.txt";
  return std::nullopt;
}

// Zeros from the cache when it holds enough of them at the requested
// precision; otherwise computed and written back. With a cache in use the
// table returned is always the reloaded one, so reruns print the same bytes.
ZeroTable obtain_zeros(int count, double precision, const std::string& cache_flag, const Context& ctx) {
  if (count < 1) throw UsageError("--count must be positive");
  if (!(precision > 0.0)) throw UsageError("--precision must be positive");
  auto path = cache_path(cache_flag);
  if (path && fs::exists(*path)) {
    ZeroTable cached = load_zero_table(*path);
    if (static_cast<int>(cached.size()) >= count && cached.precision <= precision) {
      cached.entries.resize(count);
      ctx.err << "cache: read " << count << " zeros from " << path->string() << "\n";
      return cached;
    }
    ctx.err << "cache: " << path->string() << " holds " << cached.size() << " zeros at precision "
            << cached.precision << "; recomputing\n";
  }
  ZeroTable table = j1_zeros(count, precision, ctx.workers);
  if (!path) return table;
  if (path->has_parent_path()) fs::create_directories(path->parent_path());
  save_zero_table(table, *path);
  ctx.err << "cache: wrote " << count << " zeros to " << path->string() << "\n";
  return load_zero_table(*path);
}

// ---- output ----------------------------------------------------------------

void null_wall_times(json& j) {
  if (j.is_object()) {
    for (auto& [key, value] : j.items()) {
      if (key == "wall_time") value = nullptr;
      else null_wall_times(value);
    }
  } else if (j.is_array()) {
    for (auto& v : j) null_wall_times(v);
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Tabular CSV for reports that carry one; key,value pairs otherwise.
void write_csv(std::ostream& out, const std::string& command, const json& result) {
  auto table = [&](const json& rows, std::vector<std::string> columns) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_field(scalar_text(row[columns[c]]));
      out << "\n";
    }
  };
  if (command == "bessel-zeros" && result.contains("zeros")) return table(result["zeros"], {"k", "value", "lo", "hi"});
  if (command == "count" && result.contains("rows"))
    return table(result["rows"], {"N", "count", "q", "normalized", "linear_ratio"});
  if (command == "asymptotics" && result.contains("residuals")) {
    const auto& r = result["residuals"];
    out << "k,residual\n";
    for (std::size_t i = 0; i < r["k"].size(); ++i) out << r["k"][i].dump() << "," << r["residual"][i].dump() << "\n";
    return;
  }
  if (command == "stationary" && result.contains("radii")) {
    out << "radius,value,error\n";
    for (std::size_t i = 0; i < result["radii"].size(); ++i)
      out << result["radii"][i].dump() << "," << result["values"][i].dump() << "," << result["errors"][i].dump() << "\n";
    return;
  }
  if (command == "solymosi" && result.contains("m")) {
    out << "m,hypotenuse\n";
    for (std::size_t i = 0; i < result["m"].size(); ++i)
      out << result["m"][i].dump() << "," << result["hypotenuse"][i].dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(result, "", rows);
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
}

void emit(const Context& ctx, const std::string& command, const json& parameters, double wall_time, json result) {
  if (ctx.no_timing) null_wall_times(result);
  json doc{{"command", command},
           {"parameters", parameters},
           {"wall_time", ctx.no_timing ? json(nullptr) : number(wall_time)},
           {"result", std::move(result)}};
  if (ctx.format == "json") {
    ctx.out << doc.dump() << "\n";
  } else if (ctx.format == "csv") {
    write_csv(ctx.out, command, doc["result"]);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    for (const auto& [k, v] : rows) ctx.out << k << ": " << v << "\n";
  }
}

json collect_parameters(const CLI::App& sub, const Context& ctx) {
  json params = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == sub.get_help_ptr()) continue;
    const std::string name = opt->get_single_name();
    if (opt->get_expected_min() == 0) {
      params[name] = opt->count() > 0;
      continue;
    }
    if (opt->count() > 0) {
      std::string joined;
      for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
      params[name] = joined;
    } else {
      params[name] = opt->get_default_str();
    }
  }
  params["workers"] = ctx.workers;
  return params;
}

// ---- subcommands -------------------------------------------------------------

struct Options {
  std::string shift;
  long algebraic_degree = 0;
  bool transcendental = false;
  long bound = 25;
  bool progress = false;
  long k = 1, l = 0;
  double tol = 1e-8;
  double odd_tol = 1e-9;
  int count = 50;
  double precision = 1e-12;
  std::string cache;
  std::string correction = "stated";
  int fit_k_min = 5;
  int order = 2;
  std::string body = "disk";
  std::string xi;
  std::string direction = "1,0";
  double radius = 0.0;
  double r_min = 5.0, r_max = 50.0;
  int samples = 400;
  double phase_min = 10.0;
  double quad_tol = 1e-13;
  double radius_bound = 0.0;
  int zeros = 0;
  long model = 0;
  int terms = 1;
  long n = 12, limit = 40;
  double q = 0.0, alpha = 1.0;
  std::vector<long> limits{1000, 10000, 100000};
};

Outcome cmd_admissible(const Options& o) {
  const int given = !o.shift.empty() + (o.algebraic_degree > 0) + o.transcendental;
  if (given != 1) throw UsageError("admissible: give exactly one of --shift, --algebraic-degree, --transcendental");
  ShiftClass cls = !o.shift.empty()       ? ShiftClass::rational(parse_shift(o.shift))
                   : o.transcendental     ? ShiftClass::transcendental()
                                          : ShiftClass::algebraic(static_cast<unsigned>(o.algebraic_degree));
  const Admissibility a = shift_admissible(cls);
  json r;
  r["shift"] = cls.describe();
  r["admissible"] = a == Admissibility::undetermined ? json(nullptr) : json(a == Admissibility::admissible);
  r["status"] = to_string(a);
  if (const Rational* s = cls.as_rational()) {
    r["shift"] = *s;
    r["generators"] = obstruction_generators(*s);
    r["obstruction_value"] = obstruction_value(*s);
    r["lattice_gcd"] = obstruction_gcd(*s).get_str();
    r["collinear_obstruction"] = collinear_obstruction(*s);
  }
  return {r, kOk};
}

Outcome cmd_certify(const Options& o, const Context& ctx) {
  if (o.shift.empty()) throw UsageError("certify: --shift is required");
  if (o.bound < 0) throw UsageError("certify: --bound must be non-negative");
  const Rational s = parse_shift(o.shift);
  const Admissibility a = shift_admissible(s);
  if (a != Admissibility::admissible) {
    json r{{"refused", true},
           {"shift", s},
           {"admissibility", to_string(a)},
           {"reason", "the shift is not admissible, so an empty violation list would certify nothing"}};
    return {r, kDomainError};
  }
  ProgressFn progress;
  if (o.progress)
    progress = [&ctx](std::size_t done, std::size_t total) {
      ctx.err << "certify: " << done << "/" << total << "\n";
    };
  CertificateReport rep = certify_no_quadruple(s, o.bound, ctx.workers, progress);
  json r = rep;
  r["refused"] = false;
  return {r, rep.violations.empty() ? kOk : kDomainError};
}

Outcome cmd_family(const Options& o) {
  if (o.k < 0 || o.l < 0) throw UsageError("family: --k and --l must be non-negative");
  PlanarPointSet set = half_integer_family(o.k, o.l);
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  json squared = json::object();
  for (auto [i, j] : pairs) {
    auto sq = set.exact_squared_distance(i, j);
    squared["d" + std::to_string(i) + std::to_string(j)] = sq ? json(*sq) : json(nullptr);
  }
  const long k = o.k, l = o.l;
  const auto d12 = set.exact_squared_distance(1, 2), d13 = set.exact_squared_distance(1, 3),
             d23 = set.exact_squared_distance(2, 3);
  json r;
  r["k"] = k;
  r["l"] = l;
  r["points"] = set;
  r["squared_distances"] = squared;
  r["checks"] = json{{"d12_squared", d12 && *d12 == Rational(4 * k * k + 2 * (2 * k - l) + 1)},
                     {"d13_squared", d13 && *d13 == Rational(4 * k * k + 2 * (2 * k + l) + 3)},
                     {"d23", d23 && *d23 == Rational((2 * l + 1) * (2 * l + 1))}};
  return {r, kOk};
}

Outcome cmd_odd_search(const Options& o) {
  OddSearchResult res = search_odd_distance_quadruple(o.bound, o.odd_tol);
  return {json(res), kOk};
}

Outcome cmd_bessel_zeros(const Options& o, const Context& ctx) {
  ZeroTable t = obtain_zeros(o.count, o.precision, o.cache, ctx);
  return {json(t), kOk};
}

Outcome cmd_asymptotics(const Options& o, const Context& ctx) {
  double correction;
  if (o.correction == "stated") correction = kStatedZeroCorrection;
  else if (o.correction == "mcmahon") correction = kMcMahonZeroCorrection;
  else {
    try {
      std::size_t used = 0;
      correction = std::stod(o.correction, &used);
      if (used != o.correction.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--correction: expected stated, mcmahon or a number");
    }
  }
  if (o.order < 1) throw UsageError("--order must be at least 1");
  ZeroTable t = obtain_zeros(o.count, o.precision, o.cache, ctx);
  json r;
  r["residuals"] = verify_zero_asymptotics(t, correction, o.fit_k_min);
  json fits = json::array();
  for (int order = 1; order <= o.order; ++order) fits.push_back(fit_expansion_coefficients(t, order));
  r["fits"] = fits;
  return {r, kOk};
}

Outcome cmd_fourier(const Options& o) {
  ConvexBody body = parse_body(o.body);
  Vec2 xi;
  if (!o.xi.empty()) {
    xi = parse_vec2(o.xi, "--xi");
  } else {
    Vec2 u = parse_vec2(o.direction, "--direction");
    const double len = norm(u);
    if (!(len > 0.0)) throw UsageError("--direction must be non-zero");
    xi = (o.radius / len) * u;
  }
  FourierSample s = chi_hat(body, xi, o.tol);
  json r = s;
  r["body"] = body_to_json(body);
  r["support"] = support_function(body, xi);
  if (body.kind() == ConvexBody::Kind::disk) {
    const double R = body.semi_a(), rho = norm(xi);
    r["closed_form"] = rho == 0.0 ? body.area() : R * j1(2.0 * std::numbers::pi * R * rho) / rho;
  }
  return {r, kOk};
}

Outcome cmd_stationary(const Options& o) {
  ConvexBody body = parse_body(o.body);
  Vec2 u = parse_vec2(o.direction, "--direction");
  if (!(norm(u) > 0.0)) throw UsageError("--direction must be non-zero");
  if (o.samples < 2 || !(o.r_min > 0.0) || !(o.r_max > o.r_min))
    throw UsageError("stationary: need 0 < --r-min < --r-max and --samples >= 2");
  std::vector<double> radii(o.samples);
  for (int i = 0; i < o.samples; ++i) radii[i] = o.r_min + (o.r_max - o.r_min) * i / (o.samples - 1);
  DecayReport rep = stationary_phase_check(body, (1.0 / norm(u)) * u, radii, o.phase_min, o.quad_tol);
  json r = rep;
  r["body"] = body_to_json(body);
  return {r, kOk};
}

Outcome cmd_clique(const Options& o, const Context& ctx) {
  CliqueReport rep;
  json r;
  if (o.model > 0) {
    std::vector<double> d;
    for (const auto& m : truncated_bessel_distances(o.model, o.terms)) d.push_back(m.distance());
    rep = model_shifted_clique_search(d, o.tol, ctx.workers);
    r["source"] = "model";
  } else {
    ConvexBody body = parse_body(o.body);
    double bound = o.radius_bound;
    if (o.zeros > 0) {
      if (body.kind() != ConvexBody::Kind::disk) throw UsageError("clique: --zeros applies to the disk only");
      ZeroTable t = j1_zeros(o.zeros, 1e-12, ctx.workers);
      bound = t.entries.back().value / (2.0 * std::numbers::pi * body.semi_a());
    }
    if (!(bound > 0.0)) throw UsageError("clique: give --radius-bound, --zeros or --model");
    rep = max_orthogonal_clique(body, bound, o.tol, ctx.workers);
    r["source"] = "body";
    r["body"] = body_to_json(body);
    r["radius_bound"] = bound;
  }
  const json body = rep;
  for (const auto& [key, value] : body.items()) r[key] = value;
  return {r, kOk};
}

Outcome cmd_solymosi(const Options& o) {
  SolymosiSet set = solymosi_example(o.n, o.limit);
  json r = set;
  if (o.q > 0.0) r["linear_count"] = verify_linear_count(set.points, o.q, o.alpha);
  return {r, kOk};
}

Outcome cmd_count(const Options& o) { return {json(count_growth_scan(o.n, o.limits)), kOk}; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  Options o;

  CLI::App app{"Shifted-lattice distance sets, Bessel zeros and orthogonal exponentials", "shiftdist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}))->capture_default_str();
  app.add_option("--workers", ctx.workers, "Worker threads (0 = available parallelism)")->capture_default_str();
  app.add_flag("--no-timing", ctx.no_timing, "Print wall_time as null so reruns are byte-identical");

  std::map<std::string, std::function<Outcome()>> handlers;

  auto* admissible = app.add_subcommand("admissible", "Decide whether a shift defeats the four-point obstruction");
  admissible->add_option("--shift", o.shift, "Rational shift p/q");
  admissible->add_option("--algebraic-degree", o.algebraic_degree, "Declared algebraic degree of an irrational shift");
  admissible->add_flag("--transcendental", o.transcendental, "Declare a transcendental shift");
  handlers["admissible"] = [&] { return cmd_admissible(o); };

  auto* certify = app.add_subcommand("certify", "Exhaustive exact certificate over distance tuples");
  certify->add_option("--shift", o.shift, "Rational shift p/q")->required();
  certify->add_option("--bound", o.bound, "Largest integer part of a distance")->capture_default_str();
  certify->add_flag("--progress", o.progress, "Report progress on stderr");
  handlers["certify"] = [&] { return cmd_certify(o, ctx); };

  auto* family = app.add_subcommand("family", "Half-integer four-point family for indices k, l");
  family->add_option("--k", o.k)->capture_default_str();
  family->add_option("--l", o.l)->capture_default_str();
  handlers["family"] = [&] { return cmd_family(o); };

  auto* odd = app.add_subcommand("odd-search", "Numeric search for four points with odd distances");
  odd->add_option("--bound", o.bound, "Largest odd distance")->capture_default_str();
  odd->add_option("--tol", o.odd_tol)->capture_default_str();
  handlers["odd-search"] = [&] { return cmd_odd_search(o); };

  auto* zeros = app.add_subcommand("bessel-zeros", "Certified zeros of J1");
  zeros->add_option("--count", o.count)->capture_default_str();
  zeros->add_option("--precision", o.precision)->capture_default_str();
  zeros->add_option("--cache", o.cache, "Zero cache file (default $SHIFTDIST_CACHE_DIR/j1-zeros.txt)");
  handlers["bessel-zeros"] = [&] { return cmd_bessel_zeros(o, ctx); };

  auto* asym = app.add_subcommand("asymptotics", "Residuals of the large-zero model and expansion fits");
  asym->add_option("--count", o.count)->capture_default_str();
  asym->add_option("--precision", o.precision)->capture_default_str();
  asym->add_option("--cache", o.cache);
  asym->add_option("--correction", o.correction, "stated, mcmahon or a number")->capture_default_str();
  asym->add_option("--fit-k-min", o.fit_k_min)->capture_default_str();
  asym->add_option("--order", o.order, "Fit orders 1..order")->capture_default_str();
  handlers["asymptotics"] = [&] { return cmd_asymptotics(o, ctx); };

  auto* fourier = app.add_subcommand("fourier", "Fourier transform of the indicator of a convex body");
  fourier->add_option("--body", o.body, "disk[:R], ellipse:a,b or file:<path.json>")->capture_default_str();
  fourier->add_option("--xi", o.xi, "Frequency x,y");
  fourier->add_option("--radius", o.radius, "|xi| along --direction")->capture_default_str();
  fourier->add_option("--direction", o.direction)->capture_default_str();
  fourier->add_option("--tol", o.tol)->capture_default_str();
  handlers["fourier"] = [&] { return cmd_fourier(o); };

  auto* stat = app.add_subcommand("stationary", "Stationary-phase fit along a ray");
  stat->add_option("--body", o.body)->capture_default_str();
  stat->add_option("--direction", o.direction)->capture_default_str();
  stat->add_option("--r-min", o.r_min)->capture_default_str();
  stat->add_option("--r-max", o.r_max)->capture_default_str();
  stat->add_option("--samples", o.samples)->capture_default_str();
  stat->add_option("--phase-min", o.phase_min)->capture_default_str();
  stat->add_option("--quad-tol", o.quad_tol)->capture_default_str();
  handlers["stationary"] = [&] { return cmd_stationary(o); };

  auto* clique = app.add_subcommand("clique", "Largest set of mutually orthogonal exponentials");
  clique->add_option("--body", o.body)->capture_default_str();
  clique->add_option("--radius-bound", o.radius_bound);
  clique->add_option("--zeros", o.zeros, "Use the first N zero distances of the disk");
  clique->add_option("--model", o.model, "Use the first K truncated-model distances instead of a body");
  clique->add_option("--terms", o.terms, "Model truncation (1 or 2)")->capture_default_str()->check(CLI::Range(1, 2));
  clique->add_option("--tol", o.tol)->capture_default_str();
  handlers["clique"] = [&] { return cmd_clique(o, ctx); };

  auto* soly = app.add_subcommand("solymosi", "Integer-distance set {(n,0)} U {(0,m)}");
  soly->add_option("--n", o.n)->capture_default_str();
  soly->add_option("--N", o.limit)->capture_default_str();
  soly->add_option("--q", o.q, "Also count points per strip in [-q,q]^2");
  soly->add_option("--alpha", o.alpha)->capture_default_str();
  handlers["solymosi"] = [&] { return cmd_solymosi(o); };

  auto* count = app.add_subcommand("count", "Growth of the integer-distance construction");
  count->add_option("--n", o.n)->capture_default_str();
  count->add_option("--N-list", o.limits)->delimiter(',')->capture_default_str();
  handlers["count"] = [&] { return cmd_count(o); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (ctx.workers == 0) ctx.workers = default_workers();
  const json params = collect_parameters(*sub, ctx);

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    Outcome res = handlers.at(command)();
    emit(ctx, command, params, elapsed(), std::move(res.result));
    return res.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << sub->help();
    return kUsageError;
  } catch (const ZeroCacheError& e) {
    err << "error: zero cache line " << e.line() << ": " << e.what() << "\n";
    emit(ctx, command, params, elapsed(), json{{"error", e.what()}, {"line", e.line()}});
    return kDomainError;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    emit(ctx, command, params, elapsed(),
         json{{"error", e.what()}, {"best_estimate", number(e.best_estimate())}, {"error_estimate", number(e.error_estimate())}});
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    emit(ctx, command, params, elapsed(), json{{"error", e.what()}});
    return kDomainError;
  }
}

}  // namespace shiftdist::cli
