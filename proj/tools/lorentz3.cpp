#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "lorentz3/classifier.hpp"
#include "lorentz3/coordinate_transform.hpp"
#include "lorentz3/csv.hpp"
#include "lorentz3/curvature.hpp"
#include "lorentz3/errors.hpp"
#include "lorentz3/geodesics.hpp"
#include "lorentz3/killing.hpp"
#include "lorentz3/report_json.hpp"
#include "lorentz3/verify.hpp"

using namespace lorentz3;

namespace {

const std::uint64_t kDefaultSeed = CompletenessOptions{}.seed;
constexpr double kDefaultTol = 1e-10;
constexpr double kNablaTol = 1e-5;
constexpr double kPullbackTol = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string derivation, b, alpha, cls;

  int count() const { return !derivation.empty() + !b.empty() + !alpha.empty() + !cls.empty(); }
};

struct Common {
  Source source;
  std::string point, grid, out, velocity, values, suite = "all";
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool completeness = false;
  double span = 10.0;
  int verify_grid = 5;
  int samples = 0;
  int members = 20;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--derivation", s.derivation, "3x3 derivation as inline JSON or a JSON file, rows in basis (Z,X,Y)");
  cmd->add_option("--b", s.b, "b-invariant (rational, e.g. 2 or -1/4)");
  cmd->add_option("--alpha", s.alpha, "Rosen exponent alpha; derivation diag(1, 1-alpha, alpha)");
  cmd->add_option("--class", s.cls, "unimodular or b-free class: minkowski, half-minkowski, cw-hyperbolic, cw-elliptic");
}

void require_one_source(const Source& s) {
  if (s.count() != 1) throw UsageError("exactly one of --derivation, --b, --alpha, --class is required");
}

double resolve_tol(const std::optional<double>& flag) {
  double tol = kDefaultTol;
  if (const char* env = std::getenv("LORENTZ3_TOL"); env && *env) {
    try {
      std::size_t used = 0;
      tol = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("LORENTZ3_TOL is not a number: '") + env + "'");
    }
  }
  if (flag) tol = *flag;
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("tolerance must be positive");
  return tol;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + s + "' in " + what);
  }
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + sep.size();
  }
}

Vec3 parse_triple(const std::string& s, const std::string& what) {
  const auto parts = split(s, ",");
  if (parts.size() != 3) throw UsageError(what + " expects three comma-separated numbers, got '" + s + "'");
  return {parse_number(parts[0], what), parse_number(parts[1], what), parse_number(parts[2], what)};
}

// "nu,nv,nx:umin..umax,vmin..vmax,xmin..xmax"
Grid parse_grid(const std::string& s) {
  const auto halves = split(s, ":");
  if (halves.size() != 2) throw UsageError("--grid expects nu,nv,nx:umin..umax,vmin..vmax,xmin..xmax");
  const auto counts = split(halves[0], ",");
  const auto ranges = split(halves[1], ",");
  if (counts.size() != 3 || ranges.size() != 3) {
    throw UsageError("--grid expects nu,nv,nx:umin..umax,vmin..vmax,xmin..xmax");
  }
  Grid g;
  for (int i = 0; i < 3; ++i) {
    const double n = parse_number(counts[i], "--grid");
    if (n < 1 || n != std::floor(n) || n > 1000) throw UsageError("--grid counts must be integers in [1, 1000]");
    g.n[i] = static_cast<int>(n);
    const auto bounds = split(ranges[i], "..");
    if (bounds.size() != 2) throw UsageError("--grid range '" + ranges[i] + "' must look like lo..hi");
    g.lo[i] = parse_number(bounds[0], "--grid");
    g.hi[i] = parse_number(bounds[1], "--grid");
    if (g.hi[i] < g.lo[i]) throw UsageError("--grid range '" + ranges[i] + "' has hi < lo");
  }
  return g;
}

Grid cube_grid(int n) {
  if (n < 1 || n > 200) throw UsageError("--verify-grid must be in [1, 200]");
  Grid g;
  g.n = {n, n, n};
  return g;
}

Json grid_json(const Grid& g) {
  return {{"n", {g.n[0], g.n[1], g.n[2]}}, {"lo", {g.lo[0], g.lo[1], g.lo[2]}}, {"hi", {g.hi[0], g.hi[1], g.hi[2]}}};
}

Rational exact(const std::string& text, std::vector<ParsedRational>& inputs) {
  ParsedRational p = parse_rational(text);
  if (p.rationalized) inputs.push_back(p);
  return p.value;
}

Derivation rosen_derivation(const Rational& alpha) {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = 1;
  m[kX][kX] = 1 - alpha;
  m[kY][kY] = alpha;
  return Derivation(m);
}

Derivation derivation_from(const Source& s, std::vector<ParsedRational>& inputs) {
  if (!s.derivation.empty()) return parse_derivation(s.derivation, &inputs);
  if (!s.b.empty()) return canonical_derivation(exact(s.b, inputs));
  if (!s.alpha.empty()) return rosen_derivation(exact(s.alpha, inputs));
  const SpaceTag tag = parse_space_tag(s.cls);
  try {
    return representative_derivation(tag);
  } catch (const ParseError&) {
    throw UsageError("class " + to_string(tag) + " is determined by b; use --b instead");
  }
}

// --b gives the Brinkmann PowerLaw chart and --alpha the Rosen chart; the
// other sources go through the classifier.
ChartPtr chart_from(const Source& s) {
  std::vector<ParsedRational> inputs;
  if (!s.b.empty()) return PlaneWaveChart::power_law(to_double(exact(s.b, inputs)));
  if (!s.alpha.empty()) return RosenChart::power(to_double(exact(s.alpha, inputs)));
  return brinkmann_chart_for(classify(derivation_from(s, inputs))).make();
}

void emit_json(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  return f;
}

int run_classify(const Common& c) {
  require_one_source(c.source);
  std::vector<ParsedRational> inputs;
  const Derivation a = derivation_from(c.source, inputs);
  Json j = space_report_json(a, space_report(a));
  j["inputs"] = inputs_json(inputs);
  emit_json(j, c.out);
  return 0;
}

double max_nabla(const Chart& chart, const Point& p) {
  double m = 0.0;
  for (const Tensor4& t : nabla_riemann(chart, p)) m = std::max(m, max_abs(t));
  return m;
}

// Second Killing field reported next to d_v.
VectorField extra_killing_field(const Chart& chart) {
  if (const auto* pw = dynamic_cast<const PlaneWaveChart*>(&chart)) {
    return pw->profile() == PlaneWaveChart::Profile::PowerLaw ? boost_field() : translation_u();
  }
  return heis_killing_fields(static_cast<const RosenChart&>(chart))[2];
}

int run_curvature(const Common& c) {
  require_one_source(c.source);
  const double tol = resolve_tol(c.tol);
  const ChartPtr chart = chart_from(c.source);

  if (!c.point.empty()) {
    if (!c.grid.empty()) throw UsageError("--point and --grid are mutually exclusive");
    const Vec3 p = parse_triple(c.point, "--point");
    chart->require_domain(p);
    Json j = {{"kind", "curvature_report"}, {"chart", chart->descriptor()}, {"metric", chart_metric_formula(*chart)}};
    j.update(curvature_point_json(curvature_report(*chart, p)));
    j["tol"] = tol;
    j["flat_at_point"] = j["max_abs_riemann"].get<double>() < tol;
    emit_json(j, c.out);
    return 0;
  }

  const Grid grid = c.grid.empty() ? Grid{} : parse_grid(c.grid);
  const VectorField dv = translation_v();
  const VectorField extra = extra_killing_field(*chart);
  std::ostringstream csv;
  CsvWriter w(csv);
  w.row({"u", "v", "x", "max_abs_R", "max_abs_nabla_R", "killing_d_v", "killing_" + extra.name});
  double max_r = 0, max_nr = 0, max_k0 = 0, max_k1 = 0;
  const auto points = grid.points();
  for (const Point& p : points) {
    chart->require_domain(p);
    const double r = max_abs(riemann_tensor(*chart, p));
    const double nr = max_nabla(*chart, p);
    const double k0 = killing_residual(*chart, dv, std::vector<Point>{p});
    const double k1 = killing_residual(*chart, extra, std::vector<Point>{p});
    max_r = std::max(max_r, r);
    max_nr = std::max(max_nr, nr);
    max_k0 = std::max(max_k0, k0);
    max_k1 = std::max(max_k1, k1);
    w.row({format_double(p[0]), format_double(p[1]), format_double(p[2]), format_double(r), format_double(nr),
           format_double(k0), format_double(k1)});
  }
  const Json summary = {{"kind", "curvature_sweep"},
                        {"chart", chart->descriptor()},
                        {"metric", chart_metric_formula(*chart)},
                        {"grid", grid_json(grid)},
                        {"points", points.size()},
                        {"tol", tol},
                        {"max_abs_riemann", max_r},
                        {"max_abs_nabla_R", max_nr},
                        {"flat", max_r < tol},
                        {"locally_symmetric", max_nr <= kNablaTol},
                        {"killing_residuals", {{"d_v", max_k0}, {extra.name, max_k1}}}};
  if (!c.out.empty()) {
    auto f = open_out(c.out);
    f << csv.str();
  }
  if (c.json) {
    std::cout << summary.dump(2) << "\n";
  } else if (c.out.empty()) {
    std::cout << csv.str();
  }
  return 0;
}

std::string scaled_field(double linear, double hat, double log_scale) {
  if (log_scale == 0.0) return format_double(linear + hat);
  if (hat == 0.0) return format_double(linear);
  return format_scaled(hat, log_scale);
}

int run_geodesic(const Common& c) {
  require_one_source(c.source);
  if (!std::isfinite(c.span) || c.span == 0.0) throw UsageError("--span must be finite and nonzero");
  if (c.samples < 0) throw UsageError("--samples must be >= 0");
  if (c.members < 1 || c.members > 10000) throw UsageError("--members must be in [1, 10000]");
  const ChartPtr chart = chart_from(c.source);
  GeodesicState init;
  init.position = c.point.empty() ? Point{1, 0, 0} : parse_triple(c.point, "--point");
  init.velocity = c.velocity.empty() ? Vec3{-1, 0, 0} : parse_triple(c.velocity, "--velocity");
  chart->require_domain(init.position);

  IntegrationControls controls;
  if (c.samples > 0) {
    controls.sample_mode = SampleMode::OutputTimes;
    for (int i = 0; i <= c.samples; ++i) controls.output_times.push_back(c.span * i / c.samples);
  }
  GeodesicResult r = integrate_geodesic(*chart, init, 0.0, c.span, controls);
  if (c.samples > 0 && r.terminated != Termination::CompletedSpan) {
    // Uniform samples stop short of the boundary; append the terminal state.
    IntegrationControls ends;
    ends.sample_mode = SampleMode::Endpoints;
    const GeodesicResult e = integrate_geodesic(*chart, init, 0.0, c.span, ends);
    if (r.samples.empty() || e.samples.back().t != r.samples.back().t) r.samples.push_back(e.samples.back());
  }

  std::ostringstream csv;
  CsvWriter w(csv);
  w.row({"t", "u", "v", "x", "du", "dv", "dx", "norm"});
  for (const GeodesicSample& s : r.samples) {
    w.row({format_double(s.t), format_double(s.u), scaled_field(s.v_linear, s.w_hat, 2 * s.log_scale),
           scaled_field(0.0, s.x_hat, s.log_scale), format_double(s.du),
           scaled_field(s.dv_linear, s.dw_hat, 2 * s.log_scale), scaled_field(0.0, s.dx_hat, s.log_scale),
           scaled_field(s.n_linear, s.n_hat, 2 * s.log_scale)});
  }
  Json j = geodesic_report_json(*chart, r);
  j["span"] = c.span;
  if (c.completeness) {
    CompletenessOptions opts;
    opts.seed = c.seed;
    opts.members_per_family = c.members;
    j["completeness"] = completeness_json(*chart, completeness_report(*chart, opts), c.seed, opts.horizon);
  }
  if (!c.out.empty()) {
    auto f = open_out(c.out);
    f << csv.str();
  }
  if (c.json || !c.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << csv.str();
  }
  return 0;
}

int run_transform(const Common& c) {
  if (c.source.alpha.empty() || c.source.count() != 1) throw UsageError("transform takes --alpha only");
  std::vector<ParsedRational> inputs;
  const Rational alpha = exact(c.source.alpha, inputs);
  const RosenBrinkmannMap map = rosen_to_brinkmann(to_double(alpha));
  const Grid grid = c.grid.empty() ? cube_grid(c.verify_grid) : parse_grid(c.grid);
  const double pullback = pullback_residual(map, grid);
  Json j = {{"kind", "transform_report"},
            {"alpha", to_string(alpha)},
            {"b", to_string(alpha * alpha - alpha)},
            {"rosen_metric", "2 du dv + u^(2 alpha) dx^2"},
            {"brinkmann_metric", "2 du dv + (b/u^2) x^2 du^2 + dx^2"},
            {"to_rosen", {"u = U", "v = V + (alpha/2) X^2 / U", "x = U^(-alpha) X"}},
            {"to_brinkmann", {"U = u", "V = v - (alpha/2) u^(2 alpha - 1) x^2", "X = u^alpha x"}},
            {"grid", grid_json(grid)},
            {"pullback_residual", pullback},
            {"roundtrip_residual", roundtrip_residual(map, grid)},
            {"threshold", kPullbackTol},
            {"passed", pullback <= kPullbackTol},
            {"inputs", inputs_json(inputs)}};
  if (!c.point.empty()) {
    const Point p = parse_triple(c.point, "--point");
    PlaneWaveChart::power_law(map.b())->require_domain(p);
    const Point q = map.to_rosen(p);
    const Point back = map.to_brinkmann(q);
    j["point"] = {{"brinkmann", {p[0], p[1], p[2]}},
                  {"rosen", {q[0], q[1], q[2]}},
                  {"brinkmann_roundtrip", {back[0], back[1], back[2]}}};
  }
  emit_json(j, c.out);
  return pullback <= kPullbackTol ? 0 : 1;
}

int run_survey(const Common& c) {
  if (c.source.count() != 0) throw UsageError("survey takes --values, not an input source");
  const double tol = resolve_tol(c.tol);
  const Grid grid = c.grid.empty() ? Grid{} : parse_grid(c.grid);
  const std::string values = c.values.empty() ? "-1,-1/2,-1/4,-1/8,0,1/4,1,2,3" : c.values;

  std::vector<std::pair<std::string, Derivation>> rows;
  for (SpaceTag t : {SpaceTag::MinkowskiFlat, SpaceTag::CahenWallachHyperbolic, SpaceTag::CahenWallachElliptic}) {
    rows.emplace_back(to_string(t), representative_derivation(t));
  }
  for (const std::string& v : split(values, ",")) {
    const ParsedRational b = parse_rational(v);
    rows.emplace_back("b=" + to_string(b.value), canonical_derivation(b.value));
  }

  std::ostringstream csv;
  CsvWriter w(csv);
  w.row({"input", "class", "b", "symmetric", "locally_symmetric", "flat", "complete", "compact_model",
         "transverse_3d_group", "chart", "flat_numeric"});
  Json entries = Json::array();
  auto yes = [](bool f) { return std::string(f ? "true" : "false"); };
  for (const auto& [label, a] : rows) {
    const SpaceReport r = space_report(a);
    const ChartPtr chart = r.brinkmann_chart.make();
    const bool flat_numeric = is_flat(*chart, grid, tol);
    const std::string b = r.b ? to_string(*r.b) : "";
    w.row({label, to_string(r.space_class.tag), b, yes(r.symmetric), yes(r.locally_symmetric), yes(r.flat),
           yes(r.complete), yes(r.compact_model), yes(r.transverse_3d_group), r.brinkmann_chart.descriptor(),
           yes(flat_numeric)});
    entries.push_back({{"input", label},
                       {"class", to_string(r.space_class.tag)},
                       {"b", r.b ? Json(b) : Json(nullptr)},
                       {"flags",
                        {{"symmetric", r.symmetric},
                         {"locally_symmetric", r.locally_symmetric},
                         {"flat", r.flat},
                         {"complete", r.complete},
                         {"compact_model", r.compact_model},
                         {"transverse_3d_group", r.transverse_3d_group}}},
                       {"chart", r.brinkmann_chart.descriptor()},
                       {"flat_numeric", flat_numeric}});
  }
  const Json j = {{"kind", "survey"}, {"tol", tol}, {"grid", grid_json(grid)}, {"rows", entries}};
  if (!c.out.empty()) {
    auto f = open_out(c.out);
    f << csv.str();
  }
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else if (c.out.empty()) {
    std::cout << csv.str();
  }
  return 0;
}

int run_verify(const Common& c) {
  if (c.source.count() != 0) throw UsageError("verify takes no input source");
  VerifyOptions opts;
  opts.seed = c.seed;
  opts.flat_tol = resolve_tol(c.tol);
  if (!c.grid.empty()) opts.grid = parse_grid(c.grid);
  const auto& names = suite_names();
  if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end()) {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  const auto results = run_suite(c.suite, opts);
  const Json j = verify_json(c.suite, opts, results);
  if (!c.out.empty()) emit_json(j, c.out);
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
      if (std::isfinite(r.value)) std::cout << " (" << format_double(r.value) << " <= " << r.threshold << ")";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
    }
    std::cout << "seed " << opts.seed << ", " << j["failed"].get<std::size_t>() << " of " << results.size()
              << " checks failed\n";
  }
  return j["passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous plane-wave Lorentz 3-spaces: classification, curvature, geodesics"};
  app.require_subcommand(1);
  Common c;

  auto* classify_cmd = app.add_subcommand("classify", "Space report for a derivation (JSON)");
  auto* curvature_cmd = app.add_subcommand("curvature", "Curvature at a point (JSON) or over a grid (CSV)");
  auto* geodesic_cmd = app.add_subcommand("geodesic", "Integrate a geodesic (CSV trace, JSON verdict)");
  auto* transform_cmd = app.add_subcommand("transform", "Rosen to Brinkmann map and pullback residual (JSON)");
  auto* survey_cmd = app.add_subcommand("survey", "Classes and flags over a list of b values (CSV or JSON)");
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite; nonzero exit on failure");

  for (auto* cmd : {classify_cmd, curvature_cmd, geodesic_cmd, transform_cmd}) add_source(cmd, c.source);
  for (auto* cmd : {classify_cmd, curvature_cmd, geodesic_cmd, transform_cmd, survey_cmd, verify_cmd}) {
    cmd->add_option("--out", c.out, "output path");
  }
  for (auto* cmd : {curvature_cmd, geodesic_cmd, survey_cmd, verify_cmd}) {
    cmd->add_flag("--json", c.json, "print the JSON report to stdout");
  }
  for (auto* cmd : {curvature_cmd, survey_cmd, verify_cmd}) {
    cmd->add_option("--tol", c.tol, "flatness tolerance on max |R| (default 1e-10, env LORENTZ3_TOL)");
  }
  for (auto* cmd : {curvature_cmd, transform_cmd, survey_cmd, verify_cmd}) {
    cmd->add_option("--grid", c.grid, "sample grid nu,nv,nx:umin..umax,vmin..vmax,xmin..xmax");
  }
  for (auto* cmd : {curvature_cmd, geodesic_cmd, transform_cmd}) {
    cmd->add_option("--point", c.point, "point u,v,x");
  }
  for (auto* cmd : {geodesic_cmd, verify_cmd}) {
    cmd->add_option("--seed", c.seed, "seed for random initial conditions (default " + std::to_string(kDefaultSeed) + ")");
  }
  geodesic_cmd->add_option("--velocity", c.velocity, "initial velocity du,dv,dx (default -1,0,0)");
  geodesic_cmd->add_option("--span", c.span, "affine parameter to integrate to from t = 0 (default 10)");
  geodesic_cmd->add_option("--samples", c.samples, "uniform output samples (default: every accepted step)");
  geodesic_cmd->add_flag("--completeness", c.completeness, "also run the seeded completeness families");
  geodesic_cmd->add_option("--members", c.members, "members per completeness family (default 20)");
  transform_cmd->add_option("--verify-grid", c.verify_grid, "n for an n^3 Brinkmann grid on [0.5,2]x[-1,1]^2");
  survey_cmd->add_option("--values", c.values, "comma-separated b values (rationals)");
  verify_cmd->add_option("--suite", c.suite, "all or one of algebra, metric, curvature, killing, transform, "
                                             "geodesics, classifier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) return run_classify(c);
    if (*curvature_cmd) return run_curvature(c);
    if (*geodesic_cmd) return run_geodesic(c);
    if (*transform_cmd) return run_transform(c);
    if (*survey_cmd) return run_survey(c);
    return run_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << error_json(e.code(), e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_json("InternalError", e.what()).dump(2) << "\n";
    return 1;
  }
}
