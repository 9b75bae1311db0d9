#include "lorentz3/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "lorentz3/classifier.hpp"
#include "lorentz3/coordinate_transform.hpp"
#include "lorentz3/csv.hpp"
#include "lorentz3/curvature.hpp"
#include "lorentz3/euler_basis.hpp"
#include "lorentz3/geodesics.hpp"
#include "lorentz3/killing.hpp"
#include "lorentz3/oracle/fd_oracle.hpp"

namespace lorentz3 {

namespace {

constexpr double kBoolean = std::numeric_limits<double>::quiet_NaN();

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void bound(const std::string& name, double value, double threshold, std::string detail = {}) {
    out_.push_back({suite_, name, std::isfinite(value) && value <= threshold, value, threshold, std::move(detail)});
  }
  void above(const std::string& name, double value, double threshold, std::string detail = {}) {
    out_.push_back({suite_, name, std::isfinite(value) && value > threshold, value, threshold, std::move(detail)});
  }
  void truth(const std::string& name, bool ok, std::string detail = {}) {
    out_.push_back({suite_, name, ok, kBoolean, kBoolean, std::move(detail)});
  }
  // Runs `body`, turning an escaped exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      truth(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::vector<ChartPtr> brinkmann_charts() {
  return {PlaneWaveChart::power_law(2),    PlaneWaveChart::power_law(1), PlaneWaveChart::power_law(-0.25),
          PlaneWaveChart::power_law(-0.5), PlaneWaveChart::power_law(0), PlaneWaveChart::constant(1),
          PlaneWaveChart::constant(-1),    PlaneWaveChart::constant(0)};
}

std::vector<ChartPtr> all_charts() {
  std::vector<ChartPtr> charts = brinkmann_charts();
  for (double alpha : {-1.0, -0.5, 0.5, 2.0}) charts.push_back(RosenChart::power(alpha));
  return charts;
}

oracle::MetricFn metric_of(const ChartPtr& chart) {
  return [chart](const Point& p) { return chart->metric(p); };
}

template <typename T>
double max_diff(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(a - b);
  } else {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_diff(a[i], b[i]));
    return m;
  }
}

RationalMatrix3 diag3(const Rational& a, const Rational& b, const Rational& c) {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = a;
  m[kX][kX] = b;
  m[kY][kY] = c;
  return m;
}

Derivation elliptic(const Rational& c) {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = 2 * c;
  m[kX][kX] = c;
  m[kX][kY] = -1;
  m[kY][kX] = 1;
  m[kY][kY] = c;
  return Derivation(m);
}

Derivation parabolic() {
  RationalMatrix3 m = diag3(2, 1, 1);
  m[kX][kY] = 1;
  return Derivation(m);
}

Derivation nilpotent() {
  RationalMatrix3 m = zero3();
  m[kX][kY] = 1;
  return Derivation(m);
}

std::vector<Derivation> sample_derivations() {
  return {canonical_derivation(2), canonical_derivation(1),  canonical_derivation(Rational(-1, 2)),
          parabolic(),             elliptic(1),              Derivation(diag3(1, 2, -1)),
          Derivation(diag3(1, 1, 0)), nilpotent(),           Derivation(diag3(0, 1, -1)),
          representative_derivation(SpaceTag::CahenWallachElliptic)};
}

Rational random_rational(std::mt19937_64& rng) {
  while (true) {
    const long p = static_cast<long>(rng() % 13) - 6;
    const long q = static_cast<long>(rng() % 5) + 1;
    if (p != 0) return Rational(p, q);
  }
}

RationalMatrix3 random_automorphism(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return diagonal_automorphism(random_rational(rng), random_rational(rng));
    case 1: return shear_automorphism(random_rational(rng));
    default: return similarity_automorphism(random_rational(rng), random_rational(rng));
  }
}

void algebra_suite(Recorder& rec, const VerifyOptions& opts) {
  for (const Derivation& a : sample_derivations()) {
    const std::string name = "jacobi " + to_string(classify(a).tag);
    rec.bound(name, to_double(jacobi_residual(extend_algebra(a))), 0.0);
  }
  std::mt19937_64 rng(opts.seed);
  bool idempotent = true, invariant = true;
  for (const Derivation& a : sample_derivations()) {
    if (spectrum_on_quotient(a).trace == 0) continue;
    const CanonicalForm cf = normalize_to_canonical(a);
    idempotent = idempotent && normalize_to_canonical(cf.canonical).canonical == cf.canonical;
    for (int i = 0; i < 10; ++i) {
      const Derivation moved = add_inner_derivation(conjugate(scaled(a, random_rational(rng)), random_automorphism(rng)),
                                                    random_rational(rng), random_rational(rng));
      invariant = invariant && normalize_to_canonical(moved).canonical == cf.canonical;
    }
  }
  rec.truth("normalization idempotent", idempotent);
  rec.truth("normalization invariant under scaling, automorphisms, inner shifts", invariant);
}

void metric_suite(Recorder& rec, const VerifyOptions&) {
  struct Case {
    std::string name;
    Derivation a;
    IsotropyChoice w;
    Rational tz;
  };
  const std::vector<Case> cases{
      {"hyperbolic b=2", Derivation(diag3(3, 1, 2)), IsotropyChoice(0, 1, 1), 1},
      {"parabolic", parabolic(), IsotropyChoice(0, 0, 1), -1},
      {"elliptic c=1", elliptic(1), IsotropyChoice(0, 1, 0), 1},
      {"nilpotent", nilpotent(), IsotropyChoice(0, 0, 1), -1},
  };
  for (const Case& c : cases) {
    rec.guarded("metric " + c.name, [&] {
      const InvariantMetric m = build_invariant_metric(c.a, c.w);
      rec.truth("g(T,Z) " + c.name, m.gram[0][2] == c.tz && m.gram[1][1] == 1, "g(T,Z) = " + to_string(m.gram[0][2]));
      rec.truth("lorentz signature " + c.name, signature(m.gram).lorentz(), signature(m.gram).str());
      rec.bound("skew residual " + c.name, to_double(skew_residual(m)), 0.0);
    });
  }
  bool agree = true;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RationalMatrix3 m = zero3();
    m[kX][kX] = random_rational(rng);
    m[kX][kY] = random_rational(rng);
    m[kY][kX] = random_rational(rng);
    m[kY][kY] = random_rational(rng);
    m[kZ][kZ] = m[kX][kX] + m[kY][kY];
    try {
      admits_metric(Derivation(m), IsotropyChoice(0, random_rational(rng), random_rational(rng)));
    } catch (const std::logic_error&) {
      agree = false;
    }
  }
  rec.truth("nilpotency order agrees with eigenvector criterion", agree);
}

void curvature_suite(Recorder& rec, const VerifyOptions& opts) {
  const std::vector<Point> points = opts.grid.points();
  for (const ChartPtr& chart : all_charts()) {
    const std::string d = chart->descriptor();
    rec.guarded("curvature " + d, [&] {
      double gamma = 0, riemann = 0, nabla = 0, symmetry = 0, scalar = 0;
      for (const Point& p : points) {
        gamma = std::max(gamma, max_diff(christoffels(*chart, p), oracle::christoffels(metric_of(chart), p)));
        const Tensor4 r = riemann_tensor(*chart, p);
        riemann = std::max(riemann, max_diff(r, oracle::riemann(metric_of(chart), p)));
        nabla = std::max(nabla, max_diff(nabla_riemann(*chart, p), oracle::nabla_riemann(metric_of(chart), p)));
        symmetry = std::max(symmetry, riemann_symmetry_residual(r));
        scalar = std::max(scalar, std::abs(scalar_curvature(*chart, p)));
      }
      rec.bound("christoffel vs oracle " + d, gamma, 1e-6);
      rec.bound("riemann vs oracle " + d, riemann, 1e-6);
      rec.bound("nabla R vs oracle " + d, nabla, 1e-5);
      rec.bound("riemann symmetries " + d, symmetry, 1e-9);
      rec.bound("scalar curvature " + d, scalar, 1e-9);
    });
  }
}

void killing_suite(Recorder& rec, const VerifyOptions& opts) {
  for (const ChartPtr& chart : brinkmann_charts()) {
    const auto& pw = static_cast<const PlaneWaveChart&>(*chart);
    const std::string d = chart->descriptor();
    rec.bound("dv " + d, killing_residual(pw, translation_v(), opts.grid), 1e-9);
    if (pw.profile() == PlaneWaveChart::Profile::PowerLaw) {
      rec.bound("boost " + d, killing_residual(pw, boost_field(), opts.grid), 1e-9);
    } else {
      rec.bound("du " + d, killing_residual(pw, translation_u(), opts.grid), 1e-9);
    }
    const auto transverse = brinkmann_transverse_fields(pw);
    for (std::size_t i = 0; i < transverse.size(); ++i) {
      rec.bound(transverse[i].name + " " + d, killing_residual(pw, transverse[i], opts.grid), 1e-9);
    }
  }
  for (double alpha : {-1.0, 0.0, 2.0}) {
    const auto chart = RosenChart::power(alpha);
    const auto fields = heis_killing_fields(*chart);
    double residual = 0, bracket = 0;
    for (const VectorField& f : fields) residual = std::max(residual, killing_residual(*chart, f, opts.grid));
    for (const Point& p : opts.grid.points()) {
      bracket = std::max(bracket, max_diff(lie_bracket(fields[1], fields[2], p), Vec3{0, 1, 0}));
      bracket = std::max(bracket, max_diff(lie_bracket(fields[0], fields[1], p), Vec3{}));
      bracket = std::max(bracket, max_diff(lie_bracket(fields[0], fields[2], p), Vec3{}));
    }
    rec.bound("heisenberg fields " + chart->descriptor(), residual, 1e-9);
    rec.bound("heisenberg brackets " + chart->descriptor(), bracket, 1e-8);
  }
}

void transform_suite(Recorder& rec, const VerifyOptions& opts) {
  for (double alpha : {-1.0, -0.5, 0.5, 2.0}) {
    const RosenBrinkmannMap map = rosen_to_brinkmann(alpha);
    const std::string a = "alpha=" + format_double(alpha);
    rec.bound("pullback " + a, pullback_residual(map, opts.grid), 1e-9);
    rec.bound("roundtrip " + a, roundtrip_residual(map, opts.grid), 1e-12);
    const auto h = general_rosen_to_brinkmann(power_rosen_profile(alpha));
    double gap = 0;
    for (double u : {0.5, 1.0, 2.0}) gap = std::max(gap, std::abs(h(u) - map.b() / (u * u)));
    rec.bound("general profile " + a, gap, 1e-8);
  }
}

void geodesics_suite(Recorder& rec, const VerifyOptions& opts) {
  const auto pw2 = PlaneWaveChart::power_law(2);
  const GeodesicResult hit = integrate_geodesic(*pw2, {{1, 0, 0}, {-1, 0, 0}}, 0, 10);
  rec.truth("vertical null geodesic hits boundary", hit.terminated == Termination::HitDomainBoundary,
            to_string(hit.terminated));
  rec.bound("boundary affine parameter", std::abs(hit.t_end - 1.0), 1e-6);

  for (double b : {2.0, 1.0, 0.0, -0.25, -0.5}) {
    IntegrationControls c;
    c.sample_mode = SampleMode::OutputTimes;
    for (int i = 0; i <= 90; ++i) c.output_times.push_back(1.0 + 0.1 * i);
    const GeodesicResult r = integrate_geodesic(*PlaneWaveChart::power_law(b), {{1, 0, 0.1}, {1, 0, 0}}, 1, 10, c);
    const EulerFit fit = fit_euler(b, 1, 0.1, 0);
    double gap = 0;
    for (const GeodesicSample& s : r.samples) gap = std::max(gap, std::abs(s.x() - fit.x(s.t)));
    rec.bound("closed form b=" + format_double(b), gap, 1e-8);
    rec.bound("norm drift b=" + format_double(b), r.max_norm_drift, 1e-8);
  }

  CompletenessOptions copts;
  copts.seed = opts.seed;
  for (const ChartPtr& chart : {ChartPtr(pw2), ChartPtr(PlaneWaveChart::power_law(-0.5))}) {
    const auto families = completeness_report(*chart, copts);
    for (const FamilyVerdict& f : families) {
      if (f.family == "timelike" || f.family == "null") {
        rec.truth(f.family + " incomplete " + chart->descriptor(), f.verdict == "incomplete");
      } else if (f.family == "dv-orbit") {
        rec.truth("dv orbits complete " + chart->descriptor(), f.verdict == "complete");
      }
    }
  }
  CompletenessOptions few = copts;
  few.members_per_family = 4;
  for (double h : {1.0, -1.0}) {
    const auto chart = PlaneWaveChart::constant(h);
    bool complete = true;
    for (const FamilyVerdict& f : completeness_report(*chart, few))
      if (f.family != "spacelike") complete = complete && f.verdict == "complete";
    rec.truth("sampled geodesics complete " + chart->descriptor(), complete);
  }
}

void classifier_suite(Recorder& rec, const VerifyOptions& opts) {
  for (const Derivation& a : sample_derivations()) {
    const SpaceReport r = space_report(a);
    const ChartPtr chart = r.brinkmann_chart.make();
    const std::string d = to_string(r.space_class.tag) + " " + chart->descriptor();
    rec.truth("flat flag matches curvature " + d, r.flat == is_flat(*chart, opts.grid, opts.flat_tol));

    double nabla = 0;
    for (const Point& p : opts.grid.points()) {
      const auto fd = oracle::nabla_riemann(metric_of(chart), p);
      for (const Tensor4& t : fd) nabla = std::max(nabla, max_abs(t));
    }
    rec.truth("locally symmetric flag matches oracle nabla R " + d, r.locally_symmetric == (nabla <= 1e-5),
              "max |nabla R| = " + format_double(nabla));
    rec.truth("flag implications " + d, (!r.flat || r.locally_symmetric) && (!r.symmetric || r.locally_symmetric) &&
                                            r.complete == r.symmetric);
  }
  for (int alpha_num = -6; alpha_num <= 6; ++alpha_num) {
    const Rational alpha(alpha_num, 3);
    const Rational b = invariant_b(Derivation(diag3(1, 1 - alpha, alpha)));
    rec.truth("b invariant alpha=" + to_string(alpha), b == alpha * alpha - alpha, "b = " + to_string(b));
  }
  std::mt19937_64 rng(opts.seed + 1);
  bool invariant = true;
  for (const Derivation& a : sample_derivations()) {
    const SpaceClass c = classify(a);
    for (int i = 0; i < 20; ++i) {
      invariant = invariant && classify(conjugate(scaled(a, random_rational(rng)), random_automorphism(rng))) == c;
    }
  }
  rec.truth("classification invariant", invariant);
  bool compact = true;
  for (const Derivation& a : sample_derivations()) {
    const SpaceReport r = space_report(a);
    const bool expected = r.space_class.tag == SpaceTag::MinkowskiFlat || (r.b && *r.b == 2);
    compact = compact && r.compact_model == expected;
  }
  rec.truth("compact model verdicts", compact);
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"algebra", algebra_suite},     {"metric", metric_suite},       {"curvature", curvature_suite},
      {"killing", killing_suite},     {"transform", transform_suite}, {"geodesics", geodesics_suite},
      {"classifier", classifier_suite}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Recorder rec(name, out);
    rec.guarded(name, [&] { fn(rec, opts); });
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

Json verify_json(const std::string& suite, const VerifyOptions& opts, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    failed += !r.passed;
    Json c = {{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}};
    c["value"] = std::isfinite(r.value) ? Json(r.value) : Json(nullptr);
    c["threshold"] = std::isfinite(r.threshold) ? Json(r.threshold) : Json(nullptr);
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(c);
  }
  return {{"kind", "verify_report"},
          {"suite", suite},
          {"seed", opts.seed},
          {"passed", failed == 0},
          {"total", results.size()},
          {"failed", failed},
          {"checks", checks}};
}

}  // namespace lorentz3
