#include "lorentz3/report_json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json state_json(const GeodesicState& s) {
  return {{"position", {s.position[0], s.position[1], s.position[2]}},
          {"velocity", {s.velocity[0], s.velocity[1], s.velocity[2]}}};
}

ParsedRational parse_entry(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return parse_rational(std::to_string(e.get<long long>()));
  if (e.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << e.get<double>();
    ParsedRational p = parse_rational(os.str());
    return p;
  }
  throw ParseError("derivation entries must be strings or numbers");
}

}  // namespace

Derivation parse_derivation(const std::string& text_or_path, std::vector<ParsedRational>* inputs) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (text[first] == '[' || text[first] == '{');
  if (!inline_json) {
    std::ifstream in(text_or_path);
    if (!in) throw ParseError("cannot read derivation file '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid derivation JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ParseError("derivation object needs a \"matrix\" member");
    j = j["matrix"];
  }
  if (!j.is_array() || j.size() != 3) throw ParseError("derivation must be a 3x3 array (rows Z, X, Y)");
  RationalMatrix3 m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw ParseError("derivation must be a 3x3 array");
    for (int k = 0; k < 3; ++k) {
      ParsedRational p = parse_entry(j[i][k]);
      m[i][k] = p.value;
      if (inputs && p.rationalized) inputs->push_back(p);
    }
  }
  return Derivation(m);
}

Json rational_matrix_json(const RationalMatrix3& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    out.push_back(r);
  }
  return out;
}

Json inputs_json(const std::vector<ParsedRational>& inputs) {
  Json out = Json::array();
  for (const auto& p : inputs) {
    out.push_back({{"source", p.source},
                   {"value", to_string(p.value)},
                   {"rationalized", p.rationalized},
                   {"max_denominator", kMaxRationalizedDenominator}});
  }
  return out;
}

Json metric_json(const InvariantMetric& m, const IsotropyChoice& w) {
  const Signature s = signature(m.gram);
  return {{"isotropy", {{"Z", to_string(w.z())}, {"X", to_string(w.x())}, {"Y", to_string(w.y())}}},
          {"basis", {kMetricBasisLabels[0], kMetricBasisLabels[1], kMetricBasisLabels[2]}},
          {"yprime", {{"Z", to_string(m.y_prime[kZ])}, {"X", to_string(m.y_prime[kX])}, {"Y", to_string(m.y_prime[kY])}}},
          {"gram", rational_matrix_json(m.gram)},
          {"ad_w", rational_matrix_json(m.ad_w)},
          {"signature", s.str()},
          {"lorentz", s.lorentz()},
          {"scale_alpha", to_string(m.scale_alpha)},
          {"shift_beta", to_string(m.shift_beta)},
          {"beta_normalized", m.beta_normalized},
          {"skew_residual", to_string(skew_residual(m))}};
}

std::string chart_metric_formula(const Chart& chart) {
  if (const auto* pw = dynamic_cast<const PlaneWaveChart*>(&chart)) {
    return pw->profile() == PlaneWaveChart::Profile::PowerLaw ? "2 du dv + (b/u^2) x^2 du^2 + dx^2"
                                                               : "2 du dv + h x^2 du^2 + dx^2";
  }
  return "2 du dv + delta(u) dx^2";
}

Json space_report_json(const Derivation& a, const SpaceReport& r) {
  Json flags = {{"symmetric", r.symmetric},
                {"locally_symmetric", r.locally_symmetric},
                {"flat", r.flat},
                {"complete", r.complete},
                {"compact_model", r.compact_model},
                {"transverse_3d_group", r.transverse_3d_group}};
  Json citations = Json::array();
  for (const auto& c : r.citations) citations.push_back({{"flag", c.flag}, {"fact", c.fact}});
  const Json b = r.b ? Json(to_string(*r.b)) : Json(nullptr);
  const ChartPtr chart = r.brinkmann_chart.make();
  return {
      {"kind", "space_report"},
      {"basis", {"Z", "X", "Y"}},
      {"derivation", rational_matrix_json(a.matrix())},
      {"class", {{"tag", to_string(r.space_class.tag)}, {"b", b}}},
      {"b", b},
      {"flags", flags},
      {"brinkmann_chart",
       {{"profile", r.brinkmann_chart.profile == PlaneWaveChart::Profile::PowerLaw ? "PowerLaw" : "Constant"},
        {"parameter", to_string(r.brinkmann_chart.parameter)},
        {"descriptor", r.brinkmann_chart.descriptor()},
        {"metric", chart_metric_formula(*chart)}}},
      {"isometry_group_note", r.isometry_group_note},
      {"citations", citations},
      {"spectrum",
       {{"trace", to_string(r.spectrum.trace)},
        {"det", to_string(r.spectrum.det)},
        {"discriminant", to_string(r.spectrum.discriminant)},
        {"type", to_string(r.spectrum.type)}}},
      {"normalization",
       {{"orientation_sign", r.orientation_sign},
        {"canonical", r.canonical ? rational_matrix_json(r.canonical->matrix()) : Json(nullptr)}}},
      {"metric", metric_json(r.metric, r.isotropy)},
  };
}

Json curvature_point_json(const CurvatureReport& r) {
  Json components = Json::array();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const double v = r.riemann[a][b][c][d];
          if (v != 0.0 && a < b && c < d && (a < c || (a == c && b <= d))) {
            components.push_back({{"index", {a, b, c, d}}, {"value", v}});
          }
        }
  Json ricci = Json::array();
  for (const auto& row : r.ricci) ricci.push_back({row[0], row[1], row[2]});
  return {{"point", {r.point[0], r.point[1], r.point[2]}},
          {"riemann_components", components},
          {"ricci", ricci},
          {"scalar", r.scalar},
          {"max_abs_riemann", r.max_abs_riemann},
          {"nabla_R_norms", {{"u", r.nabla_R_norms[0]}, {"v", r.nabla_R_norms[1]}, {"x", r.nabla_R_norms[2]}}},
          {"symmetry_residual", r.symmetry_residual}};
}

Json geodesic_report_json(const Chart& chart, const GeodesicResult& r) {
  const GeodesicSample& first = r.samples.front();
  return {{"kind", "geodesic_report"},
          {"chart", chart.descriptor()},
          {"initial", state_json(first.state())},
          {"causal_type", to_string(r.causal_type)},
          {"terminated", to_string(r.terminated)},
          {"t0", r.t0},
          {"t_end", r.t_end},
          {"affine_span_reached", r.affine_span_reached},
          {"predicted_boundary_t", number_or_null(r.predicted_boundary_t)},
          {"initial_norm", r.initial_norm},
          {"max_norm_drift", r.max_norm_drift},
          {"steps_accepted", r.steps_accepted},
          {"steps_rejected", r.steps_rejected},
          {"samples", r.samples.size()},
          {"label", "evidence"}};
}

Json completeness_json(const Chart& chart, const std::vector<FamilyVerdict>& families, std::uint64_t seed,
                       double horizon) {
  Json fams = Json::object();
  for (const auto& f : families) {
    Json members = Json::array();
    for (const auto& m : f.members) {
      Json dirs = Json::array();
      for (int d = 0; d < 2; ++d) {
        dirs.push_back({{"direction", d == 0 ? "forward" : "backward"},
                        {"terminated", to_string(m.terminated[d])},
                        {"t_end", m.t_end[d]},
                        {"predicted_boundary_t", number_or_null(m.predicted_boundary_t[d])},
                        {"certified", m.certified[d]}});
      }
      members.push_back({{"initial", state_json(m.initial)},
                         {"causal_type", to_string(m.causal)},
                         {"norm", m.norm},
                         {"max_norm_drift", m.max_norm_drift},
                         {"directions", dirs}});
    }
    fams[f.family] = {{"verdict", f.verdict},
                      {"incomplete_directions", f.incomplete_directions},
                      {"label", f.label},
                      {"members", members}};
  }
  return {{"kind", "completeness_report"},
          {"chart", chart.descriptor()},
          {"seed", seed},
          {"horizon", horizon},
          {"families", fams}};
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace lorentz3
