#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lorentz3/classifier.hpp"
#include "lorentz3/coordinate_transform.hpp"
#include "lorentz3/curvature.hpp"
#include "lorentz3/geodesics.hpp"
#include "lorentz3/rational.hpp"

namespace lorentz3 {

using Json = nlohmann::ordered_json;

// Accepts inline JSON or a path to a JSON file holding either a row-major
// 3x3 array (entries are rational strings or numbers) or an object with a
// "matrix" member. Non-exact entries are rationalized and appended to
// `inputs`. Throws ParseError, NotADerivation.
Derivation parse_derivation(const std::string& text_or_path, std::vector<ParsedRational>* inputs = nullptr);

Json rational_matrix_json(const RationalMatrix3& m);
Json inputs_json(const std::vector<ParsedRational>& inputs);
Json metric_json(const InvariantMetric& m, const IsotropyChoice& w);
Json space_report_json(const Derivation& a, const SpaceReport& r);
Json curvature_point_json(const CurvatureReport& r);
Json geodesic_report_json(const Chart& chart, const GeodesicResult& r);
Json completeness_json(const Chart& chart, const std::vector<FamilyVerdict>& families, std::uint64_t seed,
                       double horizon);
Json error_json(const std::string& code, const std::string& message);

std::string chart_metric_formula(const Chart& chart);

}  // namespace lorentz3
