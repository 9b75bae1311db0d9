#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz3/charts.hpp"
#include "lorentz3/report_json.hpp"

// Invariant suite run by `lorentz3 verify`. Compares the analytic paths with
// the finite-difference oracle and cross-checks modules against each other.
namespace lorentz3 {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  // Measured quantity and the bound it was compared against (NaN when the
  // check is boolean).
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240607;
  // Flatness threshold for max |R|.
  double flat_tol = 1e-10;
  Grid grid;
};

// algebra, metric, curvature, killing, transform, geodesics, classifier.
const std::vector<std::string>& suite_names();

// `suite` is one of suite_names() or "all". Throws std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

Json verify_json(const std::string& suite, const VerifyOptions& opts, const std::vector<CheckResult>& results);

}  // namespace lorentz3
