#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz3/charts.hpp"

namespace lorentz3 {

struct GeodesicState {
  Point position{};
  Vec3 velocity{};
};

enum class CausalType { Timelike, Null, Spacelike };
enum class Termination { CompletedSpan, HitDomainBoundary, StepUnderflow };

std::string to_string(CausalType c);
std::string to_string(Termination t);

inline constexpr double kNullBand = 1e-12;

double norm_squared(const Chart& chart, const GeodesicState& s);
// Sign of g(γ', γ') with |g| <= kNullBand counted as null.
CausalType causal_type(const Chart& chart, const GeodesicState& s);

// Returns (u̇, v̇, ẋ, ü, v̈, ẍ) with γ̈^k = −Γ^k_ij γ̇^i γ̇^j. Throws DomainError.
std::array<double, 6> geodesic_rhs(const Chart& chart, const GeodesicState& s);

// One trajectory sample. The transverse part is stored in units of
// e^log_scale so that exponentially growing solutions (hyperbolic profiles
// over long spans) stay representable:
//   x = e^L x_hat, v = v_linear + e^{2L} w_hat, g(γ',γ') = n_linear + e^{2L} n_hat.
struct GeodesicSample {
  double t = 0.0;
  double u = 0.0, du = 0.0;
  double x_hat = 0.0, dx_hat = 0.0;
  double v_linear = 0.0, dv_linear = 0.0;
  double w_hat = 0.0, dw_hat = 0.0;
  double n_linear = 0.0, n_hat = 0.0;
  double log_scale = 0.0;
  // |g(γ',γ') − g0| relative to max(|g0|, largest term of the norm).
  double norm_drift = 0.0;

  // Plain doubles; may overflow to ±inf when log_scale is large.
  double x() const;
  double dx() const;
  double v() const;
  double dv() const;
  double norm() const;
  GeodesicState state() const;
};

enum class SampleMode { EveryStep, OutputTimes, Endpoints };

struct IntegrationControls {
  double rtol = 1e-10;
  double atol = 1e-12;
  // Boundary guard: stop when u - u_lower(chart) <= u_min.
  double u_min = 1e-8;
  double initial_step = 1e-3;
  // Step underflow when h < min_step * max(1, |t|).
  double min_step = 1e-14;
  std::size_t max_steps = 20'000'000;
  SampleMode sample_mode = SampleMode::EveryStep;
  // Used with SampleMode::OutputTimes; must be monotone in the direction of
  // integration. The integrator lands on these exactly.
  std::vector<double> output_times;
};

struct GeodesicResult {
  std::vector<GeodesicSample> samples;
  CausalType causal_type = CausalType::Null;
  Termination terminated = Termination::CompletedSpan;
  double t0 = 0.0;
  double t_end = 0.0;
  // |t_end − t0|.
  double affine_span_reached = 0.0;
  // Affine parameter at which u reaches u_lower under ü = 0; NaN when u is
  // not heading to a finite boundary.
  double predicted_boundary_t = 0.0;
  double initial_norm = 0.0;
  double max_norm_drift = 0.0;
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;
};

// Adaptive Runge–Kutta–Fehlberg 7(8) integration from t0 to t1 (either
// direction). Domain boundary hits and step underflow are reported through
// `terminated`.
GeodesicResult integrate_geodesic(const Chart& chart, const GeodesicState& initial, double t0,
                                  double t1, const IntegrationControls& controls = {});

// Decimal rendering of e^log_scale * mantissa that survives overflow.
std::string format_scaled(double mantissa, double log_scale);

struct GeodesicSummary {
  GeodesicState initial;
  CausalType causal = CausalType::Null;
  double norm = 0.0;
  // Index 0: forward (t -> +horizon), 1: backward.
  std::array<Termination, 2> terminated{};
  std::array<double, 2> t_end{};
  std::array<double, 2> predicted_boundary_t{};
  // Boundary hit agrees with the ü = 0 prediction.
  std::array<bool, 2> certified{};
  double max_norm_drift = 0.0;
};

struct FamilyVerdict {
  std::string family;
  // "complete", "incomplete" or "unstated-in-paper".
  std::string verdict;
  // Subset of {"forward", "backward"} in which some member is incomplete.
  std::vector<std::string> incomplete_directions;
  std::vector<GeodesicSummary> members;
  std::string label = "evidence";
};

struct CompletenessOptions {
  std::uint64_t seed = 20240607;
  int members_per_family = 20;
  double horizon = 1e4;
  IntegrationControls controls{.rtol = 1e-11, .atol = 1e-13, .output_times = {}};
  bool parallel = true;
};

// Families: timelike (alternating time orientation), null (non-vertical),
// null-vertical (x = 0 plane), dv-orbit, spacelike.
std::vector<FamilyVerdict> completeness_report(const Chart& chart, const CompletenessOptions& opts = {});

// Random initial conditions used by completeness_report, exposed for
// tests. Deterministic for a given seed.
std::vector<GeodesicState> sample_family(const Chart& chart, const std::string& family, int count,
                                         std::uint64_t seed);

}  // namespace lorentz3
