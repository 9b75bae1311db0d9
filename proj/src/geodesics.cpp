#include "lorentz3/geodesics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <random>
#include <thread>

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "lorentz3/curvature.hpp"
#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

using State = std::array<double, 6>;  // u, x_hat, w_hat, du, dx_hat, dw_hat

constexpr double kRenormalizeAbove = 1e32;
constexpr double kPlainExpLimit = 600.0;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

double scaled_value(double linear, double hat, double log_scale) {
  if (log_scale < kPlainExpLimit) return linear + std::exp(log_scale) * hat;
  return hat == 0.0 ? linear : std::copysign(std::numeric_limits<double>::infinity(), hat);
}

// Norm split into the v-linear part and the scaled part, plus the largest
// single term of the scaled part.
struct NormParts {
  double linear = 0.0;
  double hat = 0.0;
  double largest_term = 0.0;
};

NormParts norm_parts(const Chart& chart, const State& y, double dv_linear) {
  const Matrix3 g = chart.metric({y[0], 0.0, y[1]});
  const Vec3 vel{y[3], y[5], y[4]};
  NormParts n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double term = g[i][j] * vel[i] * vel[j];
      n.hat += term;
      n.largest_term = std::max(n.largest_term, std::abs(term));
    }
  n.linear = 2.0 * g[kU][kV] * y[3] * dv_linear;
  return n;
}

double relative_drift(const NormParts& n, double g0, double log_scale) {
  const double shrink = std::exp(-2.0 * log_scale);
  const double deviation = std::abs(n.hat + (n.linear - g0) * shrink);
  const double scale = std::max({std::abs(g0) * shrink, std::abs(n.linear) * shrink, n.largest_term});
  if (scale == 0.0) return deviation == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return deviation / scale;
}

// Uniform double in [lo, hi) from the raw 64-bit stream, independent of the
// standard library's distribution implementations.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

}  // namespace

std::string to_string(CausalType c) {
  switch (c) {
    case CausalType::Timelike: return "timelike";
    case CausalType::Null: return "null";
    case CausalType::Spacelike: return "spacelike";
  }
  return "unknown";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::CompletedSpan: return "completed_span";
    case Termination::HitDomainBoundary: return "hit_domain_boundary";
    case Termination::StepUnderflow: return "step_underflow";
  }
  return "unknown";
}

double norm_squared(const Chart& chart, const GeodesicState& s) {
  const Matrix3 g = chart.metric(s.position);
  double n = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) n += g[i][j] * s.velocity[i] * s.velocity[j];
  return n;
}

CausalType causal_type(const Chart& chart, const GeodesicState& s) {
  const double n = norm_squared(chart, s);
  if (n < -kNullBand) return CausalType::Timelike;
  if (n > kNullBand) return CausalType::Spacelike;
  return CausalType::Null;
}

std::array<double, 6> geodesic_rhs(const Chart& chart, const GeodesicState& s) {
  const Christoffel gamma = christoffels(chart, s.position);
  std::array<double, 6> out{s.velocity[0], s.velocity[1], s.velocity[2], 0.0, 0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    double a = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a -= gamma[k][i][j] * s.velocity[i] * s.velocity[j];
    out[3 + k] = a;
  }
  return out;
}

double GeodesicSample::x() const { return scaled_value(0.0, x_hat, log_scale); }
double GeodesicSample::dx() const { return scaled_value(0.0, dx_hat, log_scale); }
double GeodesicSample::v() const { return scaled_value(v_linear, w_hat, 2.0 * log_scale); }
double GeodesicSample::dv() const { return scaled_value(dv_linear, dw_hat, 2.0 * log_scale); }
double GeodesicSample::norm() const { return scaled_value(n_linear, n_hat, 2.0 * log_scale); }

GeodesicState GeodesicSample::state() const { return {{u, v(), x()}, {du, dv(), dx()}}; }

std::string format_scaled(double mantissa, double log_scale) {
  char buf[64];
  if (mantissa == 0.0 || !std::isfinite(mantissa)) {
    std::snprintf(buf, sizeof buf, "%.17g", mantissa);
    return buf;
  }
  if (log_scale < kPlainExpLimit) {
    std::snprintf(buf, sizeof buf, "%.17g", mantissa * std::exp(log_scale));
    return buf;
  }
  const double l10 = std::log10(std::abs(mantissa)) + log_scale / std::log(10.0);
  const double e = std::floor(l10);
  const double frac = std::pow(10.0, l10 - e);
  std::snprintf(buf, sizeof buf, "%s%.15fe%+.0f", mantissa < 0 ? "-" : "", frac, e);
  return buf;
}

GeodesicResult integrate_geodesic(const Chart& chart, const GeodesicState& initial, double t0,
                                  double t1, const IntegrationControls& c) {
  chart.require_domain(initial.position);
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);

  GeodesicResult result;
  result.t0 = t0;
  result.initial_norm = norm_squared(chart, initial);
  result.causal_type = causal_type(chart, initial);
  const double g0 = result.initial_norm;

  // Internal parameter tau = dir * (t - t0) >= 0 with velocities scaled by
  // dir; geodesics are invariant under this reversal.
  State y{initial.position[kU], initial.position[kXc], 0.0, dir * initial.velocity[kU],
          dir * initial.velocity[kXc], 0.0};
  const double v0 = initial.position[kV];
  const double a1 = dir * initial.velocity[kV];
  double log_scale = 0.0;

  const double u_bound = chart.u_lower();
  const bool bounded = std::isfinite(u_bound);
  const double guard = u_bound + c.u_min;
  result.predicted_boundary_t =
      bounded && y[3] < 0.0 ? t0 + dir * (y[0] - u_bound) / (-y[3]) : kNaN;

  std::vector<double> outputs;
  if (c.sample_mode == SampleMode::OutputTimes) {
    for (double t : c.output_times) outputs.push_back(dir * (t - t0));
    if (!std::is_sorted(outputs.begin(), outputs.end())) {
      throw std::invalid_argument("output_times must be monotone in the integration direction");
    }
  }
  std::size_t next_output = 0;

  auto make_sample = [&](double tau) {
    GeodesicSample s;
    s.t = t0 + dir * tau;
    s.u = y[0];
    s.du = dir * y[3];
    s.x_hat = y[1];
    s.dx_hat = dir * y[4];
    s.v_linear = v0 + a1 * tau;
    s.dv_linear = dir * a1;
    s.w_hat = y[2];
    s.dw_hat = dir * y[5];
    s.log_scale = log_scale;
    const NormParts n = norm_parts(chart, y, a1);
    s.n_linear = n.linear;
    s.n_hat = n.hat;
    s.norm_drift = relative_drift(n, g0, log_scale);
    result.max_norm_drift = std::max(result.max_norm_drift, s.norm_drift);
    return s;
  };
  auto record = [&](double tau) { result.samples.push_back(make_sample(tau)); };
  auto flush_outputs = [&](double tau) {
    while (next_output < outputs.size() && std::abs(outputs[next_output] - tau) <= 1e-12 * std::max(1.0, tau)) {
      result.samples.push_back(make_sample(tau));
      ++next_output;
    }
  };

  auto rhs = [&chart](const State& s, State& ds, double) {
    const auto a = geodesic_rhs(chart, {{s[0], 0.0, s[1]}, {s[3], 0.0, s[4]}});
    ds = {s[3], s[4], s[5], a[3], a[5], a[4]};
  };

  boost::numeric::odeint::runge_kutta_fehlberg78<State> stepper;
  double tau = 0.0;
  double h = std::min(c.initial_step, span > 0.0 ? span : c.initial_step);
  Termination termination = Termination::CompletedSpan;

  const bool at_boundary = bounded && y[0] <= guard;
  if (c.sample_mode != SampleMode::OutputTimes) record(0.0);
  flush_outputs(0.0);
  if (at_boundary) termination = Termination::HitDomainBoundary;

  std::size_t steps = 0;
  while (termination == Termination::CompletedSpan && tau < span) {
    if (++steps > c.max_steps) {
      termination = Termination::StepUnderflow;
      break;
    }
    double step = std::min(h, span - tau);
    bool lands_on_boundary = false;
    if (bounded && y[3] < 0.0) {
      const double hit = (y[0] - guard) / (-y[3]);
      if (step >= hit) {
        step = hit;
        lands_on_boundary = true;
      }
    }
    if (next_output < outputs.size() && tau + step > outputs[next_output]) {
      step = outputs[next_output] - tau;
      lands_on_boundary = false;
    }
    if (step < c.min_step * std::max(1.0, std::abs(tau))) {
      if (step == span - tau || lands_on_boundary) {
        // Remaining distance is below resolution; treat as reached.
        tau += step;
        if (lands_on_boundary) termination = Termination::HitDomainBoundary;
        if (c.sample_mode != SampleMode::OutputTimes) record(tau);
        flush_outputs(tau);
        break;
      }
      termination = Termination::StepUnderflow;
      break;
    }

    State next{}, err{};
    bool failed = false;
    try {
      stepper.do_step(rhs, y, tau, next, step, err);
    } catch (const DomainError&) {
      failed = true;
    }
    double err_norm = 0.0;
    if (!failed) {
      for (int i = 0; i < 6; ++i) {
        if (!std::isfinite(next[i])) failed = true;
        const double sc = c.atol + c.rtol * std::max(std::abs(y[i]), std::abs(next[i]));
        err_norm = std::max(err_norm, std::abs(err[i]) / sc);
      }
      if (!std::isfinite(err_norm)) failed = true;
    }
    if (failed) {
      ++result.steps_rejected;
      h = 0.5 * step;
      if (h < c.min_step * std::max(1.0, std::abs(tau))) termination = Termination::StepUnderflow;
      continue;
    }
    if (err_norm > 1.0) {
      ++result.steps_rejected;
      h = step * std::max(0.2, 0.9 * std::pow(err_norm, -1.0 / 7.0));
      continue;
    }

    ++result.steps_accepted;
    const bool reached_end = step == span - tau;
    tau = reached_end ? span : tau + step;
    y = next;
    const double grow = err_norm == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err_norm, -1.0 / 8.0));
    // A step clipped to land on a target keeps the larger earlier proposal.
    h = step < h ? std::max(h, step * grow) : step * grow;

    const double m = std::max(std::abs(y[1]), std::abs(y[4]));
    if (m > kRenormalizeAbove) {
      y[1] /= m;
      y[4] /= m;
      y[2] /= m * m;
      y[5] /= m * m;
      log_scale += std::log(m);
    }
    if (lands_on_boundary) termination = Termination::HitDomainBoundary;
    const bool last = lands_on_boundary || reached_end;
    const GeodesicSample sample = make_sample(tau);
    if (c.sample_mode == SampleMode::EveryStep || (c.sample_mode == SampleMode::Endpoints && last)) {
      result.samples.push_back(sample);
    }
    flush_outputs(tau);
  }
  if (termination == Termination::StepUnderflow && c.sample_mode == SampleMode::Endpoints) {
    record(tau);
  }

  result.terminated = termination;
  result.t_end = t0 + dir * tau;
  result.affine_span_reached = tau;
  return result;
}

std::vector<GeodesicState> sample_family(const Chart& chart, const std::string& family, int count,
                                         std::uint64_t seed) {
  std::uint64_t family_salt = 0;
  for (char ch : family) family_salt = family_salt * 131 + static_cast<unsigned char>(ch);
  std::mt19937_64 rng(seed ^ (family_salt * 0x9E3779B97F4A7C15ULL));
  const double lo = std::isfinite(chart.u_lower()) ? chart.u_lower() + 0.5 : -1.0;
  const double hi = std::isfinite(chart.u_lower()) ? chart.u_lower() + 2.0 : 1.0;

  std::vector<GeodesicState> out;
  for (int i = 0; i < count; ++i) {
    GeodesicState s;
    s.position = {uniform(rng, lo, hi), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    const double orientation = i % 2 == 0 ? 1.0 : -1.0;
    const double speed = uniform(rng, 0.5, 2.0);
    const double dx = uniform(rng, -1.0, 1.0);
    const Matrix3 g = chart.metric(s.position);
    auto solve_dv = [&](double target, double du, double dxv) {
      return (target - g[kU][kU] * du * du - g[kXc][kXc] * dxv * dxv) / (2.0 * g[kU][kV] * du);
    };
    if (family == "timelike") {
      const double du = orientation * speed;
      s.velocity = {du, solve_dv(-1.0, du, dx), dx};
    } else if (family == "null") {
      const double du = orientation * speed;
      const double dxv = dx == 0.0 ? 0.5 : dx;
      s.velocity = {du, solve_dv(0.0, du, dxv), dxv};
    } else if (family == "null-vertical") {
      s.position[kXc] = 0.0;
      s.velocity = {orientation * speed, 0.0, 0.0};
    } else if (family == "dv-orbit") {
      s.velocity = {0.0, orientation * speed, 0.0};
    } else if (family == "spacelike") {
      const double du = orientation * speed;
      s.velocity = {du, solve_dv(1.0, du, dx), dx};
    } else {
      throw std::invalid_argument("unknown geodesic family '" + family + "'");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<FamilyVerdict> completeness_report(const Chart& chart, const CompletenessOptions& opts) {
  const std::vector<std::string> families{"timelike", "null", "null-vertical", "dv-orbit", "spacelike"};
  IntegrationControls controls = opts.controls;
  controls.sample_mode = SampleMode::Endpoints;

  auto summarize = [&chart, &controls, &opts](const GeodesicState& init) {
    GeodesicSummary s;
    s.initial = init;
    s.norm = norm_squared(chart, init);
    s.causal = causal_type(chart, init);
    for (int d = 0; d < 2; ++d) {
      const double target = d == 0 ? opts.horizon : -opts.horizon;
      const GeodesicResult r = integrate_geodesic(chart, init, 0.0, target, controls);
      s.terminated[d] = r.terminated;
      s.t_end[d] = r.t_end;
      s.predicted_boundary_t[d] = r.predicted_boundary_t;
      s.certified[d] = r.terminated == Termination::HitDomainBoundary &&
                       std::abs(r.t_end - r.predicted_boundary_t) <=
                           1e-6 * std::max(1.0, std::abs(r.predicted_boundary_t));
      s.max_norm_drift = std::max(s.max_norm_drift, r.max_norm_drift);
    }
    return s;
  };

  std::vector<std::vector<GeodesicState>> inits;
  for (const auto& f : families) inits.push_back(sample_family(chart, f, opts.members_per_family, opts.seed));

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (std::size_t i = 0; i < inits[f].size(); ++i) jobs.emplace_back(f, i);
  std::vector<std::vector<GeodesicSummary>> summaries(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) summaries[f].resize(inits[f].size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto [f, i] = jobs[j];
      summaries[f][i] = summarize(inits[f][i]);
    }
  };
  const unsigned threads = opts.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  std::vector<std::future<void>> pool;
  for (unsigned t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& p : pool) p.get();

  std::vector<FamilyVerdict> out;
  for (std::size_t f = 0; f < families.size(); ++f) {
    FamilyVerdict v;
    v.family = families[f];
    bool fwd = false, bwd = false;
    for (auto& s : summaries[f]) {
      fwd = fwd || s.terminated[0] != Termination::CompletedSpan;
      bwd = bwd || s.terminated[1] != Termination::CompletedSpan;
      v.members.push_back(std::move(s));
    }
    if (fwd) v.incomplete_directions.push_back("forward");
    if (bwd) v.incomplete_directions.push_back("backward");
    if (v.family == "spacelike") {
      v.verdict = "unstated-in-paper";
    } else {
      v.verdict = fwd || bwd ? "incomplete" : "complete";
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lorentz3
