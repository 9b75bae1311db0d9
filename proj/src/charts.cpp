#include "lorentz3/charts.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Fills every jet entry of component (i, j) (and its transpose) from
// partial(n_u, n_x), the mixed u/x partial derivative; v-derivatives vanish.
template <typename Partial>
void fill_component(MetricJet& jet, int i, int j, int order, Partial partial) {
  auto set = [&](Matrix3& m, double value) {
    m[i][j] = value;
    m[j][i] = value;
  };
  auto counts = [](std::initializer_list<int> idx) {
    int nu = 0, nx = 0;
    for (int a : idx) {
      if (a == kV) return std::array<int, 2>{-1, -1};
      (a == kU ? nu : nx)++;
    }
    return std::array<int, 2>{nu, nx};
  };
  auto eval = [&](std::array<int, 2> c) { return c[0] < 0 ? 0.0 : partial(c[0], c[1]); };
  set(jet.g, partial(0, 0));
  if (order < 1) return;
  for (int a = 0; a < 3; ++a) set(jet.d1[a], eval(counts({a})));
  if (order < 2) return;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) set(jet.d2[a][b], eval(counts({a, b})));
  if (order < 3) return;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) set(jet.d3[a][b][c], eval(counts({a, b, c})));
}

double falling_factorial(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x - i;
  return out;
}

}  // namespace

void Chart::require_domain(const Point& p) const {
  if (!in_domain(p)) {
    throw DomainError("point (" + format_number(p[0]) + ", " + format_number(p[1]) + ", " +
                      format_number(p[2]) + ") is outside the domain of " + descriptor());
  }
}

std::shared_ptr<PlaneWaveChart> PlaneWaveChart::power_law(double b) {
  return std::shared_ptr<PlaneWaveChart>(new PlaneWaveChart(Profile::PowerLaw, b));
}

std::shared_ptr<PlaneWaveChart> PlaneWaveChart::constant(double h) {
  return std::shared_ptr<PlaneWaveChart>(new PlaneWaveChart(Profile::Constant, h));
}

std::array<double, 4> PlaneWaveChart::profile_derivatives(double u) const {
  if (profile_ == Profile::Constant) return {parameter_, 0.0, 0.0, 0.0};
  const double b = parameter_;
  const double inv = 1.0 / u;
  const double inv2 = inv * inv;
  return {b * inv2, -2.0 * b * inv2 * inv, 6.0 * b * inv2 * inv2, -24.0 * b * inv2 * inv2 * inv};
}

std::string PlaneWaveChart::descriptor() const {
  return (profile_ == Profile::PowerLaw ? "PowerLaw(b=" : "Constant(h=") +
         format_number(parameter_) + ")";
}

bool PlaneWaveChart::in_domain(const Point& p) const {
  for (double c : p)
    if (!std::isfinite(c)) return false;
  return profile_ == Profile::Constant || p[kU] > 0.0;
}

double PlaneWaveChart::u_lower() const {
  return profile_ == Profile::PowerLaw ? 0.0 : -std::numeric_limits<double>::infinity();
}

MetricJet PlaneWaveChart::jet(const Point& p, int order) const {
  require_domain(p);
  const auto hd = profile_derivatives(p[kU]);
  const double x = p[kXc];
  const std::array<double, 4> x_powers{x * x, 2.0 * x, 2.0, 0.0};
  MetricJet jet;
  fill_component(jet, kU, kU, order, [&](int nu, int nx) {
    return nx > 3 || nu > 3 ? 0.0 : hd[nu] * x_powers[nx];
  });
  fill_component(jet, kU, kV, order, [](int nu, int nx) { return nu + nx == 0 ? 1.0 : 0.0; });
  fill_component(jet, kXc, kXc, order, [](int nu, int nx) { return nu + nx == 0 ? 1.0 : 0.0; });
  return jet;
}

RosenProfile power_rosen_profile(double alpha) {
  RosenProfile p;
  p.derivatives = [alpha](double u) {
    std::array<double, 4> d{};
    for (int k = 0; k < 4; ++k) d[k] = falling_factorial(2.0 * alpha, k) * std::pow(u, 2.0 * alpha - k);
    return d;
  };
  if (alpha == 0.5) {
    p.inverse_antiderivative = [](double u) { return std::log(u); };
  } else {
    p.inverse_antiderivative = [alpha](double u) {
      return std::pow(u, 1.0 - 2.0 * alpha) / (1.0 - 2.0 * alpha);
    };
  }
  p.u_lower = 0.0;
  p.name = "u^(2*" + format_number(alpha) + ")";
  return p;
}

std::shared_ptr<RosenChart> RosenChart::power(double alpha) {
  return std::shared_ptr<RosenChart>(new RosenChart(power_rosen_profile(alpha), alpha));
}

std::shared_ptr<RosenChart> RosenChart::general(RosenProfile profile) {
  return std::shared_ptr<RosenChart>(
      new RosenChart(std::move(profile), std::numeric_limits<double>::quiet_NaN()));
}

std::string RosenChart::descriptor() const {
  if (!std::isnan(alpha_)) return "Rosen(alpha=" + format_number(alpha_) + ")";
  return "Rosen(delta=" + profile_.name + ")";
}

bool RosenChart::in_domain(const Point& p) const {
  for (double c : p)
    if (!std::isfinite(c)) return false;
  return p[kU] > profile_.u_lower;
}

MetricJet RosenChart::jet(const Point& p, int order) const {
  require_domain(p);
  const auto d = profile_.derivatives(p[kU]);
  if (!(d[0] > 0.0)) throw DomainError("Rosen profile is not positive at u = " + format_number(p[kU]));
  MetricJet jet;
  fill_component(jet, kXc, kXc, order, [&](int nu, int nx) { return nx > 0 ? 0.0 : d[nu]; });
  fill_component(jet, kU, kV, order, [](int nu, int nx) { return nu + nx == 0 ? 1.0 : 0.0; });
  return jet;
}

std::vector<Point> Grid::points() const {
  std::vector<Point> out;
  auto coord = [&](int axis, int i) {
    if (n[axis] <= 1) return lo[axis];
    return lo[axis] + (hi[axis] - lo[axis]) * i / (n[axis] - 1);
  };
  for (int i = 0; i < n[0]; ++i)
    for (int j = 0; j < n[1]; ++j)
      for (int k = 0; k < n[2]; ++k) out.push_back({coord(0, i), coord(1, j), coord(2, k)});
  return out;
}

}  // namespace lorentz3
