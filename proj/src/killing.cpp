#include "lorentz3/killing.hpp"

#include <cmath>

#include "lorentz3/euler_basis.hpp"

namespace lorentz3 {

namespace {

struct ProfileSolution {
  std::function<double(double)> f, df, ddf;
};

std::array<ProfileSolution, 2> profile_solutions(const PlaneWaveChart& chart) {
  const double p = chart.parameter();
  if (chart.profile() == PlaneWaveChart::Profile::PowerLaw) {
    const EulerBasis e = euler_basis(p);
    std::array<ProfileSolution, 2> out;
    for (int k = 0; k < 2; ++k) {
      out[k] = {[e, k](double u) { return e.value(k, u); },
                [e, k](double u) { return e.derivative(k, u); },
                [e, k](double u) { return e.second_derivative(k, u); }};
    }
    return out;
  }
  if (p == 0.0) {
    return {{{[](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }},
             {[](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; }}}};
  }
  const double w = std::sqrt(std::abs(p));
  if (p > 0.0) {
    return {{{[w](double u) { return std::cosh(w * u); }, [w](double u) { return w * std::sinh(w * u); },
              [w](double u) { return w * w * std::cosh(w * u); }},
             {[w](double u) { return std::sinh(w * u); }, [w](double u) { return w * std::cosh(w * u); },
              [w](double u) { return w * w * std::sinh(w * u); }}}};
  }
  return {{{[w](double u) { return std::cos(w * u); }, [w](double u) { return -w * std::sin(w * u); },
            [w](double u) { return -w * w * std::cos(w * u); }},
           {[w](double u) { return std::sin(w * u); }, [w](double u) { return w * std::cos(w * u); },
            [w](double u) { return -w * w * std::sin(w * u); }}}};
}

}  // namespace

Matrix3 lie_derivative_of_metric(const Chart& chart, const VectorField& field, const Point& p) {
  const MetricJet jet = chart.jet(p, 1);
  const Vec3 xi = field.value(p);
  const Matrix3 dxi = field.jacobian(p);
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) {
        s += xi[k] * jet.d1[k][i][j] + jet.g[k][j] * dxi[k][i] + jet.g[i][k] * dxi[k][j];
      }
      out[i][j] = s;
    }
  return out;
}

double killing_residual(const Chart& chart, const VectorField& field, const std::vector<Point>& points) {
  double worst = 0.0;
  for (const auto& p : points) {
    const Matrix3 l = lie_derivative_of_metric(chart, field, p);
    for (const auto& row : l)
      for (double x : row) worst = std::max(worst, std::abs(x));
  }
  return worst;
}

double killing_residual(const Chart& chart, const VectorField& field, const Grid& grid) {
  return killing_residual(chart, field, grid.points());
}

Vec3 lie_bracket(const VectorField& a, const VectorField& b, const Point& p) {
  const Vec3 av = a.value(p), bv = b.value(p);
  const Matrix3 aj = a.jacobian(p), bj = b.jacobian(p);
  Vec3 out{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) out[k] += av[i] * bj[k][i] - bv[i] * aj[k][i];
  return out;
}

VectorField translation_v() {
  return {"d_v", [](const Point&) { return Vec3{0, 1, 0}; }, [](const Point&) { return Matrix3{}; }};
}

VectorField translation_x() {
  return {"d_x", [](const Point&) { return Vec3{0, 0, 1}; }, [](const Point&) { return Matrix3{}; }};
}

VectorField translation_u() {
  return {"d_u", [](const Point&) { return Vec3{1, 0, 0}; }, [](const Point&) { return Matrix3{}; }};
}

VectorField boost_field() {
  return {"boost", [](const Point& p) { return Vec3{p[kU], -p[kV], 0}; },
          [](const Point&) {
            Matrix3 j{};
            j[kU][kU] = 1;
            j[kV][kV] = -1;
            return j;
          }};
}

std::array<VectorField, 3> heis_killing_fields(const RosenChart& chart) {
  const RosenProfile profile = chart.profile();
  VectorField xi{"xi",
                 [profile](const Point& p) {
                   return Vec3{0, p[kXc], -profile.inverse_antiderivative(p[kU])};
                 },
                 [profile](const Point& p) {
                   Matrix3 j{};
                   j[kV][kXc] = 1;
                   j[kXc][kU] = -1.0 / profile.derivatives(p[kU])[0];
                   return j;
                 }};
  return {translation_v(), translation_x(), xi};
}

Point heis_flow(const RosenChart& chart, double t, const Point& p) {
  const double f = chart.antiderivative(p[kU]);
  return {p[kU], p[kV] + t * p[kXc] - 0.5 * t * t * f, p[kXc] - t * f};
}

std::array<VectorField, 2> brinkmann_transverse_fields(const PlaneWaveChart& chart) {
  const auto sols = profile_solutions(chart);
  std::array<VectorField, 2> out;
  for (int k = 0; k < 2; ++k) {
    const ProfileSolution s = sols[k];
    out[k] = {"transverse_" + std::to_string(k),
              [s](const Point& p) { return Vec3{0, -s.df(p[kU]) * p[kXc], s.f(p[kU])}; },
              [s](const Point& p) {
                Matrix3 j{};
                j[kV][kU] = -s.ddf(p[kU]) * p[kXc];
                j[kV][kXc] = -s.df(p[kU]);
                j[kXc][kU] = s.df(p[kU]);
                return j;
              }};
  }
  return out;
}

}  // namespace lorentz3
