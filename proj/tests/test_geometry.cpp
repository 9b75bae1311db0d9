#include <doctest.h>

#include <cmath>

#include "lorentz3/charts.hpp"
#include "lorentz3/coordinate_transform.hpp"
#include "lorentz3/curvature.hpp"
#include "lorentz3/errors.hpp"
#include "lorentz3/euler_basis.hpp"
#include "lorentz3/killing.hpp"
#include "lorentz3/oracle/fd_oracle.hpp"

using namespace lorentz3;

namespace {

oracle::MetricFn metric_of(const ChartPtr& chart) {
  return [chart](const Point& p) { return chart->metric(p); };
}

std::vector<ChartPtr> sample_charts() {
  return {PlaneWaveChart::power_law(2),    PlaneWaveChart::power_law(1),     PlaneWaveChart::power_law(-0.25),
          PlaneWaveChart::power_law(-0.5), PlaneWaveChart::power_law(0),     PlaneWaveChart::constant(1),
          PlaneWaveChart::constant(-1),    PlaneWaveChart::constant(0),      RosenChart::power(-1),
          RosenChart::power(0.5),          RosenChart::power(2),             RosenChart::power(-0.5)};
}

double max_diff(const Christoffel& a, const Christoffel& b) {
  double m = 0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[k][i][j] - b[k][i][j]));
  return m;
}

double max_diff(const Tensor4& a, const Tensor4& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) m = std::max(m, std::abs(a[i][j][k][l] - b[i][j][k][l]));
  return m;
}

double max_abs(const Matrix3& m) {
  double r = 0;
  for (const auto& row : m)
    for (double x : row) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace

TEST_CASE("metric components") {
  const Matrix3 g = PlaneWaveChart::power_law(2)->metric({1, 0, 1});
  CHECK(g[kU][kU] == 2);
  CHECK(g[kU][kV] == 1);
  CHECK(g[kXc][kXc] == 1);
  CHECK(g[kU][kXc] == 0);

  const Matrix3 flat = PlaneWaveChart::constant(0)->metric({-3, 2, 5});
  CHECK(flat[kU][kU] == 0);
  CHECK(flat[kV][kU] == 1);

  CHECK(RosenChart::power(-1)->metric({2, 0, 0})[kXc][kXc] == doctest::Approx(0.25));
  CHECK_THROWS_AS(PlaneWaveChart::power_law(2)->metric({0, 0, 0}), DomainError);
  CHECK_THROWS_AS(RosenChart::power(2)->metric({-1, 0, 0}), DomainError);
  CHECK_NOTHROW(PlaneWaveChart::constant(1)->metric({-4, 0, 0}));
}

TEST_CASE("christoffels against the oracle") {
  const Grid grid;
  for (const ChartPtr& chart : sample_charts()) {
    double worst = 0;
    for (const Point& p : grid.points()) {
      worst = std::max(worst, max_diff(christoffels(*chart, p), oracle::christoffels(metric_of(chart), p)));
    }
    INFO(chart->descriptor());
    CHECK(worst <= 1e-6);
  }

  const Christoffel gamma = christoffels(*PlaneWaveChart::power_law(2), {1, 0, 1});
  CHECK(gamma[kXc][kU][kU] == doctest::Approx(-2));
  CHECK(christoffels(*PlaneWaveChart::power_law(2), {1.3, 0.2, 0})[kXc][kU][kU] == 0);
  CHECK(max_diff(christoffels(*PlaneWaveChart::constant(0), {1, 2, 3}), Christoffel{}) == 0);
}

TEST_CASE("parallel null field") {
  const Grid grid;
  for (const ChartPtr& chart : sample_charts()) {
    for (const Point& p : grid.points()) {
      const Christoffel closed = christoffels(*chart, p);
      const Christoffel fd = oracle::christoffels(metric_of(chart), p);
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) {
          CHECK(closed[k][i][kV] == 0);
          CHECK(std::abs(fd[k][i][kV]) <= 1e-9);
        }
    }
  }
}

TEST_CASE("riemann against the oracle") {
  const Grid grid;
  for (const ChartPtr& chart : sample_charts()) {
    double worst = 0, symmetry = 0, scalar = 0;
    for (const Point& p : grid.points()) {
      const Tensor4 r = riemann_tensor(*chart, p);
      worst = std::max(worst, max_diff(r, oracle::riemann(metric_of(chart), p)));
      symmetry = std::max(symmetry, riemann_symmetry_residual(r));
      scalar = std::max(scalar, std::abs(scalar_curvature(*chart, p)));
    }
    INFO(chart->descriptor());
    CHECK(worst <= 1e-6);
    CHECK(symmetry <= 1e-9);
    CHECK(scalar <= 1e-9);
  }

  const Tensor4 r = riemann_tensor(*PlaneWaveChart::power_law(2), {1, 0, 0});
  CHECK(r[kU][kXc][kU][kXc] == doctest::Approx(-2));
  CHECK(oracle::riemann(metric_of(PlaneWaveChart::power_law(2)), {1, 0, 0})[kU][kXc][kU][kXc] ==
        doctest::Approx(-2).epsilon(1e-6));
  CHECK(max_abs(riemann_tensor(*PlaneWaveChart::constant(1), {0.3, 0, 0})) > 0.5);
  CHECK(max_abs(ricci(*PlaneWaveChart::constant(-1), {0.3, 0, 0})) > 0.5);
}

TEST_CASE("flatness") {
  const Grid grid;
  CHECK(is_flat(*PlaneWaveChart::power_law(0), grid, 1e-10));
  CHECK(is_flat(*PlaneWaveChart::constant(0), grid, 1e-10));
  CHECK(is_flat(*RosenChart::power(1), grid, 1e-10));
  CHECK_FALSE(is_flat(*PlaneWaveChart::power_law(-0.25), grid, 1e-10));
  CHECK_FALSE(is_flat(*RosenChart::power(-1), grid, 1e-10));
}

TEST_CASE("covariant derivative of curvature") {
  const Grid grid;
  for (const ChartPtr& chart : sample_charts()) {
    double worst = 0;
    for (const Point& p : grid.points()) {
      const auto closed = nabla_riemann(*chart, p);
      const auto fd = oracle::nabla_riemann(metric_of(chart), p);
      for (int f = 0; f < 3; ++f) worst = std::max(worst, max_diff(closed[f], fd[f]));
    }
    INFO(chart->descriptor());
    CHECK(worst <= 1e-5);
  }
  for (double h : {1.0, -1.0}) {
    const auto chart = PlaneWaveChart::constant(h);
    for (const Vec3& dir : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{1, -2, 3}})
      CHECK(covariant_R_derivative(*chart, {0.7, 0.1, -0.4}, dir) <= 1e-12);
  }
  const auto pw = PlaneWaveChart::power_law(2);
  CHECK(covariant_R_derivative(*pw, {1, 0, 0.5}, {1, 0, 0}) > 1e-3);
  CHECK(covariant_R_derivative(*pw, {1, 0, 0.5}, {0, 1, 0}) <= 1e-12);
  CHECK(covariant_R_derivative(*pw, {1, 0, 0.5}, {0, 0, 1}) <= 1e-12);
}

TEST_CASE("sectional curvature") {
  const auto pw = PlaneWaveChart::power_law(2);
  CHECK_THROWS_AS(sectional_curvature(*pw, {1, 0, 0}, {1, 0, 0}, {0, 0, 1}), DegeneratePlane);
  CHECK(sectional_curvature(*PlaneWaveChart::constant(0), {1, 0, 0}, {1, 1, 0}, {0, 0, 1}) == 0);
  for (double u : {1.0, 0.1, 0.01}) {
    oracle::Steps steps;
    steps.scale = u;
    const double fd = oracle::sectional_curvature(metric_of(pw), {u, 0, 0}, {1, 1, 0}, {0, 0, 1}, steps);
    const double closed = sectional_curvature(*pw, {u, 0, 0}, {1, 1, 0}, {0, 0, 1});
    CHECK(closed == doctest::Approx(fd).epsilon(1e-6));
    CHECK(closed == doctest::Approx(-1.0 / (u * u)).epsilon(1e-12));
  }
}

TEST_CASE("killing fields") {
  const Grid grid;
  for (double b : {2.0, -0.5, -0.25, 1.0}) {
    const auto pw = PlaneWaveChart::power_law(b);
    CHECK(killing_residual(*pw, translation_v(), grid) <= 1e-9);
    CHECK(killing_residual(*pw, boost_field(), grid) <= 1e-9);
    for (const VectorField& f : brinkmann_transverse_fields(*pw)) CHECK(killing_residual(*pw, f, grid) <= 1e-9);
  }
  for (double h : {1.0, -1.0, 0.0}) {
    const auto c = PlaneWaveChart::constant(h);
    CHECK(killing_residual(*c, translation_u(), grid) <= 1e-9);
    for (const VectorField& f : brinkmann_transverse_fields(*c)) CHECK(killing_residual(*c, f, grid) <= 1e-9);
  }

  const auto pw2 = PlaneWaveChart::power_law(2);
  const Point p{1.5, 0, 0.75};
  const Matrix3 l = lie_derivative_of_metric(*pw2, translation_x(), p);
  CHECK(l[kU][kU] == doctest::Approx(2 * 2 / (1.5 * 1.5) * 0.75));
  CHECK(killing_residual(*pw2, translation_x(), std::vector<Point>{p}) ==
        doctest::Approx(4 * 0.75 / (1.5 * 1.5)));
}

TEST_CASE("heisenberg fields on rosen charts") {
  const Grid grid;
  for (double alpha : {-1.0, 0.0, 2.0, 0.5, -0.5}) {
    const auto chart = RosenChart::power(alpha);
    const auto fields = heis_killing_fields(*chart);
    for (const VectorField& f : fields) CHECK(killing_residual(*chart, f, grid) <= 1e-9);

    for (const Point& p : grid.points()) {
      const Vec3 dx_xi = lie_bracket(fields[1], fields[2], p);
      CHECK(dx_xi[kU] == doctest::Approx(0));
      CHECK(dx_xi[kV] == doctest::Approx(1));
      CHECK(dx_xi[kXc] == doctest::Approx(0));
      const Vec3 v_x = lie_bracket(fields[0], fields[1], p);
      const Vec3 v_xi = lie_bracket(fields[0], fields[2], p);
      for (int k = 0; k < 3; ++k) {
        CHECK(v_x[k] == 0);
        CHECK(v_xi[k] == 0);
      }
    }
  }

  const auto minus_one = RosenChart::power(-1);
  CHECK(minus_one->antiderivative(2) - minus_one->antiderivative(1) == doctest::Approx(7.0 / 3.0));
  const auto flat = RosenChart::power(0);
  CHECK(flat->antiderivative(3) - flat->antiderivative(1) == doctest::Approx(2));
  CHECK(heis_killing_fields(*flat)[2].value({2, 0, 1})[kV] == 1);

  const Point start{1.2, 0.3, -0.4};
  for (const double t : {0.3, -1.1}) {
    for (const double s : {0.7, 2.0}) {
      const Point composed = heis_flow(*minus_one, s, heis_flow(*minus_one, t, start));
      const Point direct = heis_flow(*minus_one, t + s, start);
      for (int k = 0; k < 3; ++k) CHECK(composed[k] == doctest::Approx(direct[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("rosen to brinkmann") {
  CHECK(rosen_to_brinkmann(-1).b() == 2);
  CHECK(rosen_to_brinkmann(0).b() == 0);
  CHECK(rosen_to_brinkmann(0.5).b() == -0.25);
  const Point p{1.3, -0.2, 0.8};
  const Point q = rosen_to_brinkmann(0).to_rosen(p);
  for (int k = 0; k < 3; ++k) CHECK(q[k] == p[k]);

  const Grid grid;
  for (double alpha : {-1.0, -0.5, 0.5, 2.0, 1.0, 0.25}) {
    const RosenBrinkmannMap map = rosen_to_brinkmann(alpha);
    CHECK(pullback_residual(map, grid) <= 1e-9);
    CHECK(roundtrip_residual(map, grid) <= 1e-12);

    // Jacobian against central differences of the point map.
    for (const Point& pt : grid.points()) {
      const Matrix3 j = map.jacobian(pt);
      for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) {
          auto component = [&](double s) {
            Point shifted = pt;
            shifted[c] = s;
            return map.to_rosen(shifted)[i];
          };
          CHECK(j[i][c] == doctest::Approx(oracle::derivative(component, pt[c], 1e-3, 2)).epsilon(1e-8));
        }
    }

    const auto h = general_rosen_to_brinkmann(power_rosen_profile(alpha));
    for (double u : {0.5, 1.0, 1.7}) CHECK(h(u) == doctest::Approx(map.b() / (u * u)).epsilon(1e-8));
  }

  const auto constant_delta = general_rosen_to_brinkmann(power_rosen_profile(0));
  CHECK(constant_delta(1.1) == 0);
  const auto quadratic = general_rosen_to_brinkmann(power_rosen_profile(1));
  CHECK(std::abs(quadratic(0.9)) <= 1e-12);
}

TEST_CASE("euler basis") {
  CHECK(euler_basis(2).branch == EulerBranch::DistinctReal);
  CHECK(euler_basis(-0.25).branch == EulerBranch::Repeated);
  CHECK(euler_basis(-0.5).branch == EulerBranch::Oscillatory);
  CHECK(euler_basis(-0.5).omega == doctest::Approx(0.5));
  CHECK(closed_form_x(2, 3, 0) == doctest::Approx(9));
  CHECK(closed_form_x(-0.25, 4, 0) == doctest::Approx(2));

  for (double b : {2.0, 1.0, 0.0, -0.25, -0.5, -3.0}) {
    const EulerBasis e = euler_basis(b);
    for (int k = 0; k < 2; ++k) {
      double worst = 0;
      for (double t = 0.1; t <= 10.0; t += 0.05) {
        const double fd2 = oracle::derivative([&](double s) { return e.derivative(k, s); }, t, 1e-3 * t, 2);
        const double fd1 = oracle::derivative([&](double s) { return e.value(k, s); }, t, 1e-3 * t, 2);
        worst = std::max(worst, std::abs(fd1 - e.derivative(k, t)) / (1 + std::abs(fd1)));
        worst = std::max(worst, std::abs(fd2 - e.second_derivative(k, t)) / (1 + std::abs(fd2)));
        const double residual = e.second_derivative(k, t) - b / (t * t) * e.value(k, t);
        CHECK(std::abs(residual) <= 1e-10 * (1 + std::abs(e.second_derivative(k, t))));
      }
      INFO("b = " << b << " k = " << k);
      CHECK(worst <= 1e-7);
    }
  }

  const EulerFit fit = fit_euler(-0.5, 1.0, 0.1, -0.3);
  CHECK(fit.x(1.0) == doctest::Approx(0.1));
  CHECK(fit.dx(1.0) == doctest::Approx(-0.3));
}
