#pragma once

#include "lorentz3/charts.hpp"

// Levi-Civita connection and curvature computed from the chart's analytic
// metric jet.
//
// Convention: R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z,
// R(∂c,∂d)∂b = R^a_{bcd} ∂a, R_{abcd} = g_{ae} R^e_{bcd}.
// With this placement a Brinkmann chart has R_{uxux} = −H(u).
namespace lorentz3 {

struct ConnectionJet {
  Christoffel gamma{};
  // d1[m] = ∂_m Γ, d2[n][m] = ∂_n ∂_m Γ.
  std::array<Christoffel, 3> d1{};
  std::array<std::array<Christoffel, 3>, 3> d2{};
};

// `order` is the number of derivatives of Γ wanted (0, 1 or 2); needs a
// metric jet of order + 1.
ConnectionJet connection_jet(const MetricJet& jet, int order);

Christoffel christoffels(const Chart& chart, const Point& p);
// Lowered R_{abcd}.
Tensor4 riemann_tensor(const Chart& chart, const Point& p);
Matrix3 ricci(const Chart& chart, const Point& p);
double scalar_curvature(const Chart& chart, const Point& p);
// ∇_f R_{abcd} for f = u, v, x.
std::array<Tensor4, 3> nabla_riemann(const Chart& chart, const Point& p);

// Frobenius norm of ∇_direction R.
double covariant_R_derivative(const Chart& chart, const Point& p, const Vec3& direction);

struct CurvatureReport {
  Point point{};
  Tensor4 riemann{};
  Matrix3 ricci{};
  double scalar = 0.0;
  // ‖∇_∂u R‖, ‖∇_∂v R‖, ‖∇_∂x R‖.
  std::array<double, 3> nabla_R_norms{};
  double max_abs_riemann = 0.0;
  double symmetry_residual = 0.0;
};

CurvatureReport curvature_report(const Chart& chart, const Point& p);

// Largest violation of R_abcd = −R_bacd = −R_abdc = R_cdab and the first
// Bianchi identity.
double riemann_symmetry_residual(const Tensor4& r);
double max_abs(const Tensor4& r);
double frobenius(const Tensor4& r);

double max_abs_riemann(const Chart& chart, const Grid& grid);
bool is_flat(const Chart& chart, const Grid& grid, double tol);

inline constexpr double kDegeneratePlaneThreshold = 1e-12;

// K = R(e1,e2,e1,e2) / (g11 g22 − g12²). Throws DegeneratePlane when the
// denominator is below kDegeneratePlaneThreshold in magnitude.
double sectional_curvature(const Chart& chart, const Point& p, const Vec3& e1, const Vec3& e2);

// Raised inverse of a 3x3 metric; throws DomainError if singular.
Matrix3 inverse_metric(const Matrix3& g);

}  // namespace lorentz3
