#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lorentz3/charts.hpp"

namespace lorentz3 {

// Coordinate vector field ξ^k together with its Jacobian
// jacobian(p)[k][i] = ∂_i ξ^k.
struct VectorField {
  std::string name;
  std::function<Vec3(const Point&)> value;
  std::function<Matrix3(const Point&)> jacobian;
};

// (L_ξ g)_ij = ξ^k ∂_k g_ij + g_kj ∂_i ξ^k + g_ik ∂_j ξ^k at one point.
Matrix3 lie_derivative_of_metric(const Chart& chart, const VectorField& field, const Point& p);

// max |(L_ξ g)_ij| over the grid points.
double killing_residual(const Chart& chart, const VectorField& field, const Grid& grid);
double killing_residual(const Chart& chart, const VectorField& field, const std::vector<Point>& points);

// [a, b]^k = a^i ∂_i b^k − b^i ∂_i a^k.
Vec3 lie_bracket(const VectorField& a, const VectorField& b, const Point& p);

VectorField translation_v();
VectorField translation_x();
VectorField translation_u();
// u ∂u − v ∂v.
VectorField boost_field();

// ∂v, ∂x and ξ = x ∂v − F_δ(u) ∂x; [∂x, ξ] = ∂v, ∂v central.
std::array<VectorField, 3> heis_killing_fields(const RosenChart& chart);

// Flow of ξ = x ∂v − F_δ(u) ∂x for parameter t.
Point heis_flow(const RosenChart& chart, double t, const Point& p);

// f ∂x − f'(u) x ∂v for the two solutions of f'' = H f.
std::array<VectorField, 2> brinkmann_transverse_fields(const PlaneWaveChart& chart);

}  // namespace lorentz3
