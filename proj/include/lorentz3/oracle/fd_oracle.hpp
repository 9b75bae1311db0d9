#pragma once

#include <functional>

#include "lorentz3/tensor_types.hpp"

// Finite-difference ground truth for connection and curvature. Consumes only
// metric values g(p); shares no code with the analytic-jet path.
namespace lorentz3::oracle {

using MetricFn = std::function<Matrix3(const Point&)>;

// Central differences with Richardson extrapolation. Each nested derivative
// has its own base step and level count; `scale` multiplies every step
// (use the distance to a coordinate singularity near u -> 0).
struct Steps {
  double metric = 1e-2;
  int metric_levels = 3;
  double connection = 1e-2;
  int connection_levels = 3;
  double curvature = 1e-2;
  int curvature_levels = 3;
  double scale = 1.0;
};

Christoffel christoffels(const MetricFn& g, const Point& p, const Steps& steps = {});
// Lowered R_{abcd} with R(∂c,∂d)∂b = R^a_{bcd} ∂a, R_{abcd} = g_{ae} R^e_{bcd}.
Tensor4 riemann(const MetricFn& g, const Point& p, const Steps& steps = {});
// ∇_f R_{abcd}, f = u, v, x.
std::array<Tensor4, 3> nabla_riemann(const MetricFn& g, const Point& p, const Steps& steps = {});
double sectional_curvature(const MetricFn& g, const Point& p, const Vec3& e1, const Vec3& e2,
                           const Steps& steps = {});

// Central-difference Richardson derivative of a scalar function.
double derivative(const std::function<double(double)>& f, double x, double h, int levels);

}  // namespace lorentz3::oracle
