#pragma once

// Solutions of the Euler equation f''(t) = (b / t^2) f(t), t > 0, which is
// the transverse geodesic equation on PowerLaw(b) when u = t, and the
// profile equation for transverse Killing fields.
namespace lorentz3 {

enum class EulerBranch { DistinctReal, Repeated, Oscillatory };

struct EulerBasis {
  double b = 0.0;
  EulerBranch branch = EulerBranch::DistinctReal;
  // Exponents r± = (1 ± sqrt(1 + 4b)) / 2 on the real branches.
  double r_plus = 0.0;
  double r_minus = 0.0;
  // sqrt(-(1 + 4b)) / 2 on the oscillatory branch.
  double omega = 0.0;

  // Basis element `k` (0 or 1) and its first two derivatives:
  //   distinct real: t^r+, t^r-
  //   repeated:      sqrt(t), sqrt(t) ln t
  //   oscillatory:   sqrt(t) cos(ω ln t), sqrt(t) sin(ω ln t)
  double value(int k, double t) const;
  double derivative(int k, double t) const;
  double second_derivative(int k, double t) const;
};

EulerBasis euler_basis(double b);

// Convenience wrappers; `selector` picks the basis element.
double closed_form_x(double b, double t, int selector);
double closed_form_dx(double b, double t, int selector);

// Basis combination c0 f0 + c1 f1 matching x(t0) = x0, x'(t0) = dx0.
struct EulerFit {
  EulerBasis basis;
  double c0 = 0.0;
  double c1 = 0.0;

  double x(double t) const { return c0 * basis.value(0, t) + c1 * basis.value(1, t); }
  double dx(double t) const { return c0 * basis.derivative(0, t) + c1 * basis.derivative(1, t); }
};

EulerFit fit_euler(double b, double t0, double x0, double dx0);

}  // namespace lorentz3
