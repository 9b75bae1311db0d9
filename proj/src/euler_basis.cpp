#include "lorentz3/euler_basis.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

// Derivative `order` of t^r for complex r, split into (real, imag).
std::complex<double> complex_power_derivative(std::complex<double> r, double t, int order) {
  std::complex<double> coeff = 1.0;
  for (int i = 0; i < order; ++i) coeff *= r - static_cast<double>(i);
  return coeff * std::exp((r - static_cast<double>(order)) * std::log(t));
}

double evaluate(const EulerBasis& e, int k, double t, int order) {
  if (!(t > 0.0)) throw DomainError("Euler basis needs t > 0");
  if (k != 0 && k != 1) throw std::invalid_argument("basis selector must be 0 or 1");
  switch (e.branch) {
    case EulerBranch::DistinctReal: {
      const double r = k == 0 ? e.r_plus : e.r_minus;
      double coeff = 1.0;
      for (int i = 0; i < order; ++i) coeff *= r - i;
      return coeff * std::pow(t, r - order);
    }
    case EulerBranch::Repeated: {
      const double s = std::sqrt(t);
      const double l = std::log(t);
      if (k == 0) {
        if (order == 0) return s;
        if (order == 1) return 0.5 / s;
        return -0.25 / (s * t);
      }
      if (order == 0) return s * l;
      if (order == 1) return (0.5 * l + 1.0) / s;
      return -0.25 * l / (s * t);
    }
    case EulerBranch::Oscillatory: {
      const auto z = complex_power_derivative({0.5, e.omega}, t, order);
      return k == 0 ? z.real() : z.imag();
    }
  }
  return 0.0;
}

}  // namespace

double EulerBasis::value(int k, double t) const { return evaluate(*this, k, t, 0); }
double EulerBasis::derivative(int k, double t) const { return evaluate(*this, k, t, 1); }
double EulerBasis::second_derivative(int k, double t) const { return evaluate(*this, k, t, 2); }

EulerBasis euler_basis(double b) {
  EulerBasis e;
  e.b = b;
  const double disc = 1.0 + 4.0 * b;
  if (disc > 0.0) {
    e.branch = EulerBranch::DistinctReal;
    e.r_plus = 0.5 * (1.0 + std::sqrt(disc));
    e.r_minus = 0.5 * (1.0 - std::sqrt(disc));
  } else if (disc == 0.0) {
    e.branch = EulerBranch::Repeated;
    e.r_plus = e.r_minus = 0.5;
  } else {
    e.branch = EulerBranch::Oscillatory;
    e.omega = 0.5 * std::sqrt(-disc);
  }
  return e;
}

double closed_form_x(double b, double t, int selector) { return euler_basis(b).value(selector, t); }

double closed_form_dx(double b, double t, int selector) {
  return euler_basis(b).derivative(selector, t);
}

EulerFit fit_euler(double b, double t0, double x0, double dx0) {
  EulerFit fit;
  fit.basis = euler_basis(b);
  const double f0 = fit.basis.value(0, t0), f1 = fit.basis.value(1, t0);
  const double g0 = fit.basis.derivative(0, t0), g1 = fit.basis.derivative(1, t0);
  const double w = f0 * g1 - f1 * g0;
  fit.c0 = (x0 * g1 - f1 * dx0) / w;
  fit.c1 = (f0 * dx0 - g0 * x0) / w;
  return fit;
}

}  // namespace lorentz3
