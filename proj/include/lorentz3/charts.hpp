#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lorentz3/tensor_types.hpp"

namespace lorentz3 {

// Metric components and their partial derivatives up to third order.
// d1[a][i][j] = ∂_a g_ij, d2[a][b][i][j] = ∂_a ∂_b g_ij, and so on.
struct MetricJet {
  Matrix3 g{};
  std::array<Matrix3, 3> d1{};
  std::array<std::array<Matrix3, 3>, 3> d2{};
  std::array<std::array<std::array<Matrix3, 3>, 3>, 3> d3{};
};

// Coordinate realization of a plane wave in (u, v, x). The metric never
// depends on v, Christoffels never involve v̇, and the transverse parts of the
// geodesic equations are homogeneous in (x, ẋ); the geodesic integrator
// relies on this.
class Chart {
 public:
  virtual ~Chart() = default;

  virtual std::string descriptor() const = 0;
  virtual bool in_domain(const Point& p) const = 0;
  // Open lower bound of the domain in u; -infinity when unbounded.
  virtual double u_lower() const = 0;
  // Throws DomainError outside the domain.
  virtual MetricJet jet(const Point& p, int order) const = 0;

  Matrix3 metric(const Point& p) const { return jet(p, 0).g; }
  void require_domain(const Point& p) const;
};

using ChartPtr = std::shared_ptr<const Chart>;

// g = 2 du dv + H(u) x^2 du^2 + dx^2.
class PlaneWaveChart final : public Chart {
 public:
  enum class Profile { PowerLaw, Constant };

  static std::shared_ptr<PlaneWaveChart> power_law(double b);
  static std::shared_ptr<PlaneWaveChart> constant(double h);

  Profile profile() const noexcept { return profile_; }
  double parameter() const noexcept { return parameter_; }

  // H and its first three derivatives at u.
  std::array<double, 4> profile_derivatives(double u) const;
  double h(double u) const { return profile_derivatives(u)[0]; }

  std::string descriptor() const override;
  bool in_domain(const Point& p) const override;
  double u_lower() const override;
  MetricJet jet(const Point& p, int order) const override;

 private:
  PlaneWaveChart(Profile profile, double parameter) : profile_(profile), parameter_(parameter) {}

  Profile profile_;
  double parameter_;
};

// δ(u) with derivatives up to third order and an antiderivative F of 1/δ.
struct RosenProfile {
  std::function<std::array<double, 4>(double)> derivatives;
  std::function<double(double)> inverse_antiderivative;
  // Open lower bound of the domain in u (-infinity for all of R).
  double u_lower = 0.0;
  std::string name;
};

RosenProfile power_rosen_profile(double alpha);

// g = 2 du dv + δ(u) dx^2.
class RosenChart final : public Chart {
 public:
  static std::shared_ptr<RosenChart> power(double alpha);
  static std::shared_ptr<RosenChart> general(RosenProfile profile);

  const RosenProfile& profile() const noexcept { return profile_; }
  // NaN for a general profile.
  double alpha() const noexcept { return alpha_; }

  double delta(double u) const { return profile_.derivatives(u)[0]; }
  double antiderivative(double u) const { return profile_.inverse_antiderivative(u); }

  std::string descriptor() const override;
  bool in_domain(const Point& p) const override;
  double u_lower() const override { return profile_.u_lower; }
  MetricJet jet(const Point& p, int order) const override;

 private:
  RosenChart(RosenProfile profile, double alpha) : profile_(std::move(profile)), alpha_(alpha) {}

  RosenProfile profile_;
  double alpha_;
};

// Rectilinear sample grid; n == 1 uses the lower bound only.
struct Grid {
  std::array<int, 3> n{5, 5, 5};
  std::array<double, 3> lo{0.5, -1.0, -1.0};
  std::array<double, 3> hi{2.0, 1.0, 1.0};

  std::vector<Point> points() const;
};

}  // namespace lorentz3
