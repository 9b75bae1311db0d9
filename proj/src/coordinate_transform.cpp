#include "lorentz3/coordinate_transform.hpp"

#include <cmath>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

Point RosenBrinkmannMap::to_rosen(const Point& q) const {
  if (!(q[kU] > 0.0)) throw DomainError("Rosen/Brinkmann map needs u > 0");
  const double u = q[kU];
  return {u, q[kV] + 0.5 * alpha_ * q[kXc] * q[kXc] / u, std::pow(u, -alpha_) * q[kXc]};
}

Point RosenBrinkmannMap::to_brinkmann(const Point& r) const {
  if (!(r[kU] > 0.0)) throw DomainError("Rosen/Brinkmann map needs u > 0");
  const double u = r[kU];
  return {u, r[kV] - 0.5 * alpha_ * std::pow(u, 2.0 * alpha_ - 1.0) * r[kXc] * r[kXc],
          std::pow(u, alpha_) * r[kXc]};
}

Matrix3 RosenBrinkmannMap::jacobian(const Point& q) const {
  if (!(q[kU] > 0.0)) throw DomainError("Rosen/Brinkmann map needs u > 0");
  const double u = q[kU], x = q[kXc], a = alpha_;
  Matrix3 j{};
  j[kU][kU] = 1.0;
  j[kV][kU] = -0.5 * a * x * x / (u * u);
  j[kV][kV] = 1.0;
  j[kV][kXc] = a * x / u;
  j[kXc][kU] = -a * std::pow(u, -a - 1.0) * x;
  j[kXc][kXc] = std::pow(u, -a);
  return j;
}

RosenBrinkmannMap rosen_to_brinkmann(double alpha) { return RosenBrinkmannMap(alpha); }

double pullback_residual(const RosenBrinkmannMap& map, const Grid& grid) {
  const auto rosen = RosenChart::power(map.alpha());
  const auto brinkmann = PlaneWaveChart::power_law(map.b());
  double worst = 0.0;
  for (const auto& p : grid.points()) {
    const Matrix3 j = map.jacobian(p);
    const Matrix3 gr = rosen->metric(map.to_rosen(p));
    const Matrix3 gb = brinkmann->metric(p);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) s += j[k][a] * gr[k][l] * j[l][b];
        worst = std::max(worst, std::abs(s - gb[a][b]));
      }
  }
  return worst;
}

double roundtrip_residual(const RosenBrinkmannMap& map, const Grid& grid) {
  double worst = 0.0;
  for (const auto& p : grid.points()) {
    const Point a = map.to_rosen(map.to_brinkmann(p));
    const Point b = map.to_brinkmann(map.to_rosen(p));
    for (int i = 0; i < 3; ++i) {
      worst = std::max({worst, std::abs(a[i] - p[i]), std::abs(b[i] - p[i])});
    }
  }
  return worst;
}

std::function<double(double)> general_rosen_to_brinkmann(const RosenProfile& profile) {
  return [profile](double u) {
    const auto d = profile.derivatives(u);
    if (!(d[0] > 0.0)) throw DomainError("Rosen profile must be positive");
    return (2.0 * d[0] * d[2] - d[1] * d[1]) / (4.0 * d[0] * d[0]);
  };
}

}  // namespace lorentz3
