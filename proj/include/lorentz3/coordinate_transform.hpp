#pragma once

#include <functional>

#include "lorentz3/charts.hpp"

namespace lorentz3 {

// Change of variables between Rosen(α), g = 2 du dv + u^{2α} dx², and
// Brinkmann PowerLaw(b), b = α² − α. Brinkmann points are (ū, v̄, x̄):
//   u = ū, v = v̄ + (α/2) ū^{-1} x̄², x = ū^{-α} x̄.
class RosenBrinkmannMap {
 public:
  explicit RosenBrinkmannMap(double alpha) : alpha_(alpha) {}

  double alpha() const noexcept { return alpha_; }
  double b() const noexcept { return alpha_ * alpha_ - alpha_; }

  Point to_rosen(const Point& brinkmann) const;
  Point to_brinkmann(const Point& rosen) const;
  // J[i][j] = ∂(rosen coordinate i) / ∂(brinkmann coordinate j).
  Matrix3 jacobian(const Point& brinkmann) const;

 private:
  double alpha_;
};

RosenBrinkmannMap rosen_to_brinkmann(double alpha);

// max over grid of |J^T g_Rosen(φ(p)) J − g_PowerLaw(b)(p)|, grid points
// in Brinkmann coordinates.
double pullback_residual(const RosenBrinkmannMap& map, const Grid& grid);
// max over grid of |to_rosen(to_brinkmann(q)) − q| for Rosen points q and
// the reverse composition on Brinkmann points.
double roundtrip_residual(const RosenBrinkmannMap& map, const Grid& grid);

// Brinkmann profile H(u) = (2 δ δ'' − δ'²) / (4 δ²) for a general Rosen
// profile.
std::function<double(double)> general_rosen_to_brinkmann(const RosenProfile& profile);

}  // namespace lorentz3
