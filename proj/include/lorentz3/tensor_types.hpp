#pragma once

#include <array>

namespace lorentz3 {

// Coordinate order on every chart.
enum Coord : int { kU = 0, kV = 1, kXc = 2 };

using Point = std::array<double, 3>;
using Vec3 = std::array<double, 3>;
using Matrix3 = std::array<std::array<double, 3>, 3>;
// gamma[k][i][j] = Γ^k_{ij}
using Christoffel = std::array<Matrix3, 3>;
// Fully covariant R_{abcd} or mixed R^a_{bcd}, index order as written.
using Tensor4 = std::array<std::array<Matrix3, 3>, 3>;

inline Matrix3 zero_matrix() { return Matrix3{}; }
inline Christoffel zero_christoffel() { return Christoffel{}; }
inline Tensor4 zero_tensor4() { return Tensor4{}; }

}  // namespace lorentz3
