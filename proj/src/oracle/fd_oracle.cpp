#include "lorentz3/oracle/fd_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace lorentz3::oracle {

namespace {

template <typename T>
void axpy(T& y, double a, const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    y += a * x;
  } else {
    for (std::size_t i = 0; i < y.size(); ++i) axpy(y[i], a, x[i]);
  }
}

template <typename T>
T scaled(const T& x, double a) {
  T out{};
  axpy(out, a, x);
  return out;
}

// d/dt f(t) at t = 0 for tensor-valued f, Richardson on central differences
// with steps h, h/2, ..., h/2^levels.
template <typename T, typename F>
T richardson(F f, double h, int levels) {
  std::vector<T> table;
  for (int k = 0; k <= levels; ++k) {
    const double hk = h / std::pow(2.0, k);
    T d = f(hk);
    axpy(d, -1.0, f(-hk));
    table.push_back(scaled(d, 0.5 / hk));
  }
  for (int j = 1; j <= levels; ++j) {
    const double w = std::pow(4.0, j);
    for (int k = 0; k + j <= levels; ++k) {
      T next = scaled(table[k + 1], w / (w - 1.0));
      axpy(next, -1.0 / (w - 1.0), table[k]);
      table[k] = next;
    }
  }
  return table[0];
}

Point shifted(const Point& p, int axis, double h) {
  Point q = p;
  q[axis] += h;
  return q;
}

Matrix3 invert(const Matrix3& g) {
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (det == 0.0) throw std::domain_error("degenerate metric in oracle");
  Matrix3 inv{};
  inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  return inv;
}

std::array<Christoffel, 3> christoffel_derivatives(const MetricFn& g, const Point& p, const Steps& s) {
  std::array<Christoffel, 3> out{};
  for (int m = 0; m < 3; ++m) {
    out[m] = richardson<Christoffel>(
        [&](double h) { return christoffels(g, shifted(p, m, h), s); }, s.connection * s.scale,
        s.connection_levels);
  }
  return out;
}

}  // namespace

double derivative(const std::function<double(double)>& f, double x, double h, int levels) {
  return richardson<double>([&](double d) { return f(x + d); }, h, levels);
}

Christoffel christoffels(const MetricFn& g, const Point& p, const Steps& s) {
  std::array<Matrix3, 3> dg{};
  for (int a = 0; a < 3; ++a) {
    dg[a] = richardson<Matrix3>([&](double h) { return g(shifted(p, a, h)); }, s.metric * s.scale,
                                s.metric_levels);
  }
  const Matrix3 inv = invert(g(p));
  Christoffel out{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = 0.0;
        for (int l = 0; l < 3; ++l) v += 0.5 * inv[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
        out[k][i][j] = v;
      }
  return out;
}

Tensor4 riemann(const MetricFn& g, const Point& p, const Steps& s) {
  const Christoffel gam = christoffels(g, p, s);
  const auto dgam = christoffel_derivatives(g, p, s);
  const Matrix3 gp = g(p);
  Tensor4 mixed{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double v = dgam[c][a][d][b] - dgam[d][a][c][b];
          for (int e = 0; e < 3; ++e) v += gam[a][c][e] * gam[e][d][b] - gam[a][d][e] * gam[e][c][b];
          mixed[a][b][c][d] = v;
        }
  Tensor4 out{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) out[a][b][c][d] += gp[a][e] * mixed[e][b][c][d];
  return out;
}

std::array<Tensor4, 3> nabla_riemann(const MetricFn& g, const Point& p, const Steps& s) {
  const Tensor4 r = riemann(g, p, s);
  const Christoffel gam = christoffels(g, p, s);
  std::array<Tensor4, 3> out{};
  for (int f = 0; f < 3; ++f) {
    const Tensor4 dr = richardson<Tensor4>([&](double h) { return riemann(g, shifted(p, f, h), s); },
                                           s.curvature * s.scale, s.curvature_levels);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            double v = dr[a][b][c][d];
            for (int e = 0; e < 3; ++e) {
              v -= gam[e][f][a] * r[e][b][c][d] + gam[e][f][b] * r[a][e][c][d] +
                   gam[e][f][c] * r[a][b][e][d] + gam[e][f][d] * r[a][b][c][e];
            }
            out[f][a][b][c][d] = v;
          }
  }
  return out;
}

double sectional_curvature(const MetricFn& g, const Point& p, const Vec3& e1, const Vec3& e2,
                           const Steps& s) {
  const Matrix3 gp = g(p);
  auto dot = [&](const Vec3& a, const Vec3& b) {
    double v = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v += gp[i][j] * a[i] * b[j];
    return v;
  };
  const Tensor4 r = riemann(g, p, s);
  double num = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) num += r[a][b][c][d] * e1[a] * e2[b] * e1[c] * e2[d];
  return num / (dot(e1, e1) * dot(e2, e2) - dot(e1, e2) * dot(e1, e2));
}

}  // namespace lorentz3::oracle
