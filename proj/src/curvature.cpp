#include "lorentz3/curvature.hpp"

#include <cmath>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

Matrix3 mul(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix3 mul(const Matrix3& a, const Matrix3& b, const Matrix3& c) { return mul(mul(a, b), c); }

// Christoffel symbols of the first kind Γ_{lij} from first derivatives
// of g (or their derivatives, when fed higher jet slices).
Christoffel first_kind(const std::array<Matrix3, 3>& dg) {
  Christoffel out{};
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[l][i][j] = 0.5 * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
  return out;
}

Christoffel raise(const Matrix3& ginv, const Christoffel& lower) {
  Christoffel out{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[k][i][j] += ginv[k][l] * lower[l][i][j];
  return out;
}

void accumulate(Christoffel& acc, const Christoffel& add) {
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc[k][i][j] += add[k][i][j];
}

// R^a_{bcd} from Γ and ∂Γ.
Tensor4 mixed_riemann(const Christoffel& g, const std::array<Christoffel, 3>& dg) {
  Tensor4 r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double v = dg[c][a][d][b] - dg[d][a][c][b];
          for (int e = 0; e < 3; ++e) v += g[a][c][e] * g[e][d][b] - g[a][d][e] * g[e][c][b];
          r[a][b][c][d] = v;
        }
  return r;
}

// ∂_f R^a_{bcd}.
Tensor4 mixed_riemann_derivative(const ConnectionJet& cj, int f) {
  const auto& g = cj.gamma;
  const auto& d = cj.d1;
  Tensor4 r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int dd = 0; dd < 3; ++dd) {
          double v = cj.d2[f][c][a][dd][b] - cj.d2[f][dd][a][c][b];
          for (int e = 0; e < 3; ++e) {
            v += d[f][a][c][e] * g[e][dd][b] + g[a][c][e] * d[f][e][dd][b];
            v -= d[f][a][dd][e] * g[e][c][b] + g[a][dd][e] * d[f][e][c][b];
          }
          r[a][b][c][dd] = v;
        }
  return r;
}

Tensor4 lower_first(const Matrix3& g, const Tensor4& mixed) {
  Tensor4 r{};
  for (int a = 0; a < 3; ++a)
    for (int e = 0; e < 3; ++e) {
      if (g[a][e] == 0.0) continue;
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) r[a][b][c][d] += g[a][e] * mixed[e][b][c][d];
    }
  return r;
}

}  // namespace

Matrix3 inverse_metric(const Matrix3& g) {
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (det == 0.0 || !std::isfinite(det)) throw DomainError("metric is degenerate");
  Matrix3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0]) / det;
    }
  return inv;
}

ConnectionJet connection_jet(const MetricJet& jet, int order) {
  const Matrix3 ginv = inverse_metric(jet.g);
  ConnectionJet cj;
  const Christoffel lower = first_kind(jet.d1);
  cj.gamma = raise(ginv, lower);
  if (order < 1) return cj;

  std::array<Matrix3, 3> dginv{};
  std::array<Christoffel, 3> dlower{};
  for (int m = 0; m < 3; ++m) {
    const Matrix3 t = mul(ginv, jet.d1[m], ginv);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dginv[m][i][j] = -t[i][j];
    dlower[m] = first_kind(jet.d2[m]);
    cj.d1[m] = raise(dginv[m], lower);
    accumulate(cj.d1[m], raise(ginv, dlower[m]));
  }
  if (order < 2) return cj;

  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) {
      const Matrix3 a = mul(mul(ginv, jet.d1[n], ginv), jet.d1[m], ginv);
      const Matrix3 b = mul(mul(ginv, jet.d1[m], ginv), jet.d1[n], ginv);
      const Matrix3 c = mul(ginv, jet.d2[n][m], ginv);
      Matrix3 d2ginv{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d2ginv[i][j] = a[i][j] + b[i][j] - c[i][j];
      Christoffel acc = raise(d2ginv, lower);
      accumulate(acc, raise(dginv[m], dlower[n]));
      accumulate(acc, raise(dginv[n], dlower[m]));
      accumulate(acc, raise(ginv, first_kind(jet.d3[n][m])));
      cj.d2[n][m] = acc;
    }
  return cj;
}

Christoffel christoffels(const Chart& chart, const Point& p) {
  return connection_jet(chart.jet(p, 1), 0).gamma;
}

Tensor4 riemann_tensor(const Chart& chart, const Point& p) {
  const MetricJet jet = chart.jet(p, 2);
  const ConnectionJet cj = connection_jet(jet, 1);
  return lower_first(jet.g, mixed_riemann(cj.gamma, cj.d1));
}

Matrix3 ricci(const Chart& chart, const Point& p) {
  const ConnectionJet cj = connection_jet(chart.jet(p, 2), 1);
  const Tensor4 mixed = mixed_riemann(cj.gamma, cj.d1);
  Matrix3 ric{};
  for (int b = 0; b < 3; ++b)
    for (int d = 0; d < 3; ++d)
      for (int a = 0; a < 3; ++a) ric[b][d] += mixed[a][b][a][d];
  return ric;
}

double scalar_curvature(const Chart& chart, const Point& p) {
  const Matrix3 ginv = inverse_metric(chart.metric(p));
  const Matrix3 ric = ricci(chart, p);
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += ginv[i][j] * ric[i][j];
  return s;
}

std::array<Tensor4, 3> nabla_riemann(const Chart& chart, const Point& p) {
  const MetricJet jet = chart.jet(p, 3);
  const ConnectionJet cj = connection_jet(jet, 2);
  const Tensor4 mixed = mixed_riemann(cj.gamma, cj.d1);
  const Tensor4 r = lower_first(jet.g, mixed);
  const auto& gm = cj.gamma;
  std::array<Tensor4, 3> out{};
  for (int f = 0; f < 3; ++f) {
    const Tensor4 dmixed = mixed_riemann_derivative(cj, f);
    Tensor4 dr = lower_first(jet.g, dmixed);
    const Tensor4 dg_part = lower_first(jet.d1[f], mixed);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            double v = dr[a][b][c][d] + dg_part[a][b][c][d];
            for (int e = 0; e < 3; ++e) {
              v -= gm[e][f][a] * r[e][b][c][d] + gm[e][f][b] * r[a][e][c][d] +
                   gm[e][f][c] * r[a][b][e][d] + gm[e][f][d] * r[a][b][c][e];
            }
            out[f][a][b][c][d] = v;
          }
  }
  return out;
}

double covariant_R_derivative(const Chart& chart, const Point& p, const Vec3& direction) {
  const auto nabla = nabla_riemann(chart, p);
  Tensor4 t{};
  for (int f = 0; f < 3; ++f) {
    if (direction[f] == 0.0) continue;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) t[a][b][c][d] += direction[f] * nabla[f][a][b][c][d];
  }
  return frobenius(t);
}

CurvatureReport curvature_report(const Chart& chart, const Point& p) {
  CurvatureReport rep;
  rep.point = p;
  rep.riemann = riemann_tensor(chart, p);
  rep.ricci = ricci(chart, p);
  rep.scalar = scalar_curvature(chart, p);
  const auto nabla = nabla_riemann(chart, p);
  for (int f = 0; f < 3; ++f) rep.nabla_R_norms[f] = frobenius(nabla[f]);
  rep.max_abs_riemann = max_abs(rep.riemann);
  rep.symmetry_residual = riemann_symmetry_residual(rep.riemann);
  return rep;
}

double riemann_symmetry_residual(const Tensor4& r) {
  double worst = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const double x = r[a][b][c][d];
          worst = std::max({worst, std::abs(x + r[b][a][c][d]), std::abs(x + r[a][b][d][c]),
                            std::abs(x - r[c][d][a][b]),
                            std::abs(x + r[a][c][d][b] + r[a][d][b][c])});
        }
  return worst;
}

double max_abs(const Tensor4& r) {
  double m = 0.0;
  for (const auto& a : r)
    for (const auto& b : a)
      for (const auto& c : b)
        for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

double frobenius(const Tensor4& r) {
  double s = 0.0;
  for (const auto& a : r)
    for (const auto& b : a)
      for (const auto& c : b)
        for (double x : c) s += x * x;
  return std::sqrt(s);
}

double max_abs_riemann(const Chart& chart, const Grid& grid) {
  double m = 0.0;
  for (const auto& p : grid.points()) m = std::max(m, max_abs(riemann_tensor(chart, p)));
  return m;
}

bool is_flat(const Chart& chart, const Grid& grid, double tol) {
  return max_abs_riemann(chart, grid) < tol;
}

double sectional_curvature(const Chart& chart, const Point& p, const Vec3& e1, const Vec3& e2) {
  const Matrix3 g = chart.metric(p);
  auto dot = [&](const Vec3& a, const Vec3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
    return s;
  };
  const double denom = dot(e1, e1) * dot(e2, e2) - dot(e1, e2) * dot(e1, e2);
  if (std::abs(denom) < kDegeneratePlaneThreshold) {
    throw DegeneratePlane("plane is degenerate for the metric (g11 g22 - g12^2 ~ 0)");
  }
  const Tensor4 r = riemann_tensor(chart, p);
  double num = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) num += r[a][b][c][d] * e1[a] * e2[b] * e1[c] * e2[d];
  return num / denom;
}

}  // namespace lorentz3
