#include "lorentz3/metric_builder.hpp"

#include <stdexcept>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

Matrix4 multiply4(const Matrix4& a, const Matrix4& b) {
  Matrix4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      c[i][j] = 0;
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool parallel(const Vector4& a, const Vector4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

// Solves m x = rhs for invertible 4x4 m.
Vector4 solve4(Matrix4 m, Vector4 rhs) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && m[pivot][col] == 0) ++pivot;
    if (pivot == 4) throw std::logic_error("singular basis for g");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  Vector4 x;
  for (int i = 0; i < 4; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

Rational quotient_cross(const Derivation& a, const IsotropyChoice& w) {
  const RationalVector3 aw = a.apply(w.heis());
  return w.x() * aw[kY] - w.y() * aw[kX];
}

int sign_changes(const std::array<Rational, 4>& coeffs) {
  int changes = 0, last = 0;
  for (const auto& c : coeffs) {
    const int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::string Signature::str() const {
  return std::string(positive, '+') + std::string(negative, '-') + std::string(zero, '0');
}

int isotropy_nilpotency_order(const Derivation& a, const IsotropyChoice& w) {
  const ExtensionAlgebra alg = extend_algebra(a);
  const Vector4 w4 = embed(w.heis());
  const Matrix4 ad = alg.ad(w4);
  Matrix4 power = ad;
  for (int order = 1; order <= 4; ++order) {
    bool inside = true;
    for (int j = 0; j < 4 && inside; ++j) {
      const Vector4 col{power[0][j], power[1][j], power[2][j], power[3][j]};
      inside = parallel(col, w4);
    }
    if (inside) return order;
    power = multiply4(power, ad);
  }
  return 0;  // not nilpotent on the quotient
}

bool is_quotient_eigenvector(const Derivation& a, const IsotropyChoice& w) {
  return quotient_cross(a, w) == 0;
}

bool admits_metric(const Derivation& a, const IsotropyChoice& w) {
  const bool by_order = isotropy_nilpotency_order(a, w) == 3;
  const bool by_eigen = !is_quotient_eigenvector(a, w);
  if (by_order != by_eigen) {
    throw std::logic_error("nilpotency order and eigenvector criteria disagree");
  }
  return by_order;
}

RationalMatrix3 ad_w_on_complement(const Derivation& a, const IsotropyChoice& w,
                                   const RationalVector3& y_prime) {
  const ExtensionAlgebra alg = extend_algebra(a);
  const Vector4 w4 = embed(w.heis());
  const std::array<Vector4, 4> basis{basis_vector(kT), embed(y_prime), basis_vector(kZ), w4};
  Matrix4 coords;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) coords[i][j] = basis[j][i];
  RationalMatrix3 n = zero3();
  for (int j = 0; j < 3; ++j) {
    const Vector4 image = solve4(coords, alg.bracket(w4, basis[j]));
    for (int i = 0; i < 3; ++i) n[i][j] = image[i];
  }
  return n;
}

InvariantMetric build_invariant_metric(const Derivation& a, const IsotropyChoice& w,
                                       const Rational& scale_alpha) {
  if (!admits_metric(a, w)) {
    throw NoInvariantMetric("W̄ is an eigenvector of the quotient action; ad_W has order < 3");
  }
  if (scale_alpha <= 0) throw std::invalid_argument("scale_alpha must be positive");
  InvariantMetric m;
  m.y_prime = a.apply(w.heis());
  m.k = quotient_cross(a, w);
  m.scale_alpha = scale_alpha;
  m.ad_w = ad_w_on_complement(a, w, m.y_prime);
  m.gram = zero3();
  m.gram[1][1] = scale_alpha;
  m.gram[0][2] = m.gram[2][0] = scale_alpha / m.k;
  return m;
}

Rational skew_residual(const RationalMatrix3& gram, const RationalMatrix3& ad_w) {
  const RationalMatrix3 lhs = add(multiply(transpose(ad_w), gram), multiply(gram, ad_w));
  return max_abs(lhs);
}

Signature signature(const RationalMatrix3& g) {
  // Characteristic polynomial l^3 - c2 l^2 + c1 l - c0 has only real roots,
  // so Descartes' rule counts them exactly.
  const Rational c2 = g[0][0] + g[1][1] + g[2][2];
  const Rational c1 = g[0][0] * g[1][1] - g[0][1] * g[1][0] + g[0][0] * g[2][2] -
                      g[0][2] * g[2][0] + g[1][1] * g[2][2] - g[1][2] * g[2][1];
  const Rational c0 = determinant(g);
  Signature s;
  s.zero = c0 != 0 ? 0 : (c1 != 0 ? 1 : (c2 != 0 ? 2 : 3));
  s.positive = sign_changes({Rational(1), -c2, c1, -c0});
  s.negative = sign_changes({Rational(-1), -c2, -c1, -c0});
  return s;
}

bool has_transverse_subalgebra(const Derivation& a) {
  const QuotientSpectrum s = spectrum_on_quotient(a);
  if (s.scalar) throw NoInvariantMetric("no isotropy choice admits an invariant metric");
  return s.type != SpectrumType::Complex;
}

IsotropyChoice default_isotropy(const Derivation& a) {
  for (const auto& [x, y] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    IsotropyChoice w(0, x, y);
    if (admits_metric(a, w)) return w;
  }
  throw NoInvariantMetric("quotient action is a homothety; no isotropy choice admits a metric");
}

}  // namespace lorentz3
