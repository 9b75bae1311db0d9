#include "lorentz3/lie_core.hpp"

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

Rational det2(const RationalMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

bool is_derivation(const RationalMatrix3& m) {
  return m[kZ][kZ] == m[kX][kX] + m[kY][kY] && m[kX][kZ] == 0 && m[kY][kZ] == 0;
}

Derivation::Derivation(const RationalMatrix3& m) : m_(m) {
  if (!is_derivation(m)) {
    throw NotADerivation(
        "matrix is not a derivation of heis: need column Z = (A_XX + A_YY, 0, 0)");
  }
}

RationalMatrix2 Derivation::quotient_block() const {
  return {{{m_[kX][kX], m_[kX][kY]}, {m_[kY][kX], m_[kY][kY]}}};
}

Derivation canonical_derivation(const Rational& b) {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = 1;
  m[kX][kY] = 1;
  m[kY][kX] = b;
  m[kY][kY] = 1;
  return Derivation(m);
}

IsotropyChoice::IsotropyChoice(Rational z, Rational x, Rational y)
    : w_{std::move(z), std::move(x), std::move(y)} {
  if (w_[kX] == 0 && w_[kY] == 0) {
    throw CentralIsotropy("isotropy generator lies in the center span(Z)");
  }
}

Vector4 ExtensionAlgebra::bracket(const Vector4& a, const Vector4& b) const {
  Vector4 out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (int k = 0; k < 4; ++k) {
        if (c_[i][j][k] != 0) out[k] += ab * c_[i][j][k];
      }
    }
  }
  return out;
}

std::array<std::array<Rational, 4>, 4> ExtensionAlgebra::ad(const Vector4& a) const {
  std::array<std::array<Rational, 4>, 4> m;
  for (int j = 0; j < 4; ++j) {
    const Vector4 col = bracket(a, basis_vector(j));
    for (int i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  return m;
}

Vector4 embed(const RationalVector3& v) { return {v[0], v[1], v[2], Rational(0)}; }

Vector4 basis_vector(int index) {
  Vector4 e{0, 0, 0, 0};
  e[index] = 1;
  return e;
}

ExtensionAlgebra extend_algebra(const Derivation& a) {
  StructureConstants c;
  for (auto& plane : c)
    for (auto& row : plane) row.fill(Rational(0));
  c[kX][kY][kZ] = 1;
  c[kY][kX][kZ] = -1;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      c[kT][j][k] = a(k, j);
      c[j][kT][k] = -a(k, j);
    }
  }
  return ExtensionAlgebra(c);
}

Rational jacobi_residual(const ExtensionAlgebra& alg) {
  Rational worst = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        const Vector4 ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        const Vector4 s1 = alg.bracket(alg.bracket(ei, ej), ek);
        const Vector4 s2 = alg.bracket(alg.bracket(ej, ek), ei);
        const Vector4 s3 = alg.bracket(alg.bracket(ek, ei), ej);
        for (int n = 0; n < 4; ++n) worst = std::max(worst, abs(s1[n] + s2[n] + s3[n]));
      }
    }
  }
  return worst;
}

std::string to_string(SpectrumType t) {
  switch (t) {
    case SpectrumType::RealDiagonalizable: return "real-diagonalizable";
    case SpectrumType::RealNonDiagonalizable: return "real-nondiagonalizable";
    case SpectrumType::Complex: return "complex";
    case SpectrumType::NilpotentNonzero: return "nilpotent-nonzero";
    case SpectrumType::Zero: return "zero";
  }
  return "unknown";
}

QuotientSpectrum spectrum_on_quotient(const Derivation& a) {
  const RationalMatrix2 q = a.quotient_block();
  QuotientSpectrum s;
  s.trace = q[0][0] + q[1][1];
  s.det = det2(q);
  s.discriminant = s.trace * s.trace - 4 * s.det;
  s.scalar = q[0][1] == 0 && q[1][0] == 0 && q[0][0] == q[1][1];
  if (s.scalar && q[0][0] == 0) {
    s.type = SpectrumType::Zero;
  } else if (s.discriminant > 0) {
    s.type = SpectrumType::RealDiagonalizable;
  } else if (s.discriminant < 0) {
    s.type = SpectrumType::Complex;
  } else if (s.trace == 0) {
    s.type = SpectrumType::NilpotentNonzero;
  } else {
    s.type = s.scalar ? SpectrumType::RealDiagonalizable : SpectrumType::RealNonDiagonalizable;
  }
  return s;
}

CanonicalForm normalize_to_canonical(const Derivation& a) {
  const QuotientSpectrum spec = spectrum_on_quotient(a);
  if (spec.trace == 0) {
    throw UnimodularInput("tr of the quotient action is 0; use the unimodular branch");
  }
  if (spec.scalar) {
    throw NoInvariantMetric("quotient action is a homothety; every X̄ is an eigenvector");
  }
  const Rational factor = Rational(1) / spec.trace;
  const Derivation unit = scaled(a, factor);
  // Kill the Z-row entries (inner part) with ad_u.
  const Derivation outer = add_inner_derivation(unit, -unit(kZ, kY), unit(kZ, kX));

  // Cyclic vector w for the quotient block; (Āw − w, w) becomes (X, Y).
  const RationalMatrix2 q = outer.quotient_block();
  std::array<Rational, 2> w{1, 0};
  if (q[1][0] == 0) w = q[0][1] != 0 ? std::array<Rational, 2>{0, 1} : std::array<Rational, 2>{1, 1};
  const std::array<Rational, 2> aw{q[0][0] * w[0] + q[0][1] * w[1],
                                   q[1][0] * w[0] + q[1][1] * w[1]};
  RationalMatrix2 p{{{aw[0] - w[0], w[0]}, {aw[1] - w[1], w[1]}}};
  const RationalMatrix3 phi = lift_automorphism(p);
  const Derivation canonical = conjugate(outer, inverse(phi));

  CanonicalForm out{canonical, -det2(canonical.quotient_block()), sign(spec.trace), factor};
  return out;
}

RationalMatrix3 lift_automorphism(const RationalMatrix2& l) {
  const Rational d = det2(l);
  if (d == 0) throw std::domain_error("automorphism block must be invertible");
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = d;
  m[kX][kX] = l[0][0];
  m[kX][kY] = l[0][1];
  m[kY][kX] = l[1][0];
  m[kY][kY] = l[1][1];
  return m;
}

RationalMatrix3 diagonal_automorphism(const Rational& t1, const Rational& t2) {
  return lift_automorphism({{{t1, 0}, {0, t2}}});
}

RationalMatrix3 shear_automorphism(const Rational& t) {
  return lift_automorphism({{{1, t}, {0, 1}}});
}

RationalMatrix3 similarity_automorphism(const Rational& p, const Rational& q) {
  return lift_automorphism({{{p, -q}, {q, p}}});
}

Derivation conjugate(const Derivation& a, const RationalMatrix3& phi) {
  return Derivation(multiply(multiply(phi, a.matrix()), inverse(phi)));
}

Derivation add_inner_derivation(const Derivation& a, const Rational& ux, const Rational& uy) {
  RationalMatrix3 m = a.matrix();
  m[kZ][kX] -= uy;
  m[kZ][kY] += ux;
  return Derivation(m);
}

Derivation scaled(const Derivation& a, const Rational& lambda) {
  return Derivation(scale(a.matrix(), lambda));
}

}  // namespace lorentz3
