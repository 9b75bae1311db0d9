#pragma once

#include <array>
#include <string>

#include "lorentz3/rational.hpp"

// Exact model of the Heisenberg algebra heis = span(Z, X, Y), [X, Y] = Z,
// its derivations, and the 4-dimensional extensions g = R T + heis with
// [T, W] = A(W).
//
// Basis order is (Z, X, Y) on heis and (Z, X, Y, T) on the extension,
// everywhere. A matrix entry (i, j) is the i-th component of A applied to the
// j-th basis vector.
namespace lorentz3 {

enum Heis : int { kZ = 0, kX = 1, kY = 2 };
inline constexpr int kT = 3;

using RationalMatrix2 = std::array<std::array<Rational, 2>, 2>;

// True iff the matrix satisfies A[u, w] = [Au, w] + [u, Aw] on heis, which
// reduces to A(Z) = tr(Ā) Z with Ā the induced map on heis/Z.
bool is_derivation(const RationalMatrix3& m);

class Derivation {
 public:
  // Throws NotADerivation.
  explicit Derivation(const RationalMatrix3& m);

  const RationalMatrix3& matrix() const noexcept { return m_; }
  const Rational& operator()(int row, int col) const { return m_[row][col]; }

  // Action on heis/Z = span(X̄, Ȳ).
  RationalMatrix2 quotient_block() const;
  // Eigenvalue on the center; always tr(Ā).
  const Rational& central_eigenvalue() const noexcept { return m_[kZ][kZ]; }

  RationalVector3 apply(const RationalVector3& w) const { return multiply(m_, w); }

  friend bool operator==(const Derivation& a, const Derivation& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix3 m_;
};

// Canonical non-unimodular representative [[1,0,0],[0,0,1],[0,b,1]].
Derivation canonical_derivation(const Rational& b);

// A non-central element W = z Z + x X + y Y spanning the isotropy line.
class IsotropyChoice {
 public:
  // Throws CentralIsotropy when (x, y) = (0, 0).
  IsotropyChoice(Rational z, Rational x, Rational y);

  const RationalVector3& heis() const noexcept { return w_; }
  const Rational& z() const noexcept { return w_[kZ]; }
  const Rational& x() const noexcept { return w_[kX]; }
  const Rational& y() const noexcept { return w_[kY]; }

 private:
  RationalVector3 w_;
};

using Vector4 = std::array<Rational, 4>;

// Structure constants c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
using StructureConstants = std::array<std::array<std::array<Rational, 4>, 4>, 4>;

class ExtensionAlgebra {
 public:
  explicit ExtensionAlgebra(const StructureConstants& c) : c_(c) {}

  const StructureConstants& structure_constants() const noexcept { return c_; }
  StructureConstants& structure_constants() noexcept { return c_; }

  Vector4 bracket(const Vector4& a, const Vector4& b) const;
  // Matrix of ad_a on the 4-dimensional algebra (column j = [a, e_j]).
  std::array<std::array<Rational, 4>, 4> ad(const Vector4& a) const;

 private:
  StructureConstants c_;
};

Vector4 embed(const RationalVector3& heis_vector);
Vector4 basis_vector(int index);

ExtensionAlgebra extend_algebra(const Derivation& a);

// Max-norm of every Jacobi cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] +
// [[e_k,e_i],e_j] over all ordered basis triples.
Rational jacobi_residual(const ExtensionAlgebra& alg);

enum class SpectrumType {
  RealDiagonalizable,
  RealNonDiagonalizable,
  Complex,
  NilpotentNonzero,
  Zero,
};

std::string to_string(SpectrumType t);

struct QuotientSpectrum {
  Rational trace;
  Rational det;
  Rational discriminant;
  SpectrumType type;
  // Ā is a multiple of the identity (homothety); no isotropy choice then
  // admits an invariant Lorentz metric.
  bool scalar = false;
};

QuotientSpectrum spectrum_on_quotient(const Derivation& a);

struct CanonicalForm {
  Derivation canonical;
  Rational b;
  // Sign of tr(Ā) before normalization; -1 means the one-parameter group
  // was time-reversed to make the central eigenvalue 1.
  int orientation_sign;
  // Factor applied to A (1 / tr(Ā)).
  Rational scale_factor;
};

// Brings a non-unimodular derivation to [[1,0,0],[0,0,1],[0,b,1]] by
// scaling, removing the inner part ad_u, and a linear change of basis of
// span(X, Y) lifted to an automorphism of heis.
// Throws UnimodularInput when tr(Ā) = 0, NoInvariantMetric when Ā is scalar.
CanonicalForm normalize_to_canonical(const Derivation& a);

// Automorphism families of heis (as 3x3 matrices in the (Z, X, Y) basis).
// Each maps X, Y by a linear map L and Z by det(L).
RationalMatrix3 diagonal_automorphism(const Rational& t1, const Rational& t2);
// X -> X, Y -> Y + t X.
RationalMatrix3 shear_automorphism(const Rational& t);
// X -> p X + q Y, Y -> -q X + p Y, Z -> (p^2 + q^2) Z.
RationalMatrix3 similarity_automorphism(const Rational& p, const Rational& q);
// Lift of an arbitrary invertible 2x2 map on span(X, Y).
RationalMatrix3 lift_automorphism(const RationalMatrix2& l);

// phi A phi^{-1}.
Derivation conjugate(const Derivation& a, const RationalMatrix3& phi);
// A + ad_u for u = ux X + uy Y (the Z part of u acts trivially).
Derivation add_inner_derivation(const Derivation& a, const Rational& ux, const Rational& uy);
Derivation scaled(const Derivation& a, const Rational& lambda);

}  // namespace lorentz3
