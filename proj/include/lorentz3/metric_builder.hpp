#pragma once

#include <array>
#include <string>

#include "lorentz3/lie_core.hpp"

namespace lorentz3 {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool lorentz() const noexcept { return positive == 2 && negative == 1 && zero == 0; }
  std::string str() const;
};

// Invariant Lorentz form on m = span(T, Y', Z), the complement of the
// isotropy line span(W). Y' = A(W) in heis coordinates.
struct InvariantMetric {
  RationalVector3 y_prime;
  // Basis order (T, Y', Z).
  RationalMatrix3 gram;
  Rational scale_alpha{1};
  // g(T, T) after the T -> T + dZ normalization.
  Rational shift_beta{0};
  bool beta_normalized = true;
  // ad_W on m in the basis (T, Y', Z); ad_W(Y') = k Z.
  RationalMatrix3 ad_w;
  Rational k;
};

inline constexpr std::array<const char*, 3> kMetricBasisLabels{"T", "Yprime", "Z"};

// Nilpotency order of ad_W acting on g / span(W).
int isotropy_nilpotency_order(const Derivation& a, const IsotropyChoice& w);
// True iff W̄ is an eigenvector of Ā on heis/Z.
bool is_quotient_eigenvector(const Derivation& a, const IsotropyChoice& w);

// Order-3 test, cross-checked against the eigenvector criterion; a
// disagreement throws std::logic_error.
bool admits_metric(const Derivation& a, const IsotropyChoice& w);

// Throws NoInvariantMetric when !admits_metric(a, w).
InvariantMetric build_invariant_metric(const Derivation& a, const IsotropyChoice& w,
                                       const Rational& scale_alpha = Rational(1));

// ad_W on m computed from the structure constants of the extension algebra
// by expressing [W, e] in the basis (T, Y', Z, W) and dropping W.
RationalMatrix3 ad_w_on_complement(const Derivation& a, const IsotropyChoice& w,
                                   const RationalVector3& y_prime);

// max |g(ad u, w) + g(u, ad w)| over basis pairs.
Rational skew_residual(const RationalMatrix3& gram, const RationalMatrix3& ad_w);
inline Rational skew_residual(const InvariantMetric& m) { return skew_residual(m.gram, m.ad_w); }

// Exact inertia of a symmetric rational matrix.
Signature signature(const RationalMatrix3& symmetric);

bool has_transverse_subalgebra(const Derivation& a);

// First of X, Y, X + Y that admits a metric. Throws NoInvariantMetric when
// none does (Ā scalar).
IsotropyChoice default_isotropy(const Derivation& a);

}  // namespace lorentz3
