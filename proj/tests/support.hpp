#pragma once

#include <random>

#include "lorentz3/lie_core.hpp"
#include "lorentz3/rational.hpp"

namespace lorentz3::test {

inline Rational Q(const char* s) { return parse_rational(s).value; }

inline RationalMatrix3 diag3(const Rational& a, const Rational& b, const Rational& c) {
  RationalMatrix3 m = zero3();
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

// Elliptic derivation with quotient block [[c, -1], [1, c]].
inline Derivation elliptic_derivation(const Rational& c) {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = 2 * c;
  m[kX][kX] = c;
  m[kX][kY] = -1;
  m[kY][kX] = 1;
  m[kY][kY] = c;
  return Derivation(m);
}

inline Derivation parabolic_derivation() {
  RationalMatrix3 m = zero3();
  m[kZ][kZ] = 2;
  m[kX][kX] = 1;
  m[kX][kY] = 1;
  m[kY][kY] = 1;
  return Derivation(m);
}

inline Derivation nilpotent_derivation() {
  RationalMatrix3 m = zero3();
  m[kX][kY] = 1;
  return Derivation(m);
}

// diag(1 + b, 1, b).
inline Derivation hyperbolic_derivation(const Rational& b) { return Derivation(diag3(1 + b, 1, b)); }

// Small nonzero rational p/q with |p| <= 6, 1 <= q <= 5.
inline Rational random_rational(std::mt19937_64& rng, bool nonzero = true) {
  while (true) {
    const long p = static_cast<long>(rng() % 13) - 6;
    const long q = static_cast<long>(rng() % 5) + 1;
    if (!nonzero || p != 0) return Rational(p, q);
  }
}

// A random composition of automorphisms drawn from the explicit families.
inline RationalMatrix3 random_automorphism(std::mt19937_64& rng) {
  RationalMatrix3 phi = identity3();
  const int factors = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < factors; ++i) {
    RationalMatrix3 f;
    switch (rng() % 3) {
      case 0: f = diagonal_automorphism(random_rational(rng), random_rational(rng)); break;
      case 1: f = shear_automorphism(random_rational(rng, false)); break;
      default: f = similarity_automorphism(random_rational(rng), random_rational(rng, false)); break;
    }
    phi = multiply(f, phi);
  }
  return phi;
}

}  // namespace lorentz3::test
