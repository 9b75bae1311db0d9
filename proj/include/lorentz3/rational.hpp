#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lorentz3 {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Row-major 3x3 matrix of exact rationals.
using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;
using RationalVector3 = std::array<Rational, 3>;

inline constexpr std::int64_t kMaxRationalizedDenominator = 1'000'000;

// Result of reading a user-supplied number. Integer and "p/q" inputs are
// exact; anything else is read as a double and replaced by its best rational
// approximation with denominator <= kMaxRationalizedDenominator.
struct ParsedRational {
  Rational value;
  bool rationalized = false;
  std::string source;
};

ParsedRational parse_rational(std::string_view text);

// Best rational approximation (continued fractions, semiconvergents
// included) with denominator bounded by `max_denominator`.
Rational rationalize(double x, std::int64_t max_denominator = kMaxRationalizedDenominator);

std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational abs(const Rational& q);
int sign(const Rational& q);

RationalMatrix3 identity3();
RationalMatrix3 zero3();
RationalMatrix3 multiply(const RationalMatrix3& a, const RationalMatrix3& b);
RationalVector3 multiply(const RationalMatrix3& a, const RationalVector3& v);
RationalMatrix3 transpose(const RationalMatrix3& a);
RationalMatrix3 scale(const RationalMatrix3& a, const Rational& s);
RationalMatrix3 add(const RationalMatrix3& a, const RationalMatrix3& b);
Rational determinant(const RationalMatrix3& a);
// Throws std::domain_error when `a` is singular.
RationalMatrix3 inverse(const RationalMatrix3& a);
Rational max_abs(const RationalMatrix3& a);

}  // namespace lorentz3
