#include "lorentz3/rational.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

#include "lorentz3/errors.hpp"

namespace lorentz3 {

namespace {

const std::regex kExactPattern(R"(^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$)");

}  // namespace

ParsedRational parse_rational(std::string_view text) {
  ParsedRational out;
  out.source = std::string(text);
  std::smatch m;
  const std::string s(text);
  if (std::regex_match(s, m, kExactPattern)) {
    boost::multiprecision::cpp_int num(m[1].str());
    boost::multiprecision::cpp_int den(1);
    if (m[2].matched) {
      den = boost::multiprecision::cpp_int(m[2].str());
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    out.value = Rational(num, den);
    return out;
  }
  std::size_t consumed = 0;
  double d = 0.0;
  try {
    d = std::stod(s, &consumed);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  while (consumed < s.size() && std::isspace(static_cast<unsigned char>(s[consumed]))) ++consumed;
  if (consumed != s.size() || !std::isfinite(d)) throw ParseError("not a number: '" + s + "'");
  out.value = rationalize(d);
  out.rationalized = true;
  return out;
}

Rational rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw ParseError("cannot rationalize a non-finite value");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  using boost::multiprecision::cpp_int;
  // Work on the exact binary value of x.
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  cpp_int num = scaled;
  cpp_int den = 1;
  const int shift = exponent - 53;
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  const Rational exact(num, den);
  if (boost::multiprecision::denominator(exact) <= max_denominator) return exact;

  // Continued-fraction convergents p/q of the exact value.
  cpp_int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  cpp_int n = boost::multiprecision::numerator(exact);
  cpp_int d = boost::multiprecision::denominator(exact);
  const cpp_int bound = max_denominator;
  while (true) {
    cpp_int a = n / d;
    if (n < 0 && a * d != n) a -= 1;  // floor for negatives
    const cpp_int q2 = q0 + a * q1;
    if (q2 > bound) {
      // Best semiconvergent with q <= bound.
      const cpp_int k = (bound - q0) / q1;
      const Rational semi(p0 + k * p1, q0 + k * q1);
      const Rational conv(p1, q1);
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    const cpp_int p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const cpp_int r = n - a * d;
    if (r == 0) return Rational(p1, q1);
    n = d;
    d = r;
  }
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

RationalMatrix3 identity3() {
  RationalMatrix3 m = zero3();
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix3 zero3() {
  RationalMatrix3 m;
  for (auto& row : m) row.fill(Rational(0));
  return m;
}

RationalMatrix3 multiply(const RationalMatrix3& a, const RationalMatrix3& b) {
  RationalMatrix3 c = zero3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RationalVector3 multiply(const RationalMatrix3& a, const RationalVector3& v) {
  RationalVector3 out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] += a[i][k] * v[k];
  return out;
}

RationalMatrix3 transpose(const RationalMatrix3& a) {
  RationalMatrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

RationalMatrix3 scale(const RationalMatrix3& a, const Rational& s) {
  RationalMatrix3 out = a;
  for (auto& row : out)
    for (auto& e : row) e *= s;
  return out;
}

RationalMatrix3 add(const RationalMatrix3& a, const RationalMatrix3& b) {
  RationalMatrix3 out = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] += b[i][j];
  return out;
}

Rational determinant(const RationalMatrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

RationalMatrix3 inverse(const RationalMatrix3& a) {
  const Rational det = determinant(a);
  if (det == 0) throw std::domain_error("singular rational matrix");
  RationalMatrix3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  }
  return scale(adj, Rational(1) / det);
}

Rational max_abs(const RationalMatrix3& a) {
  Rational m = 0;
  for (const auto& row : a)
    for (const auto& e : row) m = std::max(m, abs(e));
  return m;
}

}  // namespace lorentz3
