#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace laminar {

// Exact arbitrary-precision rational. Every quantity in the library is one of
// these; no floating point enters any computation (rendering excepted).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline Rational rational(long long p, long long q = 1) {
  return Rational(Integer(p), Integer(q));
}

// floor(r) as an Integer.
inline Integer rfloor(const Rational& r) {
  Integer q = num(r) / den(r);
  if (r < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline Integer rceil(const Rational& r) { return -rfloor(-r); }

// r reduced into [0,1).
inline Rational mod1(const Rational& r) { return r - Rational(rfloor(r)); }

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Parses "p/q" or "p" (optional sign, arbitrary precision).
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash));
    Integer q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

} // namespace laminar
