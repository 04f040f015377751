#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zonotopal {

// Exact arithmetic substrate. Everything in this library is computed over Q;
// Rational keeps numerator/denominator reduced with denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
  return numer(q).str() + "/" + denom(q).str();
}

// Accepts "p", "-p", "p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline Int factorial(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (int i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

}  // namespace zonotopal
