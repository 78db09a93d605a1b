#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Largest integer not exceeding r.
inline BigInt floor(const Rational& r) {
  BigInt q = num(r) / den(r);  // truncates toward zero
  if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline BigInt ceil(const Rational& r) { return -floor(-r); }

/// "num/den" with den >= 1; integers render as "n/1".
inline std::string to_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt p(std::string(text.substr(0, slash)));
    BigInt q(std::string(text.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow2(int e) {
  BigInt one = 1;
  return e >= 0 ? Rational(one << e) : Rational(one, one << (-e));
}

}  // namespace drg
