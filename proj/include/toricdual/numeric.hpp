#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toricdual {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// floor division (C++ '/' truncates toward zero)
inline Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace toricdual
