#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zpi {

// Exact arithmetic everywhere: congruence chains and Smith reductions
// multiply entries far past any fixed width.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int int_sign(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct ExtGcd {
  Int g, u, v;
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_u - q * u; old_u = u; u = t;
    t = old_v - q * v; old_v = v; v = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

}  // namespace zpi
