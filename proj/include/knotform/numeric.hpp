#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. Nothing in the library touches floating point; signatures,
// determinants and polynomial coefficients are computed exactly.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace knotform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

// A vector is primitive when its entries have gcd 1 (so it extends to a
// basis of the integer lattice in the rank-one sense used here).
inline bool is_primitive(const IntVec& v) { return gcd_all(v) == 1; }

}  // namespace knotform
