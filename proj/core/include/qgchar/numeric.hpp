#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qgchar {

// Exact coefficient arithmetic.  Series coefficients can exceed 64 bits in
// deep windows (they count lattice points with multiplicity), so all
// character coefficients use arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// Height values are rational: the height functional takes value 1 on every
// simple root but is generally non-integral off the root lattice.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long rat_ceil(const Rat& r) {
  return -rat_floor(-r);
}

}  // namespace qgchar
