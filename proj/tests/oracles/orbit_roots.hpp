#pragma once

#include <vector>

#include "qgchar/root_datum.hpp"

namespace qgchar::ref {

// Reference enumeration of the positive roots: close the simple roots under
// all simple reflections acting in simple-root coordinates, then keep the
// orbit members with nonnegative coordinates.  Deliberately avoids the root
// string closure used by RootDatum so the two can check each other.
// Returned as simple-root coordinate vectors sorted by (height, lex).
std::vector<std::vector<long long>> orbit_positive_roots(const CartanDatum& datum);

}  // namespace qgchar::ref
