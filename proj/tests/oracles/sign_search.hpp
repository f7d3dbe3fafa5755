#pragma once

#include <array>
#include <utility>
#include <vector>

namespace qgchar::ref {

// Squares of a ranked arrow diagram: for every pair of length-two paths
// x -> y1 -> z, x -> y2 -> z with the same endpoints, the four arrow indices
// involved.  Throws when some endpoint pair has a path count other than 0 or
// 2 (the diamond property fails).
std::vector<std::array<int, 4>> collect_squares(std::size_t num_terms,
                                                const std::vector<std::pair<int, int>>& arrows);

// Does the assignment give every square a sign product of -1?
bool signs_anticommute(const std::vector<std::array<int, 4>>& squares,
                       const std::vector<int>& signs);

// Number of satisfying assignments over all 2^num_arrows sign choices.
// Guarded to at most 2^20 assignments.
long long count_sign_systems(std::size_t num_arrows,
                             const std::vector<std::array<int, 4>>& squares);

}  // namespace qgchar::ref
