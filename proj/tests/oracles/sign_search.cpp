#include "oracles/sign_search.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace qgchar::ref {

std::vector<std::array<int, 4>> collect_squares(std::size_t num_terms,
                                                const std::vector<std::pair<int, int>>& arrows) {
  std::vector<std::vector<int>> into(num_terms);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].first < 0 || arrows[i].second < 0 ||
        static_cast<std::size_t>(arrows[i].first) >= num_terms ||
        static_cast<std::size_t>(arrows[i].second) >= num_terms)
      throw std::invalid_argument("arrow endpoint out of range");
    into[static_cast<std::size_t>(arrows[i].second)].push_back(static_cast<int>(i));
  }
  std::vector<std::array<int, 4>> squares;
  for (std::size_t z = 0; z < num_terms; ++z) {
    std::map<int, std::vector<std::pair<int, int>>> paths;  // start -> [(e1,e2)]
    for (int e2 : into[z])
      for (int e1 : into[static_cast<std::size_t>(arrows[static_cast<std::size_t>(e2)].first)])
        paths[arrows[static_cast<std::size_t>(e1)].first].push_back({e1, e2});
    for (const auto& [x, p] : paths) {
      if (p.size() != 2) throw std::logic_error("endpoint pair with path count other than 2");
      squares.push_back({p[0].first, p[0].second, p[1].first, p[1].second});
    }
  }
  return squares;
}

bool signs_anticommute(const std::vector<std::array<int, 4>>& squares,
                       const std::vector<int>& signs) {
  for (const auto& sq : squares) {
    int prod = 1;
    for (int e : sq) {
      if (e < 0 || static_cast<std::size_t>(e) >= signs.size())
        throw std::invalid_argument("square references an unknown arrow");
      prod *= signs[static_cast<std::size_t>(e)];
    }
    if (prod != -1) return false;
  }
  return true;
}

long long count_sign_systems(std::size_t num_arrows,
                             const std::vector<std::array<int, 4>>& squares) {
  if (num_arrows > 20) throw std::invalid_argument("brute force limited to 20 arrows");
  long long count = 0;
  std::vector<int> signs(num_arrows, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_arrows); ++mask) {
    for (std::size_t i = 0; i < num_arrows; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    if (signs_anticommute(squares, signs)) ++count;
  }
  return count;
}

}  // namespace qgchar::ref
