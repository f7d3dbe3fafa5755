#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qgchar/root_datum.hpp"

namespace qgchar {

// The finite Weyl group of a root datum, fully enumerated.  Elements are
// dense indices 0..size()-1 with 0 the identity; every element stores its
// action matrix on the weight lattice, its length, and its lexicographically
// least reduced word.
//
// Bruhat tables (downsets, covers) are built on first use and cached; build
// them from a single thread before any concurrent read-only queries.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootDatum& datum);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  std::size_t size() const { return length_.size(); }

  int identity() const { return 0; }
  int longest() const { return longest_; }
  int length(int w) const { return length_[static_cast<std::size_t>(w)]; }
  int max_length() const { return length_[static_cast<std::size_t>(longest_)]; }
  const std::vector<int>& reduced_word(int w) const { return word_[static_cast<std::size_t>(w)]; }
  const std::vector<int>& elements_of_length(int l) const;

  int right_multiply(int w, int i) const;  // w * s_i
  int left_multiply(int i, int w) const;   // s_i * w
  int multiply(int u, int v) const;
  int inverse(int w) const { return inverse_[static_cast<std::size_t>(w)]; }

  Weight act(int w, const Weight& x) const;
  // Dot action w . lambda = w(lambda + rho) - rho.
  Weight dot_act(int w, const Weight& lambda) const;

  // Indices of the positive roots sent to negative roots by w; the count
  // equals length(w).
  std::vector<int> inversions(int w) const;

  // Bruhat order via the subword criterion applied to the cached reduced
  // words: the downset of w is the set of all subword products of any one
  // reduced word of w.
  bool bruhat_leq(int a, int b) const;
  // Covering pairs (lower, upper) with length difference one.  Verifies the
  // diamond property of length-two intervals as it builds.
  const std::vector<std::pair<int, int>>& bruhat_covers() const;

  // Coefficient k is the number of elements of length k.
  std::vector<long long> poincare_polynomial() const;

 private:
  WeylGroup() = default;
  void ensure_bruhat() const;

  RootDatum datum_;
  std::vector<std::vector<long long>> action_;  // rank*rank, row-major
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<int>> by_length_;
  std::vector<int> rmul_, lmul_;  // size*rank multiplication tables
  std::vector<int> inverse_;
  int longest_ = 0;

  mutable bool bruhat_built_ = false;
  mutable std::size_t down_words_ = 0;
  mutable std::vector<std::vector<std::uint64_t>> down_;  // bitset per element
  mutable std::vector<std::pair<int, int>> covers_;
  mutable bool covers_built_ = false;
};

}  // namespace qgchar
