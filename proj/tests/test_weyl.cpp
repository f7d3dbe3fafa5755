#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qgchar/weyl.hpp"

using namespace qgchar;

namespace {

Weight wt(std::vector<long long> c) { return Weight(std::move(c)); }

int apply_word(const WeylGroup& g, const std::vector<int>& word) {
  int w = g.identity();
  for (int i : word) w = g.right_multiply(w, i);
  return w;
}

// All reduced words of w by exhaustive search over generator sequences.
std::vector<std::vector<int>> all_reduced_words(const WeylGroup& g, int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int len = g.length(w);
  auto rec = [&](auto&& self, int elem, int depth) -> void {
    if (depth == len) {
      if (elem == w) out.push_back(cur);
      return;
    }
    for (int i = 0; i < g.rank(); ++i) {
      int next = g.right_multiply(elem, i);
      if (g.length(next) != depth + 1) continue;  // not reduced
      cur.push_back(i);
      self(self, next, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, g.identity(), 0);
  return out;
}

// Products of all subwords of one word.
std::set<int> subword_products(const WeylGroup& g, const std::vector<int>& word) {
  std::set<int> prods{g.identity()};
  for (int i : word) {
    std::set<int> next = prods;
    for (int u : prods) next.insert(g.right_multiply(u, i));
    prods = std::move(next);
  }
  return prods;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("group orders") {
  CHECK(WeylGroup::enumerate(RootDatum::build('A', 2)).size() == 6);
  CHECK(WeylGroup::enumerate(RootDatum::build('B', 2)).size() == 8);
  CHECK(WeylGroup::enumerate(RootDatum::build('G', 2)).size() == 12);
  CHECK(WeylGroup::enumerate(RootDatum::build('A', 3)).size() == 24);
  CHECK(WeylGroup::enumerate(RootDatum::build('B', 3)).size() == 48);
  CHECK(WeylGroup::enumerate(RootDatum::build('F', 4)).size() == 1152);
}

TEST_CASE("lengths, Poincare polynomials, longest element") {
  WeylGroup a2 = WeylGroup::enumerate(RootDatum::build('A', 2));
  CHECK(a2.poincare_polynomial() == std::vector<long long>{1, 2, 2, 1});
  CHECK(a2.max_length() == 3);
  CHECK(a2.length(a2.identity()) == 0);
  CHECK(a2.reduced_word(a2.longest()) == std::vector<int>{0, 1, 0});

  WeylGroup b2 = WeylGroup::enumerate(RootDatum::build('B', 2));
  CHECK(b2.poincare_polynomial() == std::vector<long long>{1, 2, 2, 2, 1});
  CHECK(b2.max_length() == 4);

  WeylGroup g2 = WeylGroup::enumerate(RootDatum::build('G', 2));
  CHECK(g2.poincare_polynomial() == std::vector<long long>{1, 2, 2, 2, 2, 2, 1});

  long long total = 0;
  for (long long c : b2.poincare_polynomial()) total += c;
  CHECK(total == static_cast<long long>(b2.size()));
  CHECK(b2.elements_of_length(99).empty());
  CHECK(b2.elements_of_length(-1).empty());
}

TEST_CASE("cached words are reduced and lexicographically least") {
  for (auto [type, rank] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    CAPTURE(type);
    CAPTURE(rank);
    WeylGroup g = WeylGroup::enumerate(RootDatum::build(type, rank));
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
      const auto& word = g.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == g.length(w));
      CHECK(apply_word(g, word) == w);
      auto words = all_reduced_words(g, w);
      REQUIRE(!words.empty());
      CHECK(*std::min_element(words.begin(), words.end()) == word);
    }
  }
}

TEST_CASE("multiplication, inverses and the action") {
  WeylGroup g = WeylGroup::enumerate(RootDatum::build('B', 2));
  Weight probe = wt({3, -5});
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    CHECK(g.multiply(u, g.inverse(u)) == g.identity());
    CHECK(g.multiply(g.inverse(u), u) == g.identity());
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
      CHECK(g.act(g.multiply(u, v), probe) == g.act(u, g.act(v, probe)));
  }
  for (int i = 0; i < g.rank(); ++i) {
    CHECK(g.left_multiply(i, g.identity()) == g.right_multiply(g.identity(), i));
    CHECK(g.multiply(g.right_multiply(g.identity(), i),
                     g.right_multiply(g.identity(), i)) == g.identity());
  }
  CHECK_THROWS_AS(g.act(0, wt({1})), std::invalid_argument);
}

TEST_CASE("action and dot action anchors") {
  WeylGroup a2 = WeylGroup::enumerate(RootDatum::build('A', 2));
  int s0 = a2.right_multiply(a2.identity(), 0);
  CHECK(a2.act(s0, wt({1, 0})) == wt({-1, 1}));
  CHECK(a2.act(a2.identity(), wt({4, 7})) == wt({4, 7}));
  // w0 of A2 sends a weight to minus its coordinate reversal.
  CHECK(a2.act(a2.longest(), wt({1, 0})) == wt({0, -1}));
  CHECK(a2.act(a2.longest(), wt({2, 5})) == wt({-5, -2}));

  WeylGroup a1 = WeylGroup::enumerate(RootDatum::build('A', 1));
  int s = a1.right_multiply(a1.identity(), 0);
  CHECK(a1.dot_act(s, wt({3})) == wt({-5}));
  CHECK(a1.dot_act(a1.identity(), wt({3})) == wt({3}));
}

TEST_CASE("inversion sets match lengths") {
  for (auto [type, rank] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
    CAPTURE(type);
    WeylGroup g = WeylGroup::enumerate(RootDatum::build(type, rank));
    for (int w = 0; w < static_cast<int>(g.size()); ++w)
      CHECK(g.inversions(w).size() == static_cast<std::size_t>(g.length(w)));
    CHECK(g.inversions(g.longest()).size() == g.datum().num_positive_roots());
    CHECK(g.inversions(g.identity()).empty());
  }
}

TEST_CASE("Bruhat order agrees with the subword oracle for every reduced word") {
  for (auto [type, rank] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    CAPTURE(type);
    CAPTURE(rank);
    WeylGroup g = WeylGroup::enumerate(RootDatum::build(type, rank));
    for (int b = 0; b < static_cast<int>(g.size()); ++b) {
      auto words = all_reduced_words(g, b);
      std::set<int> expected = subword_products(g, words.front());
      // The subword criterion gives the same downset for every reduced word.
      for (const auto& word : words) CHECK(subword_products(g, word) == expected);
      for (int a = 0; a < static_cast<int>(g.size()); ++a)
        CHECK(g.bruhat_leq(a, b) == (expected.count(a) == 1));
    }
  }
}

TEST_CASE("Bruhat covers") {
  WeylGroup a2 = WeylGroup::enumerate(RootDatum::build('A', 2));
  const auto& covers = a2.bruhat_covers();
  CHECK(covers.size() == 8);
  CHECK(std::is_sorted(covers.begin(), covers.end()));
  std::vector<std::size_t> per_level(3, 0);
  for (auto [a, b] : covers) {
    CHECK(a2.length(b) == a2.length(a) + 1);
    CHECK(a2.bruhat_leq(a, b));
    ++per_level[static_cast<std::size_t>(a2.length(a))];
  }
  CHECK(per_level == std::vector<std::size_t>{2, 4, 2});

  WeylGroup b2 = WeylGroup::enumerate(RootDatum::build('B', 2));
  CHECK(b2.bruhat_covers().size() == 12);
  // Covers are exactly the comparable pairs one length apart.
  std::set<std::pair<int, int>> expected;
  for (int a = 0; a < static_cast<int>(b2.size()); ++a)
    for (int b = 0; b < static_cast<int>(b2.size()); ++b)
      if (b2.length(b) == b2.length(a) + 1 && b2.bruhat_leq(a, b)) expected.insert({a, b});
  std::set<std::pair<int, int>> got(b2.bruhat_covers().begin(), b2.bruhat_covers().end());
  CHECK(got == expected);
}

}  // TEST_SUITE
