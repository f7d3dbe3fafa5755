#include "qgchar/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace qgchar {

namespace {

using Matrix = std::vector<long long>;  // rank*rank, row-major

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int n) {
  Matrix c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootDatum& datum) {
  WeylGroup g;
  g.datum_ = datum;
  const int n = datum.rank();

  // Simple reflection matrices: s_i subtracts <i,x> times the i-th simple
  // root, i.e. column i of the identity shifts by the root's coordinates.
  std::vector<Matrix> gen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Matrix m = identity_matrix(n);
    const Weight& alpha = datum.simple_root(i).weight;
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k) * n + i] -= alpha[k];
    gen[static_cast<std::size_t>(i)] = std::move(m);
  }

  constexpr std::size_t kOrderCap = 10'000'000;
  std::map<Matrix, int> index_of;
  g.action_.push_back(identity_matrix(n));
  g.length_.push_back(0);
  index_of[g.action_[0]] = 0;
  g.rmul_.assign(static_cast<std::size_t>(n), -1);

  for (std::size_t w = 0; w < g.action_.size(); ++w) {
    for (int i = 0; i < n; ++i) {
      Matrix m = mat_mul(g.action_[w], gen[static_cast<std::size_t>(i)], n);
      auto [it, inserted] = index_of.try_emplace(m, static_cast<int>(g.action_.size()));
      if (inserted) {
        g.action_.push_back(std::move(m));
        g.length_.push_back(g.length_[w] + 1);
        g.rmul_.resize(g.action_.size() * static_cast<std::size_t>(n), -1);
        if (g.action_.size() > kOrderCap) throw std::logic_error("Weyl group too large");
      }
      g.rmul_[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = it->second;
    }
  }

  const std::size_t N = g.action_.size();
  g.lmul_.assign(N * static_cast<std::size_t>(n), -1);
  for (std::size_t w = 0; w < N; ++w)
    for (int i = 0; i < n; ++i)
      g.lmul_[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
          index_of.at(mat_mul(gen[static_cast<std::size_t>(i)], g.action_[w], n));

  int max_len = 0;
  for (std::size_t w = 0; w < N; ++w) max_len = std::max(max_len, g.length_[w]);
  g.by_length_.assign(static_cast<std::size_t>(max_len) + 1, {});
  for (std::size_t w = 0; w < N; ++w)
    g.by_length_[static_cast<std::size_t>(g.length_[w])].push_back(static_cast<int>(w));

  if (g.by_length_.back().size() != 1 ||
      max_len != static_cast<int>(datum.num_positive_roots()))
    throw std::logic_error("longest element inconsistent with positive root count");
  g.longest_ = g.by_length_.back().front();

  // Lexicographically least reduced words, built by repeatedly stripping the
  // smallest left descent.  Processing by length keeps the recursion resolved.
  g.word_.assign(N, {});
  for (int l = 1; l <= max_len; ++l) {
    for (int w : g.by_length_[static_cast<std::size_t>(l)]) {
      int best = -1;
      for (int i = 0; i < n && best < 0; ++i)
        if (g.length_[static_cast<std::size_t>(
                g.lmul_[static_cast<std::size_t>(w) * n + static_cast<std::size_t>(i)])] < l)
          best = i;
      if (best < 0) throw std::logic_error("element without a left descent");
      int rest = g.lmul_[static_cast<std::size_t>(w) * n + static_cast<std::size_t>(best)];
      auto& word = g.word_[static_cast<std::size_t>(w)];
      word.push_back(best);
      const auto& tail = g.word_[static_cast<std::size_t>(rest)];
      word.insert(word.end(), tail.begin(), tail.end());
    }
  }

  g.inverse_.assign(N, -1);
  for (std::size_t w = 0; w < N; ++w) {
    int idx = 0;
    const auto& word = g.word_[w];
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      idx = g.rmul_[static_cast<std::size_t>(idx) * n + static_cast<std::size_t>(*it)];
    g.inverse_[w] = idx;
  }

  // Lengths must agree with inversion counts.
  for (std::size_t w = 0; w < N; ++w)
    if (g.inversions(static_cast<int>(w)).size() != static_cast<std::size_t>(g.length_[w]))
      throw std::logic_error("BFS length disagrees with inversion count");

  return g;
}

const std::vector<int>& WeylGroup::elements_of_length(int l) const {
  static const std::vector<int> empty;
  if (l < 0 || l >= static_cast<int>(by_length_.size())) return empty;
  return by_length_[static_cast<std::size_t>(l)];
}

int WeylGroup::right_multiply(int w, int i) const {
  return rmul_[static_cast<std::size_t>(w) * rank() + static_cast<std::size_t>(i)];
}

int WeylGroup::left_multiply(int i, int w) const {
  return lmul_[static_cast<std::size_t>(w) * rank() + static_cast<std::size_t>(i)];
}

int WeylGroup::multiply(int u, int v) const {
  int idx = u;
  for (int i : word_[static_cast<std::size_t>(v)]) idx = right_multiply(idx, i);
  return idx;
}

Weight WeylGroup::act(int w, const Weight& x) const {
  const int n = rank();
  if (static_cast<int>(x.rank()) != n) throw std::invalid_argument("weight rank mismatch");
  const Matrix& m = action_[static_cast<std::size_t>(w)];
  Weight y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i) * n + j] * x[j];
    y[i] = s;
  }
  return y;
}

Weight WeylGroup::dot_act(int w, const Weight& lambda) const {
  return act(w, lambda + datum_.rho()) - datum_.rho();
}

std::vector<int> WeylGroup::inversions(int w) const {
  std::vector<int> inv;
  const auto& roots = datum_.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (datum_.classify_root(act(w, roots[k].weight)) < 0) inv.push_back(static_cast<int>(k));
  return inv;
}

void WeylGroup::ensure_bruhat() const {
  if (bruhat_built_) return;
  const std::size_t N = size();
  down_words_ = (N + 63) / 64;
  down_.assign(N, std::vector<std::uint64_t>(down_words_, 0));
  for (std::size_t w = 0; w < N; ++w) {
    // Subword downset DP over the cached reduced word: after consuming each
    // letter the set holds all products of subwords of the prefix.
    std::vector<std::uint64_t> s(down_words_, 0);
    s[0] = 1;  // identity
    for (int i : word_[w]) {
      std::vector<std::uint64_t> next = s;
      for (std::size_t blk = 0; blk < down_words_; ++blk) {
        std::uint64_t bits = s[blk];
        while (bits) {
          int bit = std::countr_zero(bits);
          bits &= bits - 1;
          int u = static_cast<int>(blk * 64) + bit;
          int ui = right_multiply(u, i);
          next[static_cast<std::size_t>(ui) / 64] |= std::uint64_t{1} << (ui % 64);
        }
      }
      s = std::move(next);
    }
    down_[w] = std::move(s);
  }
  bruhat_built_ = true;
}

bool WeylGroup::bruhat_leq(int a, int b) const {
  ensure_bruhat();
  return (down_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) / 64] >>
          (a % 64)) & 1;
}

const std::vector<std::pair<int, int>>& WeylGroup::bruhat_covers() const {
  if (covers_built_) return covers_;
  ensure_bruhat();
  const std::size_t N = size();
  for (std::size_t b = 0; b < N; ++b)
    for (int a : elements_of_length(length_[b] - 1))
      if (bruhat_leq(a, static_cast<int>(b))) covers_.emplace_back(a, static_cast<int>(b));
  std::sort(covers_.begin(), covers_.end());

  // Diamond property: a length-two Bruhat interval [x,z] has exactly two
  // interior elements; incomparable pairs have none.
  std::vector<std::vector<int>> up(N), downv(N);
  for (auto [a, b] : covers_) {
    up[static_cast<std::size_t>(a)].push_back(b);
    downv[static_cast<std::size_t>(b)].push_back(a);
  }
  for (std::size_t z = 0; z < N; ++z) {
    std::map<int, int> middle_count;
    for (int y : downv[z])
      for (int x : downv[static_cast<std::size_t>(y)]) ++middle_count[x];
    for (int x : elements_of_length(length_[z] - 2)) {
      int c = middle_count.count(x) ? middle_count[x] : 0;
      bool leq = bruhat_leq(x, static_cast<int>(z));
      if ((leq && c != 2) || (!leq && c != 0))
        throw std::logic_error("diamond property violated in Bruhat order");
    }
  }
  covers_built_ = true;
  return covers_;
}

std::vector<long long> WeylGroup::poincare_polynomial() const {
  std::vector<long long> p(by_length_.size(), 0);
  for (std::size_t l = 0; l < by_length_.size(); ++l)
    p[l] = static_cast<long long>(by_length_[l].size());
  return p;
}

}  // namespace qgchar
