#include "qgchar/bgg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgchar {

namespace {

std::string word_name(const WeylGroup& g, int w) {
  const auto& word = g.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace

BGGComplex build_bgg_complex(const FormulaContext& ctx, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("BGG weight must be dominant");
  const WeylGroup& g = ctx.group();
  BGGComplex c;
  c.lambda = lambda;
  c.ell = ctx.ell();
  c.num_degrees = g.max_length() + 1;

  Weight ell_lambda = ctx.ell() * lambda;
  std::vector<int> term_of(g.size(), -1);
  for (int l = 0; l <= g.max_length(); ++l)
    for (int w : g.elements_of_length(l)) {
      term_of[static_cast<std::size_t>(w)] = static_cast<int>(c.terms.size());
      c.terms.push_back({w, l, g.dot_act(w, ell_lambda)});
    }

  for (auto [a, b] : g.bruhat_covers())
    c.arrows.push_back({term_of[static_cast<std::size_t>(a)],
                        term_of[static_cast<std::size_t>(b)], 1});
  std::sort(c.arrows.begin(), c.arrows.end(), [](const BGGArrow& x, const BGGArrow& y) {
    return x.from != y.from ? x.from < y.from : x.to < y.to;
  });

  // Square relations: for every interval [x,z] of length two, the diamond
  // property gives exactly two middles y1, y2, and the four arrow signs must
  // multiply to -1.  Writing sign = (-1)^eps this is a GF(2) linear system;
  // solve by elimination with arrows as columns in sorted order.
  std::map<std::pair<int, int>, int> arrow_index;
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    arrow_index[{c.arrows[i].from, c.arrows[i].to}] = static_cast<int>(i);
  std::vector<std::vector<int>> into(c.terms.size()), outof(c.terms.size());
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    into[static_cast<std::size_t>(c.arrows[i].to)].push_back(static_cast<int>(i));
    outof[static_cast<std::size_t>(c.arrows[i].from)].push_back(static_cast<int>(i));
  }

  struct Eq {
    std::vector<int> cols;  // arrow indices, strictly increasing
  };
  std::vector<Eq> eqs;
  for (std::size_t z = 0; z < c.terms.size(); ++z) {
    std::map<int, std::vector<std::pair<int, int>>> paths_from;  // x -> [(e1,e2)]
    for (int e2 : into[z]) {
      int y = c.arrows[static_cast<std::size_t>(e2)].from;
      for (int e1 : into[static_cast<std::size_t>(y)])
        paths_from[c.arrows[static_cast<std::size_t>(e1)].from].push_back({e1, e2});
    }
    for (auto& [x, paths] : paths_from) {
      if (paths.size() != 2)
        throw std::logic_error("length-two interval without exactly two middles");
      Eq eq;
      eq.cols = {paths[0].first, paths[0].second, paths[1].first, paths[1].second};
      std::sort(eq.cols.begin(), eq.cols.end());
      eqs.push_back(std::move(eq));
    }
  }

  // Gaussian elimination over GF(2); rhs is 1 for every equation.
  const std::size_t m = c.arrows.size();
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> rhs;
  const std::size_t words = m / 64 + 1;
  for (const Eq& eq : eqs) {
    std::vector<std::uint64_t> row(words, 0);
    for (int col : eq.cols) row[static_cast<std::size_t>(col) / 64] ^= std::uint64_t{1}
                                                                       << (col % 64);
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  std::vector<int> pivot_row(m, -1);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m && next_row < rows.size(); ++col) {
    std::size_t sel = next_row;
    while (sel < rows.size() && !((rows[sel][col / 64] >> (col % 64)) & 1)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[next_row]);
    std::swap(rhs[sel], rhs[next_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || !((rows[r][col / 64] >> (col % 64)) & 1)) continue;
      for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[next_row][k];
      rhs[r] ^= rhs[next_row];
    }
    pivot_row[col] = static_cast<int>(next_row);
    ++next_row;
  }
  for (std::size_t r = next_row; r < rows.size(); ++r)
    if (rhs[r]) throw std::logic_error("inconsistent sign system");

  std::vector<int> eps(m, 0);
  // Free columns stay 0; pivot columns read their row's rhs minus the free
  // part.  After full (Jordan) elimination each pivot row has exactly its
  // pivot among the pivot columns, so the value is rhs xor the free bits.
  for (std::size_t col = 0; col < m; ++col) {
    if (pivot_row[col] < 0) continue;
    const auto& row = rows[static_cast<std::size_t>(pivot_row[col])];
    int v = rhs[static_cast<std::size_t>(pivot_row[col])];
    for (std::size_t other = 0; other < m; ++other) {
      if (other == col || pivot_row[other] >= 0) continue;
      if ((row[other / 64] >> (other % 64)) & 1) v ^= eps[other];
    }
    eps[col] = v;
  }
  for (std::size_t i = 0; i < m; ++i) c.arrows[i].sign = eps[i] ? -1 : 1;

  // Verify every square independently of the solver.
  for (std::size_t z = 0; z < c.terms.size(); ++z) {
    std::map<int, int> prod;
    std::map<int, int> count;
    for (int e2 : into[z]) {
      int y = c.arrows[static_cast<std::size_t>(e2)].from;
      for (int e1 : into[static_cast<std::size_t>(y)]) {
        int x = c.arrows[static_cast<std::size_t>(e1)].from;
        int p = c.arrows[static_cast<std::size_t>(e1)].sign *
                c.arrows[static_cast<std::size_t>(e2)].sign;
        prod.try_emplace(x, 1);
        prod[x] *= p;
        ++count[x];
      }
    }
    for (auto [x, p] : prod)
      if (count[x] == 2 && p != -1) throw std::logic_error("square sign product is not -1");
  }
  return c;
}

bool bgg_d_squared_vanishes(const FormulaContext&, const BGGComplex& c) {
  std::vector<std::vector<int>> into(c.terms.size());
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    into[static_cast<std::size_t>(c.arrows[i].to)].push_back(static_cast<int>(i));
  for (std::size_t z = 0; z < c.terms.size(); ++z) {
    std::map<int, int> acc;
    for (int e2 : into[z]) {
      int y = c.arrows[static_cast<std::size_t>(e2)].from;
      for (int e1 : into[static_cast<std::size_t>(y)]) {
        int x = c.arrows[static_cast<std::size_t>(e1)].from;
        acc[x] += c.arrows[static_cast<std::size_t>(e1)].sign *
                  c.arrows[static_cast<std::size_t>(e2)].sign;
      }
    }
    for (auto [x, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

BigradedSeries bgg_euler_character(const FormulaContext& ctx, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("BGG weight must be dominant");
  Weight ell_lambda = ctx.ell() * lambda;
  BigradedSeries acc = BigradedSeries::zero(ctx.weight_adic_shape()).restrict_hmin(ctx.hmin());
  for (std::size_t w = 0; w < ctx.group().size(); ++w) {
    BigradedSeries term = quasi_verma_character(ctx, static_cast<int>(w), ell_lambda);
    if (ctx.group().length(static_cast<int>(w)) % 2) term = -term;
    acc += term;
  }
  std::ostringstream os;
  os << "bgg-euler lambda=" << to_string(lambda) << " ell=" << ctx.ell();
  acc.set_provenance(os.str());
  return acc;
}

std::string emit_bgg_dot(const FormulaContext& ctx, const BGGComplex& c) {
  const WeylGroup& g = ctx.group();
  std::ostringstream os;
  os << "digraph bgg {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const BGGTerm& t : c.terms)
    os << "  \"" << word_name(g, t.w) << "\" [label=\"" << word_name(g, t.w) << " : "
       << to_string(t.highest_weight) << "\"];\n";
  for (const BGGArrow& a : c.arrows)
    os << "  \"" << word_name(g, c.terms[static_cast<std::size_t>(a.from)].w) << "\" -> \""
       << word_name(g, c.terms[static_cast<std::size_t>(a.to)].w) << "\" [label=\""
       << (a.sign > 0 ? "+" : "-") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qgchar
