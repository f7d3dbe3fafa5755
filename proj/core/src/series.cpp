#include "qgchar/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace qgchar {

namespace {

Cell cell_add(const Cell& a, const Cell& b) {
  Cell c;
  for (int i = 0; i < kMaxSeriesRank; ++i) c.w[static_cast<std::size_t>(i)] =
      a.w[static_cast<std::size_t>(i)] + b.w[static_cast<std::size_t>(i)];
  c.t = a.t + b.t;
  return c;
}

Cell cell_sub(const Cell& a, const Cell& b) {
  Cell c;
  for (int i = 0; i < kMaxSeriesRank; ++i) c.w[static_cast<std::size_t>(i)] =
      a.w[static_cast<std::size_t>(i)] - b.w[static_cast<std::size_t>(i)];
  c.t = a.t - b.t;
  return c;
}

bool lex_less_cell(const Cell& a, const Cell& b, int rank) {
  for (int i = 0; i < rank; ++i) {
    if (a.w[static_cast<std::size_t>(i)] != b.w[static_cast<std::size_t>(i)])
      return a.w[static_cast<std::size_t>(i)] < b.w[static_cast<std::size_t>(i)];
  }
  return false;
}

}  // namespace

BigradedSeries::BigradedSeries(SeriesShape shape) : shape_(std::move(shape)) {
  if (shape_.rank < 1 || shape_.rank > kMaxSeriesRank)
    throw std::invalid_argument("series rank must be between 1 and 8");
  if (static_cast<int>(shape_.height.rank()) != shape_.rank)
    throw std::invalid_argument("height functional rank disagrees with series rank");
}

Cell BigradedSeries::cell_of(const Weight& mu, int t) const {
  if (static_cast<int>(mu.rank()) != shape_.rank)
    throw std::invalid_argument("weight rank disagrees with series rank");
  Cell c;
  for (int i = 0; i < shape_.rank; ++i) {
    long long v = mu[static_cast<std::size_t>(i)];
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
      throw std::invalid_argument("weight coordinate out of range");
    c.w[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v);
  }
  c.t = t;
  return c;
}

Weight BigradedSeries::weight_of(const Cell& c) const {
  Weight w(static_cast<std::size_t>(shape_.rank));
  for (int i = 0; i < shape_.rank; ++i) w[static_cast<std::size_t>(i)] = c.w[static_cast<std::size_t>(i)];
  return w;
}

Rat BigradedSeries::cell_height(const Cell& c) const {
  Rat h(0);
  const auto& coef = shape_.height.coefficients();
  for (int i = 0; i < shape_.rank; ++i)
    h += coef[static_cast<std::size_t>(i)] * Rat(c.w[static_cast<std::size_t>(i)]);
  return h;
}

bool BigradedSeries::in_window(const Cell& c) const {
  if (shape_.regime == Regime::TAdic) return !tmax_ || c.t <= *tmax_;
  if (hmin_ && cell_height(c) < *hmin_) return false;
  if (tcap_ && c.t > *tcap_) return false;
  return true;
}

void BigradedSeries::set_window_like(const BigradedSeries& o) {
  tmax_ = o.tmax_;
  hmin_ = o.hmin_;
  tcap_ = o.tcap_;
  tmin_support_ = o.tmin_support_;
  hmax_support_ = o.hmax_support_;
}

BigradedSeries BigradedSeries::monomial(SeriesShape shape, const Weight& mu, int t, Int coeff) {
  BigradedSeries s(std::move(shape));
  Cell c = s.cell_of(mu, t);
  if (coeff != 0) {
    s.c_.emplace(c, std::move(coeff));
    s.tmin_support_ = t;
    s.hmax_support_ = s.cell_height(c);
  }
  return s;
}

BigradedSeries BigradedSeries::restrict_tmax(int tmax) const {
  if (shape_.regime != Regime::TAdic)
    throw std::invalid_argument("restrict_tmax applies to t-adic series only");
  BigradedSeries r(shape_);
  r.set_window_like(*this);
  r.provenance_ = provenance_;
  r.tmax_ = tmax_ ? std::min(*tmax_, tmax) : tmax;
  for (const auto& [c, v] : c_)
    if (c.t <= *r.tmax_) r.c_.emplace(c, v);
  return r;
}

BigradedSeries BigradedSeries::restrict_hmin(const Rat& hmin) const {
  if (shape_.regime != Regime::WeightAdic)
    throw std::invalid_argument("restrict_hmin applies to weight-adic series only");
  BigradedSeries r(shape_);
  r.set_window_like(*this);
  r.provenance_ = provenance_;
  r.hmin_ = hmin_ ? std::max(*hmin_, hmin) : hmin;
  for (const auto& [c, v] : c_)
    if (cell_height(c) >= *r.hmin_) r.c_.emplace(c, v);
  return r;
}

BigradedSeries BigradedSeries::restrict_tcap(int tcap) const {
  if (shape_.regime != Regime::WeightAdic)
    throw std::invalid_argument("restrict_tcap applies to weight-adic series only");
  BigradedSeries r(shape_);
  r.set_window_like(*this);
  r.provenance_ = provenance_;
  r.tcap_ = tcap_ ? std::min(*tcap_, tcap) : tcap;
  for (const auto& [c, v] : c_)
    if (c.t <= *r.tcap_) r.c_.emplace(c, v);
  return r;
}

Int BigradedSeries::coefficient(const Weight& mu, int t) const {
  Cell c = cell_of(mu, t);
  if (!in_window(c)) throw std::out_of_range("coefficient query outside the exactness window");
  auto it = c_.find(c);
  return it == c_.end() ? Int(0) : it->second;
}

std::vector<SeriesEntry> BigradedSeries::entries() const {
  struct Item {
    Cell c;
    Rat h;
    const Int* v;
  };
  std::vector<Item> items;
  items.reserve(c_.size());
  for (const auto& [c, v] : c_) items.push_back({c, cell_height(c), &v});
  std::sort(items.begin(), items.end(), [this](const Item& a, const Item& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.c.w != b.c.w) return lex_less_cell(a.c, b.c, shape_.rank);
    return a.c.t < b.c.t;
  });
  std::vector<SeriesEntry> out;
  out.reserve(items.size());
  for (const auto& it : items)
    out.push_back({weight_of(it.c), static_cast<int>(it.c.t), *it.v});
  return out;
}

std::vector<SeriesEntry> BigradedSeries::slice_tdeg(int t) const {
  auto all = entries();
  std::vector<SeriesEntry> out;
  for (auto& e : all)
    if (e.t == t) out.push_back(std::move(e));
  return out;
}

void BigradedSeries::add_term(const Weight& mu, int t, const Int& coeff) {
  if (coeff == 0) return;
  Cell c = cell_of(mu, t);
  if (!in_window(c)) return;
  if (c_.empty()) {
    tmin_support_ = t;
    hmax_support_ = cell_height(c);
  } else {
    tmin_support_ = std::min(tmin_support_, t);
    hmax_support_ = std::max(hmax_support_, cell_height(c));
  }
  Int& slot = c_[c];
  slot += coeff;
  if (slot == 0) c_.erase(c);
}

BigradedSeries& BigradedSeries::operator+=(const BigradedSeries& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("series shape mismatch in addition");
  // Combined window: intersection of the exact regions; combined support
  // bound: the weaker of the two.
  std::optional<int> tmax;
  if (tmax_ && o.tmax_) tmax = std::min(*tmax_, *o.tmax_);
  else tmax = tmax_ ? tmax_ : o.tmax_;
  std::optional<Rat> hmin;
  if (hmin_ && o.hmin_) hmin = std::max(*hmin_, *o.hmin_);
  else hmin = hmin_ ? hmin_ : o.hmin_;
  std::optional<int> tcap;
  if (tcap_ && o.tcap_) tcap = std::min(*tcap_, *o.tcap_);
  else tcap = tcap_ ? tcap_ : o.tcap_;

  tmax_ = tmax;
  hmin_ = hmin;
  tcap_ = tcap;
  tmin_support_ = std::min(tmin_support_, o.tmin_support_);
  hmax_support_ = std::max(hmax_support_, o.hmax_support_);

  std::erase_if(c_, [this](const auto& kv) { return !in_window(kv.first); });
  for (const auto& [c, v] : o.c_) {
    if (!in_window(c)) continue;
    Int& slot = c_[c];
    slot += v;
    if (slot == 0) c_.erase(c);
  }
  return *this;
}

BigradedSeries& BigradedSeries::operator-=(const BigradedSeries& o) {
  return *this += -o;
}

BigradedSeries BigradedSeries::operator-() const {
  BigradedSeries r(*this);
  for (auto& [c, v] : r.c_) v = -v;
  return r;
}

BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b) {
  if (a.shape_ != b.shape_) throw std::invalid_argument("series shape mismatch in multiplication");
  if (a.tcap_ || b.tcap_)
    throw std::invalid_argument("general products of t-capped series are not supported");
  BigradedSeries r(a.shape_);
  if (a.shape_.regime == Regime::TAdic) {
    // Exactness of c at degree d needs every split d = d_a + d_b with both
    // factors inside their windows; the binding constraints come from the
    // partners' support minima.
    std::optional<int> tmax;
    if (a.tmax_) tmax = *a.tmax_ + b.tmin_support_;
    if (b.tmax_) tmax = tmax ? std::min(*tmax, *b.tmax_ + a.tmin_support_) : *b.tmax_ + a.tmin_support_;
    r.tmax_ = tmax;
    r.tmin_support_ = a.tmin_support_ + b.tmin_support_;
  } else {
    std::optional<Rat> hmin;
    if (a.hmin_) hmin = *a.hmin_ + b.hmax_support_;
    if (b.hmin_) {
      Rat cand = *b.hmin_ + a.hmax_support_;
      hmin = hmin ? std::max(*hmin, cand) : cand;
    }
    r.hmin_ = hmin;
    r.hmax_support_ = a.hmax_support_ + b.hmax_support_;
  }
  for (const auto& [ca, va] : a.c_) {
    for (const auto& [cb, vb] : b.c_) {
      Cell c = cell_add(ca, cb);
      if (!r.in_window(c)) continue;
      Int& slot = r.c_[c];
      slot += va * vb;
    }
  }
  std::erase_if(r.c_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BigradedSeries BigradedSeries::mul_geom(const Weight& mu, int d) const {
  Cell step = cell_of(mu, d);
  Rat hstep = cell_height(step);
  if (shape_.regime == Regime::TAdic) {
    if (d < 1) throw std::invalid_argument("t-adic geometric factor needs positive t-degree");
    if (!tmax_) throw std::invalid_argument("geometric factor requires a finite window");
  } else {
    if (!hmin_) throw std::invalid_argument("geometric factor requires a finite window");
    if (hstep > Rat(0)) throw std::invalid_argument("weight-adic geometric factor must not raise height");
    if (hstep == Rat(0) && !(tcap_ && d >= 1))
      throw std::invalid_argument("height-neutral geometric factor needs a t-cap and positive t-degree");
    if (tcap_ && d < 0)
      throw std::invalid_argument("t-lowering geometric factor under a t-cap would need data above the cap");
  }

  // Reachable cells: the union of the chains x + k*(mu,d) inside the window.
  struct Item {
    Cell c;
    Rat h;
  };
  std::vector<Item> cells;
  std::unordered_set<Cell, CellHash> seen;
  cells.reserve(c_.size());
  for (const auto& [c, v] : c_) {
    cells.push_back({c, cell_height(c)});
    seen.insert(c);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Cell n = cell_add(cells[i].c, step);
    if (!in_window(n) || !seen.insert(n).second) continue;
    cells.push_back({n, cell_height(n)});
  }

  // Topological order for out(x) = in(x) + out(x - step): ascending t in the
  // t-adic regime; descending height then ascending t in the weight-adic one
  // (height-neutral steps advance strictly in t).
  if (shape_.regime == Regime::TAdic) {
    std::sort(cells.begin(), cells.end(), [this](const Item& a, const Item& b) {
      if (a.c.t != b.c.t) return a.c.t < b.c.t;
      return lex_less_cell(a.c, b.c, shape_.rank);
    });
  } else {
    std::sort(cells.begin(), cells.end(), [this](const Item& a, const Item& b) {
      if (a.h != b.h) return a.h > b.h;
      if (a.c.t != b.c.t) return a.c.t < b.c.t;
      return lex_less_cell(a.c, b.c, shape_.rank);
    });
  }

  BigradedSeries r(shape_);
  r.set_window_like(*this);
  r.provenance_ = provenance_;
  for (const auto& item : cells) {
    Int v;
    if (auto it = c_.find(item.c); it != c_.end()) v = it->second;
    if (auto it = r.c_.find(cell_sub(item.c, step)); it != r.c_.end()) v += it->second;
    if (v != 0) r.c_.emplace(item.c, std::move(v));
  }
  return r;
}

BigradedSeries BigradedSeries::scale_weights(long long c) const {
  if (c < 1) throw std::invalid_argument("weight scaling factor must be >= 1");
  BigradedSeries r(shape_);
  r.provenance_ = provenance_;
  r.tmax_ = tmax_;
  r.tcap_ = tcap_;
  r.tmin_support_ = tmin_support_;
  if (hmin_) r.hmin_ = *hmin_ * Rat(c);
  r.hmax_support_ = hmax_support_ * Rat(c);
  for (const auto& [cell, v] : c_) {
    Cell n = cell;
    for (int i = 0; i < shape_.rank; ++i) {
      long long x = static_cast<long long>(cell.w[static_cast<std::size_t>(i)]) * c;
      if (x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("weight coordinate out of range after scaling");
      n.w[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(x);
    }
    r.c_.emplace(n, v);
  }
  return r;
}

BigradedSeries BigradedSeries::substitute_t_power(int p) const {
  if (p < 1) throw std::invalid_argument("t-power substitution exponent must be >= 1");
  BigradedSeries r(shape_);
  r.provenance_ = provenance_;
  r.hmin_ = hmin_;
  r.hmax_support_ = hmax_support_;
  // Degrees between consecutive multiples of p are exactly zero, so the
  // window extends to the last degree before the next unknown multiple.
  if (tmax_) r.tmax_ = *tmax_ * p + (p - 1);
  if (tcap_) r.tcap_ = *tcap_ * p + (p - 1);
  r.tmin_support_ = tmin_support_ * p;
  for (const auto& [cell, v] : c_) {
    Cell n = cell;
    n.t = cell.t * p;
    r.c_.emplace(n, v);
  }
  return r;
}

namespace {

struct DiffItem {
  Cell c;
  Rat h;
  Int lhs, rhs;
};

}  // namespace

ComparisonResult equal_on_window(const BigradedSeries& a, const BigradedSeries& b) {
  if (a.shape_ != b.shape_) throw std::invalid_argument("series shape mismatch in comparison");
  std::optional<int> tmax;
  if (a.tmax_ && b.tmax_) tmax = std::min(*a.tmax_, *b.tmax_);
  else tmax = a.tmax_ ? a.tmax_ : b.tmax_;
  std::optional<Rat> hmin;
  if (a.hmin_ && b.hmin_) hmin = std::max(*a.hmin_, *b.hmin_);
  else hmin = a.hmin_ ? a.hmin_ : b.hmin_;
  std::optional<int> tcap;
  if (a.tcap_ && b.tcap_) tcap = std::min(*a.tcap_, *b.tcap_);
  else tcap = a.tcap_ ? a.tcap_ : b.tcap_;

  auto inside = [&](const Cell& c, const BigradedSeries& s) {
    if (s.shape_.regime == Regime::TAdic) return !tmax || c.t <= *tmax;
    if (hmin && s.cell_height(c) < *hmin) return false;
    if (tcap && c.t > *tcap) return false;
    return true;
  };

  std::vector<DiffItem> diffs;
  for (const auto& [c, v] : a.c_) {
    if (!inside(c, a)) continue;
    auto it = b.c_.find(c);
    Int other = it == b.c_.end() ? Int(0) : it->second;
    if (v != other) diffs.push_back({c, a.cell_height(c), v, other});
  }
  for (const auto& [c, v] : b.c_) {
    if (!inside(c, b) || a.c_.count(c)) continue;
    diffs.push_back({c, b.cell_height(c), Int(0), v});
  }

  ComparisonResult res;
  res.equal = diffs.empty();
  if (!diffs.empty()) {
    auto best = std::min_element(diffs.begin(), diffs.end(),
                                 [&a](const DiffItem& x, const DiffItem& y) {
                                   if (x.h != y.h) return x.h < y.h;
                                   if (x.c.w != y.c.w) return lex_less_cell(x.c, y.c, a.shape_.rank);
                                   return x.c.t < y.c.t;
                                 });
    res.first_difference = ComparisonResult::Difference{
        a.weight_of(best->c), static_cast<int>(best->c.t), best->lhs, best->rhs};
  }
  return res;
}

std::optional<MonomialShift> detect_monomial_shift(const BigradedSeries& a,
                                                   const BigradedSeries& b) {
  if (a.shape_ != b.shape_) throw std::invalid_argument("series shape mismatch in shift detection");
  if (a.c_.empty() && b.c_.empty()) return MonomialShift{Weight(static_cast<std::size_t>(a.rank())), 0};
  if (a.c_.empty() || b.c_.empty()) return std::nullopt;

  // Extremal cell on the stable side of the window: lowest t-degree for the
  // t-adic regime, greatest height for the weight-adic one.  A true monomial
  // shift maps one extremal cell onto the other.
  auto extremal = [](const BigradedSeries& s) {
    const Cell* best = nullptr;
    Rat best_h(0);
    for (const auto& [c, v] : s.c_) {
      Rat h = s.cell_height(c);
      if (!best) {
        best = &c;
        best_h = h;
        continue;
      }
      bool better;
      if (s.shape_.regime == Regime::TAdic) {
        better = c.t != best->t ? c.t < best->t
                 : h != best_h  ? h < best_h
                                : lex_less_cell(c, *best, s.shape_.rank);
      } else {
        better = h != best_h    ? h > best_h
                 : c.t != best->t ? c.t < best->t
                                  : lex_less_cell(c, *best, s.shape_.rank);
      }
      if (better) {
        best = &c;
        best_h = h;
      }
    }
    return *best;
  };

  Cell ea = extremal(a), eb = extremal(b);
  Cell delta = cell_sub(ea, eb);

  // Translate b by the candidate shift, windows included, then compare.
  BigradedSeries shifted(b.shape_);
  shifted.provenance_ = b.provenance_;
  Rat dh = b.cell_height(delta);
  if (b.tmax_) shifted.tmax_ = *b.tmax_ + delta.t;
  if (b.hmin_) shifted.hmin_ = *b.hmin_ + dh;
  if (b.tcap_) shifted.tcap_ = *b.tcap_ + delta.t;
  shifted.tmin_support_ = b.tmin_support_ + delta.t;
  shifted.hmax_support_ = b.hmax_support_ + dh;
  for (const auto& [c, v] : b.c_) shifted.c_.emplace(cell_add(c, delta), v);

  if (!equal_on_window(a, shifted).equal) return std::nullopt;
  MonomialShift out;
  out.weight = a.weight_of(delta);
  out.t = delta.t;
  return out;
}

std::string to_string(const ComparisonResult::Difference& d) {
  std::string s = "at weight " + to_string(d.weight) + ", t^" + std::to_string(d.t) +
                  ": " + d.lhs.str() + " vs " + d.rhs.str();
  return s;
}

std::string to_string(const MonomialShift& m) {
  return "e^" + to_string(m.weight) + " t^" + std::to_string(m.t);
}

BigradedSeries geom_inverse(const SeriesShape& shape, const Weight& mu, int d,
                            std::optional<int> tmax, std::optional<Rat> hmin,
                            std::optional<int> tcap) {
  BigradedSeries one = BigradedSeries::monomial(shape, Weight(static_cast<std::size_t>(shape.rank)), 0);
  if (shape.regime == Regime::TAdic) {
    if (!tmax) throw std::invalid_argument("t-adic geometric series needs a tmax window");
    one = one.restrict_tmax(*tmax);
  } else {
    if (!hmin) throw std::invalid_argument("weight-adic geometric series needs an hmin window");
    one = one.restrict_hmin(*hmin);
    if (tcap) one = one.restrict_tcap(*tcap);
  }
  return one.mul_geom(mu, d);
}

}  // namespace qgchar
