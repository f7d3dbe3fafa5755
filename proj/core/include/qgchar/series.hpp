#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgchar/numeric.hpp"
#include "qgchar/root_datum.hpp"

namespace qgchar {

// Formal series in weight monomials e^mu times integer powers of t, with
// exact integer coefficients, truncated to a finite window.
//
// Two truncation regimes:
//   TAdic      -- exact for all t-degrees <= tmax (window) together with a
//                 declared lower bound tmin on the t-degrees of the true
//                 support.  Used for expansions whose factors raise t.
//   WeightAdic -- exact for all cells of height >= hmin (window) together
//                 with a declared upper bound hmax on the height of the true
//                 support, height being a fixed rational linear functional.
//                 An optional additional cap t <= tcap restricts exactness
//                 for products whose slices are infinite at fixed height.
//
// A series with no window (tmax/hmin absent) is exact everywhere; this is
// the state of finitely supported series before any geometric factor enters.

inline constexpr int kMaxSeriesRank = 8;

enum class Regime { TAdic, WeightAdic };

struct SeriesShape {
  Regime regime = Regime::TAdic;
  int rank = 0;
  HeightFn height;  // always carried; windows use it only in WeightAdic

  bool operator==(const SeriesShape&) const = default;
};

struct Cell {
  std::array<std::int32_t, kMaxSeriesRank> w{};
  std::int32_t t = 0;
  bool operator==(const Cell&) const = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (auto x : c.w) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)));
    mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.t)));
    return static_cast<std::size_t>(h);
  }
};

struct SeriesEntry {
  Weight weight;
  int t = 0;
  Int coeff;
};

// Outcome of an exact comparison over the common window.  The reported
// difference is the first differing cell in canonical order (height, then
// lexicographic weight, then t-degree).
struct ComparisonResult {
  bool equal = false;
  struct Difference {
    Weight weight;
    int t = 0;
    Int lhs, rhs;
  };
  std::optional<Difference> first_difference;
};

struct MonomialShift {
  Weight weight;
  int t = 0;
};

class BigradedSeries {
 public:
  BigradedSeries() = default;
  explicit BigradedSeries(SeriesShape shape);

  static BigradedSeries zero(SeriesShape shape) { return BigradedSeries(std::move(shape)); }
  static BigradedSeries monomial(SeriesShape shape, const Weight& mu, int t, Int coeff = Int(1));

  const SeriesShape& shape() const { return shape_; }
  Regime regime() const { return shape_.regime; }
  int rank() const { return shape_.rank; }

  // Window accessors; absent means exact everywhere in that direction.
  std::optional<int> window_tmax() const { return tmax_; }
  std::optional<Rat> window_hmin() const { return hmin_; }
  std::optional<int> window_tcap() const { return tcap_; }
  int support_tmin() const { return tmin_support_; }   // TAdic
  Rat support_hmax() const { return hmax_support_; }   // WeightAdic

  // Truncation: intersect the window with a half-space and drop the cells
  // that fall outside.  Weakening an exactness claim is always sound.
  BigradedSeries restrict_tmax(int tmax) const;
  BigradedSeries restrict_hmin(const Rat& hmin) const;
  BigradedSeries restrict_tcap(int tcap) const;

  std::size_t num_terms() const { return c_.size(); }
  bool is_zero_on_window() const { return c_.empty(); }

  // Coefficient of e^mu t^d.  Querying outside the window is refused: the
  // value there is not known.
  Int coefficient(const Weight& mu, int t) const;

  // All nonzero cells in canonical order.
  std::vector<SeriesEntry> entries() const;
  // Nonzero cells of one t-slice, canonically ordered.
  std::vector<SeriesEntry> slice_tdeg(int t) const;

  template <class F>
  void for_each_term(F&& f) const {
    for (const auto& [cell, coeff] : c_) f(weight_of(cell), static_cast<int>(cell.t), coeff);
  }

  // Adds coeff * e^mu t^d; silently drops cells outside the window.
  void add_term(const Weight& mu, int t, const Int& coeff);

  BigradedSeries& operator+=(const BigradedSeries& o);
  BigradedSeries& operator-=(const BigradedSeries& o);
  friend BigradedSeries operator+(BigradedSeries a, const BigradedSeries& b) { return a += b; }
  friend BigradedSeries operator-(BigradedSeries a, const BigradedSeries& b) { return a -= b; }
  BigradedSeries operator-() const;

  friend BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b);

  // Multiplication by the geometric series 1/(1 - e^mu t^d), the workhorse of
  // every product formula.  Admissibility:
  //   TAdic:      d >= 1 and a tmax window present;
  //   WeightAdic: height(mu) < 0 and an hmin window present, or
  //               height(mu) == 0 with d >= 1 under a tcap window;
  //               a tcap additionally requires d >= 0.
  // Runs in O(support) via the recurrence out(x) = in(x) + out(x - (mu,d)).
  BigradedSeries mul_geom(const Weight& mu, int d) const;

  // e^mu t^d -> e^(c*mu) t^d, c >= 1.
  BigradedSeries scale_weights(long long c) const;
  // e^mu t^d -> e^mu t^(p*d), p >= 1.
  BigradedSeries substitute_t_power(int p) const;

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  friend ComparisonResult equal_on_window(const BigradedSeries& a, const BigradedSeries& b);
  friend std::optional<MonomialShift> detect_monomial_shift(const BigradedSeries& a,
                                                            const BigradedSeries& b);

 private:
  Cell cell_of(const Weight& mu, int t) const;
  Weight weight_of(const Cell& c) const;
  Rat cell_height(const Cell& c) const;
  bool in_window(const Cell& c) const;
  void set_window_like(const BigradedSeries& o);

  SeriesShape shape_;
  std::optional<int> tmax_;
  std::optional<Rat> hmin_;
  std::optional<int> tcap_;
  int tmin_support_ = 0;
  Rat hmax_support_ = Rat(0);
  std::string provenance_;
  std::unordered_map<Cell, Int, CellHash> c_;
};

// Standalone geometric series sum_{k>=0} (e^mu t^d)^k on the given window.
BigradedSeries geom_inverse(const SeriesShape& shape, const Weight& mu, int d,
                            std::optional<int> tmax, std::optional<Rat> hmin,
                            std::optional<int> tcap = std::nullopt);

// Canonical JSON form: metadata plus terms sorted by (height, lexicographic
// weight, t-degree), with arbitrary precision coefficients as strings.
std::string canonical_json(const BigradedSeries& s);

std::string to_string(const ComparisonResult::Difference& d);
std::string to_string(const MonomialShift& m);

}  // namespace qgchar
