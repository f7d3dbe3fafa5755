#include "qgchar/root_datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgchar {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator*(long long k, const Weight& w) {
  Weight r(w);
  for (auto& c : r.coords) c *= k;
  return r;
}

bool lex_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Exact Gaussian elimination, used for the height functionals and for the
// positive definiteness check.  Throws if the matrix is singular.
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix in height solve");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rat(0)) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

Rat leading_minor_det(const std::vector<std::vector<long long>>& a, int k) {
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = Rat(a[i][j]);
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == k) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < k; ++row) {
      if (m[row][col] == Rat(0)) continue;
      Rat f = m[row][col] / m[col][col];
      for (int j = col; j < k; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

void add_edge(std::vector<std::vector<long long>>& dot, int i, int j, long long v) {
  dot[i][j] = v;
  dot[j][i] = v;
}

}  // namespace

CartanDatum CartanDatum::make(char type, int rank) {
  auto bad = [&]() {
    std::ostringstream os;
    os << "invalid Cartan type " << type << rank;
    throw std::invalid_argument(os.str());
  };
  const int n = rank;
  std::vector<std::vector<long long>> dot;
  auto chain = [&](long long diag, long long off) {
    dot.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) dot[i][i] = diag;
    for (int i = 0; i + 1 < n; ++i) add_edge(dot, i, i + 1, off);
  };
  switch (type) {
    case 'A':
      if (n < 1) bad();
      chain(2, -1);
      break;
    case 'B':  // last simple root short
      if (n < 2) bad();
      chain(4, -2);
      dot[n - 1][n - 1] = 2;
      break;
    case 'C':  // last simple root long
      if (n < 2) bad();
      chain(2, -1);
      dot[n - 1][n - 1] = 4;
      add_edge(dot, n - 2, n - 1, -2);
      break;
    case 'D':
      if (n < 4) bad();
      chain(2, 0);
      for (int i = 0; i + 1 < n - 1; ++i) add_edge(dot, i, i + 1, -1);
      add_edge(dot, n - 3, n - 1, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      chain(2, 0);
      // Node 1 starts a chain 1-3-4-5-..., node 2 hangs off node 4.
      add_edge(dot, 0, 2, -1);
      for (int i = 2; i + 1 < n; ++i) add_edge(dot, i, i + 1, -1);
      add_edge(dot, 1, 3, -1);
      break;
    case 'F':
      if (n != 4) bad();
      dot = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'G':
      if (n != 2) bad();
      dot = {{2, -3}, {-3, 6}};
      break;
    default:
      bad();
  }
  CartanDatum d = from_dot_matrix(std::move(dot));
  d.type_ = type;
  return d;
}

CartanDatum CartanDatum::from_dot_matrix(std::vector<std::vector<long long>> dot) {
  const std::size_t n = dot.size();
  if (n == 0) throw std::invalid_argument("empty Cartan datum");
  for (const auto& row : dot)
    if (row.size() != n) throw std::invalid_argument("dot matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    long long ii = dot[i][i];
    if (ii != 2 && ii != 4 && ii != 6)
      throw std::invalid_argument("diagonal dot entries must be 2, 4 or 6");
    for (std::size_t j = 0; j < n; ++j) {
      if (dot[i][j] != dot[j][i]) throw std::invalid_argument("dot matrix is not symmetric");
      if (i == j) continue;
      if (dot[i][j] > 0) throw std::invalid_argument("off-diagonal dot entries must be <= 0");
      if ((2 * dot[i][j]) % ii != 0)
        throw std::invalid_argument("dot matrix has non-integral Cartan entries");
      long long a = 2 * dot[i][j] / ii;
      if (a < -3) throw std::invalid_argument("Cartan entries must lie in {0,-1,-2,-3}");
    }
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (leading_minor_det(dot, static_cast<int>(k)) <= Rat(0))
      throw std::invalid_argument("dot matrix is not positive definite (not finite type)");
  CartanDatum d;
  d.dot_ = std::move(dot);
  return d;
}

long long Root::height() const {
  long long h = 0;
  for (long long c : simple_coords) h += c;
  return h;
}

Rat HeightFn::operator()(const Weight& w) const {
  if (w.rank() != coef_.size()) throw std::invalid_argument("height functional rank mismatch");
  Rat h(0);
  for (std::size_t i = 0; i < coef_.size(); ++i) h += coef_[i] * Rat(w[i]);
  return h;
}

RootDatum RootDatum::build(char type, int rank) {
  return build(CartanDatum::make(type, rank));
}

RootDatum RootDatum::build(CartanDatum cartan) {
  RootDatum d;
  d.cartan_ = std::move(cartan);
  d.generate_roots();
  d.compute_heights();
  return d;
}

// Closure of the simple roots under root strings.  Candidates alpha + alpha_i
// are accepted when the alpha_i-string through alpha continues upward, which
// is decided by the string length formula q = p - <i, alpha> with p read off
// from the already-generated lower part of the system.
void RootDatum::generate_roots() {
  const int n = rank();
  std::map<std::vector<long long>, int> index_of;
  auto make_simple = [&](int i) {
    Root r;
    r.simple_coords.assign(n, 0);
    r.simple_coords[i] = 1;
    r.weight = Weight(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) r.weight[k] = cartan_.cartan(k, i);
    return r;
  };
  for (int i = 0; i < n; ++i) {
    Root r = make_simple(i);
    index_of[r.simple_coords] = static_cast<int>(positive_.size());
    positive_.push_back(std::move(r));
  }

  // Process by height; every root of height h+1 is alpha + alpha_i for some
  // root alpha of height h.
  std::size_t begin = 0;
  constexpr long long kHeightCap = 1000;  // unreachable for validated finite type
  for (long long h = 1; begin < positive_.size(); ++h) {
    if (h > kHeightCap) throw std::logic_error("root generation failed to terminate");
    std::size_t end = positive_.size();
    for (std::size_t a = begin; a < end; ++a) {
      for (int i = 0; i < n; ++i) {
        Root cand = positive_[a];
        if (cand.height() == 1 && cand.simple_coords[static_cast<std::size_t>(i)] == 1)
          continue;  // 2*alpha_i is never a root
        long long p = 0;
        {
          std::vector<long long> down = positive_[a].simple_coords;
          while (true) {
            down[static_cast<std::size_t>(i)] -= 1;
            if (down[static_cast<std::size_t>(i)] < 0 || !index_of.count(down)) break;
            ++p;
          }
        }
        long long q = p - pairing(i, positive_[a].weight);
        if (q < 1) continue;
        cand.simple_coords[static_cast<std::size_t>(i)] += 1;
        if (index_of.count(cand.simple_coords)) continue;
        for (int k = 0; k < n; ++k) cand.weight[k] += cartan_.cartan(k, i);
        index_of[cand.simple_coords] = static_cast<int>(positive_.size());
        positive_.push_back(std::move(cand));
      }
    }
    begin = end;
  }

  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple_coords < b.simple_coords;
  });

  simple_index_.assign(n, -1);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const Root& r = positive_[k];
    if (r.height() == 1)
      for (int i = 0; i < n; ++i)
        if (r.simple_coords[static_cast<std::size_t>(i)] == 1) simple_index_[i] = static_cast<int>(k);
  }

  rho_ = Weight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho_[i] = 1;
  two_rho_ = Weight(static_cast<std::size_t>(n));
  for (const Root& r : positive_) two_rho_ += r.weight;
  if (two_rho_ != 2 * rho_) throw std::logic_error("sum of positive roots is not 2*rho");
}

void RootDatum::compute_heights() {
  const int n = rank();
  std::vector<std::vector<Rat>> at(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = Rat(cartan_.cartan(j, i));  // transpose
  height_ = HeightFn(solve_rational(at, std::vector<Rat>(n, Rat(1))));
}

HeightFn RootDatum::height_fn_relative(const std::vector<int>& J) const {
  const int n = rank();
  std::vector<bool> in_J(n, false);
  for (int j : J) {
    if (j < 0 || j >= n) throw std::invalid_argument("simple root index out of range");
    in_J[static_cast<std::size_t>(j)] = true;
  }
  std::vector<std::vector<Rat>> at(n, std::vector<Rat>(n));
  std::vector<Rat> rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = in_J[static_cast<std::size_t>(i)] ? Rat(0) : Rat(1);
    for (int j = 0; j < n; ++j) at[i][j] = Rat(cartan_.cartan(j, i));
  }
  return HeightFn(solve_rational(at, rhs));
}

Weight RootDatum::reflect(int i, const Weight& x) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("simple root index out of range");
  Weight r(x);
  long long c = pairing(i, x);
  const Weight& alpha = simple_root(i).weight;
  for (int k = 0; k < rank(); ++k) r[k] -= c * alpha[k];
  return r;
}

long long RootDatum::classify_root(const Weight& w) const {
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (positive_[k].weight == w) return static_cast<long long>(k) + 1;
    if (positive_[k].weight == -w) return -(static_cast<long long>(k) + 1);
  }
  return 0;
}

}  // namespace qgchar
