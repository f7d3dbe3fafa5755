#pragma once

#include <string>
#include <vector>

#include "qgchar/numeric.hpp"

namespace qgchar {

// A weight, written in the basis of fundamental weights.  coords[i] is the
// pairing of the weight with the i-th simple coroot, so dominance means all
// coordinates are nonnegative and the i-th simple root has coordinates equal
// to the i-th column of the Cartan matrix.
struct Weight {
  std::vector<long long> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  long long operator[](std::size_t i) const { return coords[i]; }
  long long& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;
  bool is_dominant() const;

  bool operator==(const Weight&) const = default;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(long long k, const Weight& w);
};

// Strict lexicographic order on coordinates; used only to make orderings
// deterministic, it has no representation-theoretic meaning.
bool lex_less(const Weight& a, const Weight& b);

std::string to_string(const Weight& w);

// Symmetrizable Cartan datum: a finite index set with a symmetric bilinear
// pairing dot(i,j) such that dot(i,i) is one of 2,4,6 and the induced Cartan
// matrix entries 2*dot(i,j)/dot(i,i) are 0,-1,-2,-3 off the diagonal.  Only
// positive definite data (finite type) are accepted.
class CartanDatum {
 public:
  // Builds the datum of the named finite type.  Valid pairs: A(n>=1),
  // B(n>=2), C(n>=2), D(n>=4), E(6..8), F(4), G(2).  Short roots are
  // normalized to dot(i,i) = 2.
  static CartanDatum make(char type, int rank);

  // Builds a datum from an explicit dot matrix, validating all invariants.
  static CartanDatum from_dot_matrix(std::vector<std::vector<long long>> dot);

  int rank() const { return static_cast<int>(dot_.size()); }
  long long dot(int i, int j) const { return dot_[i][j]; }
  // Cartan matrix entry <i, alpha_j> = 2*dot(i,j)/dot(i,i).
  long long cartan(int i, int j) const { return 2 * dot_[i][j] / dot_[i][i]; }
  // Half square length dot(i,i)/2, in {1,2,3}.
  long long symmetrizer(int i) const { return dot_[i][i] / 2; }
  char type() const { return type_; }

 private:
  friend class RootDatum;
  CartanDatum() = default;
  std::vector<std::vector<long long>> dot_;
  char type_ = '?';  // '?' for data given by an explicit matrix
};

// A root, stored both as a weight (its image in the weight lattice) and as
// an integer vector over the simple roots.
struct Root {
  Weight weight;
  std::vector<long long> simple_coords;
  long long height() const;  // sum of simple_coords
};

// Rational linear functional on the weight lattice, evaluated coordinatewise
// against fundamental-weight coordinates.
class HeightFn {
 public:
  HeightFn() = default;
  explicit HeightFn(std::vector<Rat> coef) : coef_(std::move(coef)) {}
  Rat operator()(const Weight& w) const;
  std::size_t rank() const { return coef_.size(); }
  bool operator==(const HeightFn&) const = default;
  const std::vector<Rat>& coefficients() const { return coef_; }

 private:
  std::vector<Rat> coef_;
};

// Finite root datum of simply connected type: the full positive root system
// together with the combinatorial operations every other module consumes.
class RootDatum {
 public:
  static RootDatum build(char type, int rank);
  static RootDatum build(CartanDatum cartan);

  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }

  // Positive roots, graded by height and lexicographically within a height.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return positive_[simple_index_[i]]; }
  std::size_t num_positive_roots() const { return positive_.size(); }

  // Pairing of the i-th simple coroot with a weight.  With fundamental
  // coordinates this is the i-th coordinate; kept as a named operation so the
  // convention has a single home.
  long long pairing(int i, const Weight& x) const { return x[i]; }

  // rho has every coordinate 1; two_rho equals the sum of the positive
  // roots (checked at build time).
  const Weight& rho() const { return rho_; }
  const Weight& two_rho() const { return two_rho_; }

  // Height: the unique linear functional taking value 1 on every simple
  // root.  Rational away from the root lattice.
  const HeightFn& height_fn() const { return height_; }
  Rat height(const Weight& w) const { return height_(w); }

  // Relative height for a subset J of the simple roots: value 0 on simple
  // roots in J, value 1 on the others.  J = empty set gives back height_fn.
  HeightFn height_fn_relative(const std::vector<int>& J) const;

  // Simple reflection s_i(x) = x - <i,x> alpha_i.
  Weight reflect(int i, const Weight& x) const;

  // Membership test: returns +k+1 / -(k+1) if w is plus/minus the k-th
  // positive root, 0 otherwise.
  long long classify_root(const Weight& w) const;

 private:
  friend class WeylGroup;
  RootDatum() = default;
  void generate_roots();
  void compute_heights();

  CartanDatum cartan_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  Weight rho_, two_rho_;
  HeightFn height_;
};

}  // namespace qgchar
