#pragma once

#include <string>
#include <vector>

#include "qgchar/formulas.hpp"

namespace qgchar {

// Quasi-BGG complex attached to a dominant weight lambda: one quasi-Verma
// term per Weyl group element, placed in homological degree l(w) with
// highest weight w.(ell*lambda), and one arrow per Bruhat cover carrying a
// sign.  Signs are chosen so that every length-two interval (a "square",
// which always has exactly two middle elements) has sign product -1, which
// is exactly the condition d^2 = 0 for arrow-wise composition.
struct BGGTerm {
  int w = 0;
  int degree = 0;           // = l(w)
  Weight highest_weight;    // w . (ell*lambda)
};

struct BGGArrow {
  int from = 0;  // term index, degree k
  int to = 0;    // term index, degree k+1
  int sign = 1;  // +1 or -1
};

struct BGGComplex {
  Weight lambda;
  long long ell = 0;
  std::vector<BGGTerm> terms;    // sorted by (degree, element index)
  std::vector<BGGArrow> arrows;  // sorted by (from, to)
  int num_degrees = 0;
};

// Builds the complex and assigns signs.  The sign system is the solution of
// the linear system over GF(2) with one unknown per arrow and one equation
// per square, edges eliminated in their sorted order and free edges set to
// +1; the result is deterministic and verified square by square.
BGGComplex build_bgg_complex(const FormulaContext& ctx, const Weight& lambda);

// Checks sum of signed paths between every pair of terms two degrees apart.
bool bgg_d_squared_vanishes(const FormulaContext& ctx, const BGGComplex& c);

// Euler characteristic sum_k (-1)^k sum_{l(w)=k} ch M(w.(ell*lambda)) on the
// context window; equals the Weyl module character of ell*lambda.
BigradedSeries bgg_euler_character(const FormulaContext& ctx, const Weight& lambda);

// Deterministic Graphviz rendering: nodes labeled by reduced words and
// highest weights, arrows labeled by sign.
std::string emit_bgg_dot(const FormulaContext& ctx, const BGGComplex& c);

}  // namespace qgchar
