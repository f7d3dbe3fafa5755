#pragma once

#include <string>
#include <vector>

#include "qgchar/formulas.hpp"

namespace qgchar {

// Complete rank-one picture: every simple character of the small quantum
// sl2 factors as (restricted simple) x (Frobenius twist of an sl2 character),
// and the quasi-Verma modules have explicit simple filtrations.  Weights are
// identified with integers via the single fundamental coordinate, so the
// simple root has weight 2 and height 1.

// Character of the simple module L(mu), mu arbitrary, expanded down to the
// coordinate floor (t-degree is identically 0).  mu decomposes uniquely as
// k + ell*m with 0 <= k < ell; the Frobenius factor is the finite sl2
// character of m for m >= 0 and the corresponding simple Verma expansion for
// m <= -1.
BigradedSeries sl2_simple_character(long long mu, long long ell, long long coord_floor);

// Character of the quasi-Verma module with highest weight mu: e^mu/(1-e^{-2}).
// Both the extended and the simple quasi-Verma have this character; they
// differ in how the simples below stack up.
BigradedSeries sl2_verma_character(long long mu, long long ell, long long coord_floor);

struct Sl2CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // first difference when failing
};

struct Sl2Report {
  long long ell = 0;
  long long kmax = 0;
  std::vector<Sl2CheckLine> lines;
  bool all_pass = true;
};

// Verifies, for k = 0..kmax, the simple filtrations of the extended and
// simple quasi-Verma modules at highest weights k*ell and s.(k*ell), and the
// exact sequence relating them to the Weyl module W(k*ell).  ell must be an
// odd number >= 3; the expansion window reaches down to coordinate
// -depth_mult*ell.
Sl2Report run_sl2_suite(long long ell, long long kmax, long long depth_mult = 50);

}  // namespace qgchar
