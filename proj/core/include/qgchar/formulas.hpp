#pragma once

#include <optional>
#include <vector>

#include "qgchar/series.hpp"
#include "qgchar/weyl.hpp"

namespace qgchar {

// Is ell admissible for the datum under the default policy: odd and coprime
// to every half square length d_i = dot(i,i)/2?
bool default_ell_admissible(const CartanDatum& datum, long long ell);

// Everything the character constructors need: the enumerated Weyl group (and
// through it the root datum), the quantum parameter ell, and the truncation
// windows.  tmax bounds t-adic expansions; hmin is the window floor for
// weight-adic ones (in units of the grading functional the formula uses).
class FormulaContext {
 public:
  FormulaContext(const RootDatum& datum, long long ell, int tmax, Rat hmin,
                 bool enforce_ell = true);

  const WeylGroup& group() const { return group_; }
  const RootDatum& datum() const { return group_.datum(); }
  long long ell() const { return ell_; }
  int tmax() const { return tmax_; }
  const Rat& hmin() const { return hmin_; }

  SeriesShape t_adic_shape() const;
  SeriesShape weight_adic_shape() const;
  SeriesShape weight_adic_shape(HeightFn h) const;

 private:
  WeylGroup group_;
  long long ell_;
  int tmax_;
  Rat hmin_;
};

// sum_w t^(p*l(w)) as a finitely supported series.
BigradedSeries poincare_numerator(const SeriesShape& shape, const WeylGroup& group, int p);

// Cohomology of the flag variety with coefficients in all symmetric powers:
// sum_w t^l(w) / prod_{a>0} (1-e^{-a}t)(1-e^{a}t).
BigradedSeries kostant_character(const FormulaContext& ctx);

// Ext algebra of the trivial module over the small quantum group: the
// Kostant character with all weights stretched by ell.
BigradedSeries ext_small_character(const FormulaContext& ctx);

// Ext of the trivial module over the small Borel in the ambient category:
// prod_{a>0} 1/(1-e^{-sign*ell*a}t^2); sign -1 gives the negative Borel
// (weights raised), sign +1 the positive one (weights lowered).
BigradedSeries ext_borel_character(const FormulaContext& ctx, int sign);

// Ext over the small quantum Borel of the negative part:
// (sum_w t^l(w) e^{rho-w(rho)}) * prod_{a>0} 1/(1-e^{ell*a}t^2).
BigradedSeries ext_uminus_character(const FormulaContext& ctx);

// The tilde Ext character:
// sum_w t^{2l(w)} / prod_{a>0} (1-e^{-ell*a}t^2)(1-e^{ell*a}t^2).
BigradedSeries ext_tilde_character(const FormulaContext& ctx);

// Semiinfinite cohomology of the tilde object, expanded weight-adically:
// t^{-#R+} e^{-2 ell rho} sum_w t^{2l(w)} /
//   prod_{a>0} (1-e^{-ell*a}t^{-2})(1-e^{-ell*a}t^2).
BigradedSeries semiinf_tilde_character(const FormulaContext& ctx);

// Local cohomology of the structure sheaf of the nilpotent cone along the
// zero section (no ell rescaling):
// prod_{a>0}(sum_{k>=1} e^{-ka}t^{-k}) * (sum_w t^{l(w)}) *
//   prod_{a>0} 1/(1-e^{-a}t).
BigradedSeries local_cohomology_character(const FormulaContext& ctx);

// Parabolic variant for a subset J of the simple roots (0-based indices):
// prod_{a in R+\RJ+}(sum_{k>=1} e^{-ka}t^{-k}) * prod_{a in RJ+} 1/(1-e^{a}t)
//   * (sum_w t^{l(w)}) * prod_{a>0} 1/(1-e^{-a}t).
// J = all simples expands t-adically and reproduces kostant_character;
// proper J expands along the relative height (0 on J, 1 elsewhere) with a
// t-cap of ctx.tmax when J is nonempty, since fixed-height slices are then
// infinite in t.
BigradedSeries parabolic_character(const FormulaContext& ctx, const std::vector<int>& J);

// Weyl module character at a dominant weight (t plays no role):
// sum_w (-1)^{l(w)} e^{w . lambda} / prod_{a>0}(1-e^{-a}).
// The numerator carries the alternating sign; without it the sum does not
// telescope to a finite character.  Expanded to height(w0(lambda)) minus
// extra_depth and checked to vanish below height(w0(lambda)).
BigradedSeries weyl_module_character(const FormulaContext& ctx, const Weight& lambda,
                                     const Rat& extra_depth = Rat(8));

// Quasi-Verma character e^{w . lambda} / prod_{a>0}(1-e^{-a}) on the
// context window.
BigradedSeries quasi_verma_character(const FormulaContext& ctx, int w, const Weight& lambda);

// Semiinfinite cohomology of a Weyl module, lambda dominant (ell applied
// internally):
// t^{-#R+} / prod_{a>0}(1-e^{-ell*a}) * sum_w e^{w(ell*lambda)} t^{2l(w)} /
//   [prod_{w(a)>0}(1-t^2 e^{-ell*a}) * prod_{w(a)<0}(1-t^{-2} e^{-ell*a})].
BigradedSeries semiinf_weyl_character(const FormulaContext& ctx, const Weight& lambda);

// Same sum with prefactor t^{-#R+ + l(w)}; requires ell*lambda + w.0
// dominant.
BigradedSeries semiinf_weyl_shifted_character(const FormulaContext& ctx, int w,
                                              const Weight& lambda);

}  // namespace qgchar
