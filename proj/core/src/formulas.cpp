#include "qgchar/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgchar {

namespace {

std::string datum_label(const RootDatum& d) {
  std::ostringstream os;
  os << d.cartan().type() << d.rank();
  return os.str();
}

bool root_supported_on(const Root& r, const std::vector<bool>& mask) {
  for (std::size_t i = 0; i < r.simple_coords.size(); ++i)
    if (r.simple_coords[i] != 0 && !mask[i]) return false;
  return true;
}

}  // namespace

bool default_ell_admissible(const CartanDatum& datum, long long ell) {
  if (ell < 1 || ell % 2 == 0) return false;
  for (int i = 0; i < datum.rank(); ++i)
    if (std::gcd(ell, datum.symmetrizer(i)) != 1) return false;
  return true;
}

FormulaContext::FormulaContext(const RootDatum& datum, long long ell, int tmax, Rat hmin,
                               bool enforce_ell)
    : group_(WeylGroup::enumerate(datum)), ell_(ell), tmax_(tmax), hmin_(std::move(hmin)) {
  if (enforce_ell && !default_ell_admissible(datum.cartan(), ell)) {
    std::ostringstream os;
    os << "ell=" << ell << " is not admissible for type " << datum_label(datum)
       << " (must be odd and coprime to the half square lengths)";
    throw std::invalid_argument(os.str());
  }
}

SeriesShape FormulaContext::t_adic_shape() const {
  return SeriesShape{Regime::TAdic, datum().rank(), datum().height_fn()};
}

SeriesShape FormulaContext::weight_adic_shape() const {
  return SeriesShape{Regime::WeightAdic, datum().rank(), datum().height_fn()};
}

SeriesShape FormulaContext::weight_adic_shape(HeightFn h) const {
  return SeriesShape{Regime::WeightAdic, datum().rank(), std::move(h)};
}

BigradedSeries poincare_numerator(const SeriesShape& shape, const WeylGroup& group, int p) {
  BigradedSeries s = BigradedSeries::zero(shape);
  Weight zero(static_cast<std::size_t>(shape.rank));
  for (std::size_t w = 0; w < group.size(); ++w)
    s.add_term(zero, p * group.length(static_cast<int>(w)), Int(1));
  return s;
}

BigradedSeries kostant_character(const FormulaContext& ctx) {
  BigradedSeries s =
      poincare_numerator(ctx.t_adic_shape(), ctx.group(), 1).restrict_tmax(ctx.tmax());
  for (const Root& a : ctx.datum().positive_roots()) {
    s = s.mul_geom(-a.weight, 1);
    s = s.mul_geom(a.weight, 1);
  }
  std::ostringstream os;
  os << "kostant " << datum_label(ctx.datum()) << " tmax=" << ctx.tmax();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries ext_small_character(const FormulaContext& ctx) {
  BigradedSeries s = kostant_character(ctx).scale_weights(ctx.ell());
  std::ostringstream os;
  os << "ext-small " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " tmax=" << ctx.tmax();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries ext_borel_character(const FormulaContext& ctx, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("Borel sign must be +1 or -1");
  Weight zero(static_cast<std::size_t>(ctx.datum().rank()));
  BigradedSeries s =
      BigradedSeries::monomial(ctx.t_adic_shape(), zero, 0).restrict_tmax(ctx.tmax());
  for (const Root& a : ctx.datum().positive_roots())
    s = s.mul_geom((-sign * ctx.ell()) * a.weight, 2);
  std::ostringstream os;
  os << "ext-borel" << (sign > 0 ? "+" : "-") << " " << datum_label(ctx.datum())
     << " ell=" << ctx.ell() << " tmax=" << ctx.tmax();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries ext_uminus_character(const FormulaContext& ctx) {
  BigradedSeries s = BigradedSeries::zero(ctx.t_adic_shape());
  const Weight& rho = ctx.datum().rho();
  for (std::size_t w = 0; w < ctx.group().size(); ++w)
    s.add_term(rho - ctx.group().act(static_cast<int>(w), rho),
               ctx.group().length(static_cast<int>(w)), Int(1));
  s = s.restrict_tmax(ctx.tmax());
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(ctx.ell() * a.weight, 2);
  std::ostringstream os;
  os << "ext-uminus " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " tmax=" << ctx.tmax();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries ext_tilde_character(const FormulaContext& ctx) {
  BigradedSeries s =
      poincare_numerator(ctx.t_adic_shape(), ctx.group(), 2).restrict_tmax(ctx.tmax());
  for (const Root& a : ctx.datum().positive_roots()) {
    s = s.mul_geom((-ctx.ell()) * a.weight, 2);
    s = s.mul_geom(ctx.ell() * a.weight, 2);
  }
  std::ostringstream os;
  os << "ext-tilde " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " tmax=" << ctx.tmax();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries semiinf_tilde_character(const FormulaContext& ctx) {
  const int nroots = static_cast<int>(ctx.datum().num_positive_roots());
  BigradedSeries top = BigradedSeries::monomial(
      ctx.weight_adic_shape(), (-ctx.ell()) * ctx.datum().two_rho(), -nroots);
  BigradedSeries s = poincare_numerator(ctx.weight_adic_shape(), ctx.group(), 2) * top;
  s = s.restrict_hmin(ctx.hmin());
  for (const Root& a : ctx.datum().positive_roots()) {
    s = s.mul_geom((-ctx.ell()) * a.weight, -2);
    s = s.mul_geom((-ctx.ell()) * a.weight, 2);
  }
  std::ostringstream os;
  os << "semiinf-tilde " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " hmin=" << ctx.hmin().numerator() << "/" << ctx.hmin().denominator();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries local_cohomology_character(const FormulaContext& ctx) {
  BigradedSeries s = poincare_numerator(ctx.weight_adic_shape(), ctx.group(), 1)
                         .restrict_hmin(ctx.hmin());
  for (const Root& a : ctx.datum().positive_roots()) {
    // sum_{k>=1} e^{-ka} t^{-k} = e^{-a} t^{-1} / (1 - e^{-a} t^{-1})
    s = s * BigradedSeries::monomial(ctx.weight_adic_shape(), -a.weight, -1);
    s = s.mul_geom(-a.weight, -1);
  }
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(-a.weight, 1);
  std::ostringstream os;
  os << "local-cohomology " << datum_label(ctx.datum()) << " hmin="
     << ctx.hmin().numerator() << "/" << ctx.hmin().denominator();
  s.set_provenance(os.str());
  return s;
}

BigradedSeries parabolic_character(const FormulaContext& ctx, const std::vector<int>& J) {
  const int n = ctx.datum().rank();
  std::vector<bool> in_J(static_cast<std::size_t>(n), false);
  for (int j : J) {
    if (j < 0 || j >= n) throw std::invalid_argument("parabolic subset index out of range");
    in_J[static_cast<std::size_t>(j)] = true;
  }
  const std::size_t jsize = static_cast<std::size_t>(std::count(in_J.begin(), in_J.end(), true));
  std::ostringstream prov;
  prov << "parabolic " << datum_label(ctx.datum()) << " J={";
  for (int i = 0, first = 1; i < n; ++i)
    if (in_J[static_cast<std::size_t>(i)]) {
      if (!first) prov << ',';
      prov << i;
      first = 0;
    }
  prov << '}';

  if (jsize == static_cast<std::size_t>(n)) {
    // Full parabolic: every factor raises t, so the expansion is t-adic.
    BigradedSeries s =
        poincare_numerator(ctx.t_adic_shape(), ctx.group(), 1).restrict_tmax(ctx.tmax());
    for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(a.weight, 1);
    for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(-a.weight, 1);
    s.set_provenance(prov.str());
    return s;
  }

  SeriesShape shape = ctx.weight_adic_shape(ctx.datum().height_fn_relative(J));
  BigradedSeries s = poincare_numerator(shape, ctx.group(), 1).restrict_hmin(ctx.hmin());
  // Inverted factors first: they are the only ones that lower t, and they
  // must act before any t-cap is imposed.
  for (const Root& a : ctx.datum().positive_roots()) {
    if (root_supported_on(a, in_J)) continue;
    s = s * BigradedSeries::monomial(shape, -a.weight, -1);
    s = s.mul_geom(-a.weight, -1);
  }
  // The remaining factors only raise t.  For nonempty proper J the slices at
  // fixed relative height are infinite, so exactness is kept on a t-box.
  if (jsize > 0) s = s.restrict_tcap(ctx.tmax());
  for (const Root& a : ctx.datum().positive_roots())
    if (root_supported_on(a, in_J)) s = s.mul_geom(a.weight, 1);
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(-a.weight, 1);
  s.set_provenance(prov.str());
  return s;
}

BigradedSeries weyl_module_character(const FormulaContext& ctx, const Weight& lambda,
                                     const Rat& extra_depth) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("Weyl module weight must be dominant");
  const RootDatum& datum = ctx.datum();
  Rat floor_h = datum.height(ctx.group().act(ctx.group().longest(), lambda)) - extra_depth;
  BigradedSeries s = BigradedSeries::zero(ctx.weight_adic_shape());
  for (std::size_t w = 0; w < ctx.group().size(); ++w) {
    int len = ctx.group().length(static_cast<int>(w));
    s.add_term(ctx.group().dot_act(static_cast<int>(w), lambda), 0,
               len % 2 == 0 ? Int(1) : Int(-1));
  }
  s = s.restrict_hmin(floor_h);
  for (const Root& a : datum.positive_roots()) s = s.mul_geom(-a.weight, 0);
  // The alternating numerator must telescope: nothing survives below the
  // lowest weight w0(lambda).
  Rat lowest = datum.height(ctx.group().act(ctx.group().longest(), lambda));
  for (const auto& e : s.entries())
    if (datum.height(e.weight) < lowest)
      throw std::logic_error("Weyl module expansion has terms below its lowest weight");
  std::ostringstream os;
  os << "weyl-module " << datum_label(datum) << " lambda=" << to_string(lambda);
  s.set_provenance(os.str());
  return s;
}

BigradedSeries quasi_verma_character(const FormulaContext& ctx, int w, const Weight& lambda) {
  if (w < 0 || static_cast<std::size_t>(w) >= ctx.group().size())
    throw std::invalid_argument("Weyl element index out of range");
  BigradedSeries s = BigradedSeries::monomial(ctx.weight_adic_shape(),
                                              ctx.group().dot_act(w, lambda), 0)
                         .restrict_hmin(ctx.hmin());
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom(-a.weight, 0);
  std::ostringstream os;
  os << "quasi-verma " << datum_label(ctx.datum()) << " w=" << w
     << " lambda=" << to_string(lambda);
  s.set_provenance(os.str());
  return s;
}

namespace {

// sum_w e^{w(ell*lambda)} t^{2l(w)} /
//   [prod_{w(a)>0}(1-t^2 e^{-ell*a}) prod_{w(a)<0}(1-t^{-2} e^{-ell*a})]
// expanded on the context window; prefactors differ between the plain and
// shifted variants.
BigradedSeries semiinf_weyl_sum(const FormulaContext& ctx, const Weight& lambda) {
  const RootDatum& datum = ctx.datum();
  BigradedSeries acc = BigradedSeries::zero(ctx.weight_adic_shape());
  acc = acc.restrict_hmin(ctx.hmin());
  Weight ell_lambda = ctx.ell() * lambda;
  for (std::size_t w = 0; w < ctx.group().size(); ++w) {
    BigradedSeries term = BigradedSeries::monomial(
        ctx.weight_adic_shape(), ctx.group().act(static_cast<int>(w), ell_lambda),
        2 * ctx.group().length(static_cast<int>(w)));
    term = term.restrict_hmin(ctx.hmin());
    std::vector<bool> inverted(datum.num_positive_roots(), false);
    for (int k : ctx.group().inversions(static_cast<int>(w)))
      inverted[static_cast<std::size_t>(k)] = true;
    for (std::size_t k = 0; k < datum.num_positive_roots(); ++k) {
      const Weight& a = datum.positive_roots()[k].weight;
      term = term.mul_geom((-ctx.ell()) * a, inverted[k] ? -2 : 2);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

BigradedSeries semiinf_weyl_character(const FormulaContext& ctx, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("semiinfinite Weyl character needs a dominant weight");
  const int nroots = static_cast<int>(ctx.datum().num_positive_roots());
  BigradedSeries s = semiinf_weyl_sum(ctx, lambda) *
                     BigradedSeries::monomial(ctx.weight_adic_shape(),
                                              Weight(static_cast<std::size_t>(ctx.datum().rank())),
                                              -nroots);
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom((-ctx.ell()) * a.weight, 0);
  std::ostringstream os;
  os << "semiinf-weyl " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " lambda=" << to_string(lambda);
  s.set_provenance(os.str());
  return s;
}

BigradedSeries semiinf_weyl_shifted_character(const FormulaContext& ctx, int w,
                                              const Weight& lambda) {
  if (w < 0 || static_cast<std::size_t>(w) >= ctx.group().size())
    throw std::invalid_argument("Weyl element index out of range");
  if (!lambda.is_dominant())
    throw std::invalid_argument("semiinfinite Weyl character needs a dominant weight");
  Weight anchor = ctx.ell() * lambda +
                  ctx.group().dot_act(w, Weight(static_cast<std::size_t>(ctx.datum().rank())));
  if (!anchor.is_dominant())
    throw std::invalid_argument("shifted variant needs ell*lambda + w.0 dominant");
  const int nroots = static_cast<int>(ctx.datum().num_positive_roots());
  BigradedSeries s = semiinf_weyl_sum(ctx, lambda) *
                     BigradedSeries::monomial(ctx.weight_adic_shape(),
                                              Weight(static_cast<std::size_t>(ctx.datum().rank())),
                                              -nroots + ctx.group().length(w));
  for (const Root& a : ctx.datum().positive_roots()) s = s.mul_geom((-ctx.ell()) * a.weight, 0);
  std::ostringstream os;
  os << "semiinf-weyl-shifted " << datum_label(ctx.datum()) << " ell=" << ctx.ell()
     << " w=" << w << " lambda=" << to_string(lambda);
  s.set_provenance(os.str());
  return s;
}

}  // namespace qgchar
