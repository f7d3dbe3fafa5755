#include <sstream>

#include <json.hpp>

#include "qgchar/series.hpp"

namespace qgchar {

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace

std::string canonical_json(const BigradedSeries& s) {
  nlohmann::json j;
  j["regime"] = s.regime() == Regime::TAdic ? "t-adic" : "weight-adic";
  j["rank"] = s.rank();
  {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& c : s.shape().height.coefficients()) h.push_back(rat_str(c));
    j["height"] = std::move(h);
  }
  {
    nlohmann::json w;
    if (s.window_tmax()) w["tmax"] = *s.window_tmax();
    if (s.window_hmin()) w["hmin"] = rat_str(*s.window_hmin());
    if (s.window_tcap()) w["tcap"] = *s.window_tcap();
    j["window"] = std::move(w);
  }
  if (s.regime() == Regime::TAdic)
    j["support"] = {{"tmin", s.support_tmin()}};
  else
    j["support"] = {{"hmax", rat_str(s.support_hmax())}};
  if (!s.provenance().empty()) j["provenance"] = s.provenance();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& e : s.entries()) {
    nlohmann::json t;
    t["weight"] = e.weight.coords;
    t["t"] = e.t;
    t["coeff"] = e.coeff.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

}  // namespace qgchar
