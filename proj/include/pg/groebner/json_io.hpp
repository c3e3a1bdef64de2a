#pragma once

#include "pg/exactalg/json_io.hpp"
#include "pg/groebner/ideal.hpp"

namespace pg {

/// {"vars":[...], "gens":[<poly>, ...]}
inline json to_json(const QIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return json{{"vars", ideal.vars()->names()}, {"gens", gens}};
}

inline QIdeal ideal_from_json(const json& j) {
  if (!j.contains("vars") || !j.contains("gens")) throw InputError("ideal JSON needs 'vars' and 'gens'");
  auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  std::vector<QPoly> gens;
  for (const auto& g : j.at("gens")) gens.push_back(poly_from_json(g, vars));
  return QIdeal(vars, std::move(gens));
}

inline json basis_to_json(const GroebnerBasis<Rational>& gb) {
  json polys = json::array();
  for (const auto& g : gb.polys) polys.push_back(to_json(g.with_order(MonomialOrder::grevlex())));
  return json{{"vars", gb.vars->names()}, {"order", gb.order.name()}, {"basis", polys}};
}

inline GroebnerBasis<Rational> basis_from_json(const json& j) {
  auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  auto ord = MonomialOrder::parse(j.at("order").get<std::string>());
  std::vector<QPoly> polys;
  for (const auto& g : j.at("basis")) polys.push_back(poly_from_json(g, vars).with_order(ord));
  return {ord, vars, std::move(polys)};
}

inline json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

/// {"dim":d, "degree":e, "genus":g or null, "hp":["c0","c1",...]}
inline json to_json(const HilbertData& h) {
  json hp = json::array();
  for (const auto& c : h.polynomial.coeffs()) hp.push_back(c.str());
  json genus = h.genus ? integer_json(*h.genus) : json(nullptr);
  return json{{"dim", h.dimension}, {"degree", integer_json(h.degree)}, {"genus", genus}, {"hp", hp}};
}

}  // namespace pg
