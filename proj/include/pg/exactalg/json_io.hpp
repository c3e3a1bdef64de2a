#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pg/exactalg/poly_matrix.hpp"

namespace pg {

using json = nlohmann::json;

inline json term_json(const Term<Rational>& t) {
  return json{{"c", t.coeff.str()}, {"e", t.mono.exponents()}};
}

/// {"vars":[...], "terms":[{"c":"num/den","e":[...]}, ...]} in canonical term order.
inline json to_json(const QPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back(term_json(t));
  return json{{"vars", p.vars()->names()}, {"terms", terms}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string, got " + j.dump());
}

inline QPoly terms_from_json(const json& terms, const Vars& vars) {
  if (!terms.is_array()) throw InputError("polynomial 'terms' must be an array");
  std::vector<Term<Rational>> out;
  for (const auto& t : terms) {
    if (!t.contains("c") || !t.contains("e")) throw InputError("term needs 'c' and 'e'");
    auto e = t.at("e").get<std::vector<unsigned>>();
    if (e.size() != vars->size()) throw InputError("exponent vector length does not match vars");
    out.push_back({Monomial(e), rational_from_json(t.at("c"))});
  }
  return QPoly(vars, std::move(out));
}

inline QPoly poly_from_json(const json& j) {
  if (!j.contains("vars") || !j.contains("terms")) throw InputError("polynomial JSON needs 'vars' and 'terms'");
  auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  return terms_from_json(j.at("terms"), vars);
}

/// Same as poly_from_json but re-homed onto an existing ring.
inline QPoly poly_from_json(const json& j, const Vars& vars) {
  if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != vars->names())
    return poly_from_json(j).embed(vars);
  return terms_from_json(j.at("terms"), vars);
}

/// Row-major nested arrays; constant entries as "num/den" strings.
inline json to_json(const PolyMatrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_constant()) {
        row.push_back(e.constant_term().str());
      } else {
        json terms = json::array();
        for (const auto& t : e.terms()) terms.push_back(term_json(t));
        row.push_back(terms);
      }
    }
    rows.push_back(row);
  }
  return json{{"vars", m.vars()->names()}, {"rows", rows}};
}

inline Matrix<Rational> constant_matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw InputError("matrix rows must be an array");
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_from_json(e));
    out.push_back(std::move(row));
  }
  return Matrix<Rational>::from_rows(out);
}

}  // namespace pg
