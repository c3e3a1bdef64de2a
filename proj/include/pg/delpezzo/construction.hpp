#pragma once

#include <string>
#include <vector>

#include "pg/delpezzo/factor.hpp"
#include "pg/delpezzo/region.hpp"
#include "pg/exactalg/linalg.hpp"

namespace pg {

/// Outcome of one named verification step.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // what failed, empty on success
  json detail = json::object();
};

inline json to_json(const Check& c) {
  json j{{"name", c.name}, {"pass", c.pass}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline bool all_pass(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

/// Facets distinct, linear facets linear, surface without linear factors.
inline std::vector<Check> verify_region_shape(const RegionSpec& r) {
  std::vector<Check> out;
  Check distinct{"facets_distinct", true, {}, {}};
  for (std::size_t i = 0; i < r.facets.size() && distinct.pass; ++i) {
    const auto& f = r.facets[i];
    if (!same_vars(f.poly.vars(), r.u) || !f.poly.is_homogeneous() || f.poly.degree() < 1) {
      distinct = {"facets_distinct", false, "facet " + f.name + " is not a nonconstant form in the region coordinates", {}};
      break;
    }
    if (f.name != r.surface && f.poly.degree() != 1) {
      distinct = {"facets_distinct", false, "facet " + f.name + " should be linear", {}};
      break;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (primitive_integer(f.poly) == primitive_integer(r.facets[j].poly)) {
        distinct = {"facets_distinct", false, "facets " + r.facets[j].name + " and " + f.name + " coincide", {}};
        break;
      }
  }
  out.push_back(distinct);
  if (!r.surface.empty() && distinct.pass) {
    auto lf = linear_factors(r.facet(r.surface).poly);
    Check irr{"surface_irreducible", lf.empty(), {}, {}};
    if (!lf.empty()) irr.witness = "linear factor " + lf.front().str();
    out.push_back(irr);
  }
  return out;
}

/// The plane blow-up data: incidences, the surface identity and general
/// position of the six points.
inline std::vector<Check> verify_construction(const RegionSpec& r) {
  std::vector<Check> out;
  if (!r.has_blowup()) return out;

  Check inc{"incidence", true, {}, {}};
  for (std::size_t i = 0; i < r.cubics.size() && inc.pass; ++i)
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      const auto& p = r.points[k];
      auto v = r.cubics[i].evaluate({p[0], p[1], p[2]});
      if (!v.is_zero()) {
        inc.pass = false;
        inc.witness = "c" + std::to_string(i) + "(" + r.point_names[k] + ") = " + v.str();
        break;
      }
    }
  out.push_back(inc);

  Check surf{"surface_identity", true, {}, {}};
  if (r.surface.empty()) {
    surf = {"surface_identity", false, "region has no surface facet", {}};
  } else {
    std::map<std::string, QPoly> m;
    for (std::size_t i = 0; i < r.u->size(); ++i) m.insert_or_assign((*r.u)[i], r.cubics[i] * r.map_scale[i]);
    auto img = substitute(r.facet(r.surface).poly, m, r.plane);
    if (!img.is_zero()) {
      surf.pass = false;
      surf.witness = r.surface + "(cubic map) has " + std::to_string(img.size()) + " nonzero terms, leading " +
                     QPoly(img.vars(), std::vector<Term<Rational>>{img.leading_term()}).str();
    }
  }
  out.push_back(surf);

  Check indep{"cubics_independent", true, {}, {}};
  {
    std::vector<std::vector<unsigned>> monos;
    for (const auto& c : r.cubics)
      for (const auto& t : c.terms())
        if (std::find(monos.begin(), monos.end(), t.mono.exponents()) == monos.end()) monos.push_back(t.mono.exponents());
    Matrix<Rational> a(r.cubics.size(), monos.size());
    for (std::size_t i = 0; i < r.cubics.size(); ++i)
      for (std::size_t j = 0; j < monos.size(); ++j) a(i, j) = r.cubics[i].coeff(Monomial(monos[j]));
    auto rk = rank(a);
    if (rk != r.cubics.size()) indep = {"cubics_independent", false, "rank " + std::to_string(rk), {}};
  }
  out.push_back(indep);

  Check col{"no_three_collinear", true, {}, {}};
  for (const auto& s : subsets(r.points.size(), 3)) {
    Matrix<Rational> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = r.points[s[i]][j];
    if (determinant(m).is_zero()) {
      col.pass = false;
      col.witness = r.point_names[s[0]] + "," + r.point_names[s[1]] + "," + r.point_names[s[2]] + " are collinear";
      break;
    }
  }
  out.push_back(col);

  Check conic{"not_on_conic", true, {}, {}};
  if (r.points.size() >= 6) {
    Matrix<Rational> m(r.points.size(), 6);
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const auto& p = r.points[i];
      Rational row[6] = {p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0] * p[2], p[1] * p[2], p[2] * p[2]};
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    auto rk = rank(m);
    if (rk < 6) {
      conic.pass = false;
      conic.witness = "the points lie on a conic (rank " + std::to_string(rk) + ")";
    }
  }
  out.push_back(conic);
  return out;
}

}  // namespace pg
