#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/exactalg/json_io.hpp"
#include "pg/exactalg/parse.hpp"

namespace pg {

/// A boundary hypersurface of the region; `orientation` is +1 or -1 so that
/// orientation * poly >= 0 on the region.
struct Facet {
  std::string name;
  QPoly poly;
  int orientation = 1;
};

/// Semi-algebraic body in P^3 with six facets arranged like a cube: three
/// pairs of opposite facets. Optionally carries the plane blow-up data that
/// produces its cubic surface.
struct RegionSpec {
  std::string name;
  Vars u;
  std::size_t chart = 3;  // affine chart u_chart = 1
  std::vector<Facet> facets;
  std::array<std::pair<std::string, std::string>, 3> opposite;
  std::string surface;  // name of the non-linear facet, empty for a polytope
  std::string reference_vertex;  // facet triple "A,B,C" whose residue fixes the adjoint scale
  // The coprime integer adjoint itself, up to sign, is the canonical numerator;
  // otherwise the numerator is rescaled by the reference residue.
  bool integral_adjoint = false;

  Vars plane;
  std::vector<std::string> point_names;
  std::vector<std::array<Rational, 3>> points;
  std::vector<QPoly> cubics;
  std::vector<Rational> map_scale;  // u_i = map_scale[i] * c_i lands on the surface

  const Facet& facet(const std::string& name) const {
    for (const auto& f : facets)
      if (f.name == name) return f;
    throw InputError("unknown facet '" + name + "'");
  }
  bool has_blowup() const { return !points.empty(); }

  int adjoint_degree() const {
    int d = 0;
    for (const auto& f : facets) d += f.poly.degree();
    return d - static_cast<int>(u->size());
  }
};

namespace detail {

inline RegionSpec region_skeleton(std::string name) {
  RegionSpec r;
  r.name = std::move(name);
  r.u = make_vars({"u0", "u1", "u2", "u3"});
  return r;
}

}  // namespace detail

/// The genus-one region: a cubic Del Pezzo surface S and five planes.
inline RegionSpec builtin_region() {
  auto r = detail::region_skeleton("del-pezzo");
  const auto& u = r.u;
  auto P = [&](const char* s) { return parse_poly(s, u); };
  r.facets = {
      {"L0", P("300*u0 - 900*u1 - 100*u2 - 691*u3"), -1},
      {"L1", P("267*u0 + 38*u1 + 38*u2 - 76*u3"), 1},
      {"L2", P("-6*u0 + u1 + 11*u3"), 1},
      {"L3", P("27*u0 - 8*u1 - 32*u2 - 36*u3"), 1},
      {"L4", P("-257*u0 + 359*u1 - 248*u2 + 16*u3"), -1},
      {"S", P("540*u0^3 - 381*u0^2*u1 + 19*u0*u1^2 + 58*u1^3 - 402*u0^2*u2 + 94*u0*u1*u2 + 27*u1^2*u2"
              " - 188*u0*u2^2 - 118*u1*u2^2 - 879*u0^2*u3 + 84*u0*u1*u3 + 32*u1^2*u3 - 106*u1*u2*u3 + 212*u0*u3^2"),
       1},
  };
  r.opposite = {{{"L0", "S"}, {"L1", "L2"}, {"L3", "L4"}}};
  r.surface = "S";
  r.reference_vertex = "L0,L1,L3";
  r.integral_adjoint = true;

  r.plane = make_vars({"x", "y", "z"});
  auto Q = [&](const char* s) { return parse_poly(s, r.plane); };
  r.point_names = {"A", "B", "C", "D", "E", "F"};
  r.points = {{{Rational(0), Rational(1), Rational(1)}},
              {{Rational(-1), Rational(0), Rational(1)}},
              {{Rational(0), Rational(-1), Rational(1)}},
              {{Rational(1), Rational(1, 2), Rational(1)}},
              {{Rational(3, 4), Rational(-1, 2), Rational(1)}},
              {{Rational(-1, 4), Rational(-1, 2), Rational(1)}}};
  r.cubics = {
      Q("-16*x^3 - 48*x^2*y + 118*x*y^2 - 16*x^2*z + 53*x*y*z"),
      Q("-32*x^3 + 10*x^2*y - 188*x*y^2 + 21*x^2*z + 53*x*z^2"),
      Q("84*x^3 - 172*x^2*y - 487*x*y^2 - 106*y^3 + 84*x^2*z + 106*y*z^2"),
      Q("-108*x^3 - 6*x^2*y + 717*x*y^2 - 161*x^2*z + 106*x*y*z - 53*y^2*z + 53*z^3"),
  };
  r.map_scale = {Rational(2), Rational(2), Rational(1), Rational(1)};
  return r;
}

/// The linear facets of the built-in region with S replaced by the plane
/// L5 = L0 + 200 u3 opposite L0: a combinatorial cube.
inline RegionSpec plain_cube_region() {
  auto base = builtin_region();
  auto r = detail::region_skeleton("plain-cube");
  for (const auto& f : base.facets)
    if (f.name != "S") r.facets.push_back(f);
  r.facets.push_back({"L5", base.facet("L0").poly + QPoly::variable(r.u, 3) * Rational(200), 1});
  r.opposite = {{{"L0", "L5"}, {"L1", "L2"}, {"L3", "L4"}}};
  r.reference_vertex = "L0,L1,L3";
  return r;
}

/// The unit cube 0 <= u_i <= u3, i = 0, 1, 2.
inline RegionSpec unit_cube_region() {
  auto r = detail::region_skeleton("unit-cube");
  auto P = [&](const char* s) { return parse_poly(s, r.u); };
  r.facets = {{"L0", P("u0"), 1}, {"L1", P("u1"), 1}, {"L2", P("u2"), 1},
              {"L3", P("u3 - u0"), 1}, {"L4", P("u3 - u1"), 1}, {"L5", P("u3 - u2"), 1}};
  r.opposite = {{{"L0", "L3"}, {"L1", "L4"}, {"L2", "L5"}}};
  r.reference_vertex = "L0,L1,L2";
  return r;
}

inline json to_json(const RegionSpec& r) {
  json facets = json::array();
  for (const auto& f : r.facets) facets.push_back({{"name", f.name}, {"poly", f.poly.str()}, {"orientation", f.orientation}});
  json opp = json::array();
  for (const auto& [a, b] : r.opposite) opp.push_back({a, b});
  json j{{"name", r.name}, {"vars", r.u->names()}, {"chart", r.chart}, {"facets", facets},
         {"opposite", opp}, {"surface", r.surface}, {"reference_vertex", r.reference_vertex},
         {"integral_adjoint", r.integral_adjoint}};
  if (r.has_blowup()) {
    json pts = json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i)
      pts.push_back({{"name", r.point_names[i]},
                     {"coords", {r.points[i][0].str(), r.points[i][1].str(), r.points[i][2].str()}}});
    json cubics = json::array();
    for (const auto& c : r.cubics) cubics.push_back(c.str());
    json scale = json::array();
    for (const auto& s : r.map_scale) scale.push_back(s.str());
    j["plane_vars"] = r.plane->names();
    j["points"] = pts;
    j["cubics"] = cubics;
    j["map_scale"] = scale;
  }
  return j;
}

inline QPoly poly_field(const json& j, const Vars& vars) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), vars);
  return poly_from_json(j, vars);
}

inline RegionSpec region_from_json(const json& j) {
  RegionSpec r;
  try {
    r.name = j.value("name", "custom");
    r.u = make_vars(j.at("vars").get<std::vector<std::string>>());
    if (r.u->size() != 4) throw InputError("region needs four homogeneous coordinates");
    r.chart = j.value("chart", std::size_t{3});
    if (r.chart >= 4) throw InputError("chart index out of range");
    for (const auto& f : j.at("facets")) {
      int o = f.value("orientation", 1);
      if (o != 1 && o != -1) throw InputError("facet orientation must be +1 or -1");
      r.facets.push_back({f.at("name").get<std::string>(), poly_field(f.at("poly"), r.u), o});
    }
    if (r.facets.size() != 6) throw InputError("region needs exactly six facets");
    const auto& opp = j.at("opposite");
    if (opp.size() != 3) throw InputError("region needs three opposite facet pairs");
    for (std::size_t i = 0; i < 3; ++i) r.opposite[i] = {opp[i].at(0).get<std::string>(), opp[i].at(1).get<std::string>()};
    r.surface = j.value("surface", std::string{});
    r.reference_vertex = j.at("reference_vertex").get<std::string>();
    r.integral_adjoint = j.value("integral_adjoint", false);
    if (j.contains("points")) {
      r.plane = make_vars(j.at("plane_vars").get<std::vector<std::string>>());
      for (const auto& p : j.at("points")) {
        r.point_names.push_back(p.at("name").get<std::string>());
        const auto& c = p.at("coords");
        if (c.size() != 3) throw InputError("points need three homogeneous coordinates");
        r.points.push_back({rational_from_json(c[0]), rational_from_json(c[1]), rational_from_json(c[2])});
      }
      for (const auto& c : j.at("cubics")) r.cubics.push_back(poly_field(c, r.plane));
      for (const auto& s : j.at("map_scale")) r.map_scale.push_back(rational_from_json(s));
      if (r.cubics.size() != 4 || r.map_scale.size() != 4) throw InputError("blow-up data needs four cubics and four scales");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed region JSON: ") + e.what());
  }
  for (const auto& [a, b] : r.opposite) {
    r.facet(a);
    r.facet(b);
  }
  return r;
}

}  // namespace pg
