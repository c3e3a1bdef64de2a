#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pg/delpezzo/region.hpp"
#include "pg/delpezzo/real_roots.hpp"
#include "pg/errors.hpp"
#include "pg/exactalg/linalg.hpp"

namespace pg {

/// Affine chart u_idx = 1 of a homogeneous coordinate ring.
struct Chart {
  Vars homogeneous;
  std::size_t idx = 0;
  Vars affine;

  Chart(Vars u, std::size_t i) : homogeneous(std::move(u)), idx(i) {
    if (idx >= homogeneous->size()) throw InputError("chart index out of range");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < homogeneous->size(); ++k)
      if (k != idx) names.push_back((*homogeneous)[k]);
    affine = make_vars(names);
  }

  QPoly dehomogenize(const QPoly& f) const {
    std::map<std::string, QPoly> m;
    m.insert_or_assign((*homogeneous)[idx], QPoly::constant(affine, Rational(1)));
    return substitute(f, m, affine);
  }
};

/// A facet form ω = numerator / (product of facets) du_0 ∧ ... in the chart.
struct CanonicalForm3 {
  Vars u;
  std::size_t chart = 3;
  std::vector<Facet> facets;
  QPoly numerator;

  const Facet& facet(const std::string& name) const {
    for (const auto& f : facets)
      if (f.name == name) return f;
    throw InputError("unknown facet '" + name + "'");
  }
};

inline CanonicalForm3 canonical_form(const RegionSpec& r, QPoly numerator) {
  return {r.u, r.chart, r.facets, std::move(numerator)};
}

/// A vertex of the region: three facets and their common point, exact or
/// given as base + t * direction with t a root of `minpoly` isolated in t_box.
struct VertexCert {
  std::array<std::string, 3> triple;
  std::vector<std::string> remaining;
  std::optional<std::vector<Rational>> point;
  std::vector<Rational> base, direction;
  QUPoly minpoly;
  Interval t_box;
  std::size_t real_roots = 0;  // candidates on the line, for diagnostics

  bool is_exact() const { return point.has_value(); }

  std::vector<Interval> box() const {
    std::vector<Interval> out;
    if (point) {
      for (const auto& x : *point) out.push_back(Interval::point(x));
      return out;
    }
    for (std::size_t i = 0; i < base.size(); ++i)
      out.push_back(Interval::point(base[i]) + Interval::point(direction[i]) * t_box);
    return out;
  }
};

namespace detail {

/// Triple order: linear facets by name, nonlinear ones last.
inline std::array<std::string, 3> ordered_triple(std::array<std::string, 3> t,
                                                 const std::vector<Facet>& facets) {
  auto deg = [&](const std::string& n) {
    for (const auto& f : facets)
      if (f.name == n) return f.poly.degree();
    return 0;
  };
  std::sort(t.begin(), t.end(), [&](const std::string& a, const std::string& b) {
    bool la = deg(a) > 1, lb = deg(b) > 1;
    if (la != lb) return lb;
    return a < b;
  });
  return t;
}

inline void linear_parts(const QPoly& f, std::vector<Rational>& grad, Rational& c) {
  grad.assign(f.nvars(), Rational(0));
  c = Rational(0);
  for (const auto& t : f.terms()) {
    if (t.mono.degree() > 1) throw InputError("expected an affine linear polynomial");
    if (t.mono.degree() == 0) {
      c = t.coeff;
      continue;
    }
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.mono[i]) grad[i] = t.coeff;
  }
}

/// f(base + t * dir) as a univariate polynomial in t.
inline QUPoly on_line(const QPoly& f, const std::vector<Rational>& base, const std::vector<Rational>& dir) {
  static const Vars tv = make_vars({"t"});
  std::map<std::string, QPoly> m;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    m.insert_or_assign((*f.vars())[i], QPoly::constant(tv, base[i]) + QPoly::variable(tv, 0) * dir[i]);
  return QUPoly::from_poly(substitute(f, m, tv), 0);
}

/// Sign of g at the root of `f` isolated in `box`, refining the box as needed.
inline int sign_at_root(const QUPoly& g, const QUPoly& f, Interval& box) {
  for (int iter = 0; iter < 200; ++iter) {
    int s = evaluate(g, box).sign();
    if (s != 0) return s;
    IsolatedRoot r{std::nullopt, box};
    refine(f, r, box.width() * Rational(1, 16));
    box = r.box;
    if (r.exact) return g(*r.exact).sign();
  }
  auto h = gcd(g, f);
  if (h.degree() >= 1 && count_roots(sturm_sequence(squarefree_part(h)), box.lo, box.hi) > 0) return 0;
  throw ConstructionError("vertex_selection", "could not decide a facet sign at an algebraic vertex");
}

inline std::string triple_str(const std::array<std::string, 3>& t) { return t[0] + "," + t[1] + "," + t[2]; }

}  // namespace detail

/// The eight vertices: one facet from each opposite pair. Linear triples are
/// solved exactly; a triple with a nonlinear facet restricts it to the line
/// cut by the other two and keeps the unique real root where the remaining
/// facets are nonnegative.
inline std::vector<VertexCert> vertex_enumerate(const RegionSpec& r) {
  Chart chart(r.u, r.chart);
  std::map<std::string, QPoly> aff;
  for (const auto& f : r.facets) aff.insert_or_assign(f.name, chart.dehomogenize(f.poly));
  auto oriented = [&](const std::string& n, const QUPoly& g) { return g * Rational(r.facet(n).orientation); };

  std::vector<VertexCert> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        std::array<std::string, 3> raw{a ? r.opposite[0].second : r.opposite[0].first,
                                       b ? r.opposite[1].second : r.opposite[1].first,
                                       c ? r.opposite[2].second : r.opposite[2].first};
        VertexCert v;
        v.triple = detail::ordered_triple(raw, r.facets);
        for (const auto& f : r.facets)
          if (std::find(v.triple.begin(), v.triple.end(), f.name) == v.triple.end()) v.remaining.push_back(f.name);
        const auto label = detail::triple_str(v.triple);
        const auto& last = r.facet(v.triple[2]);
        if (r.facet(v.triple[1]).poly.degree() > 1)
          throw InputError("vertex " + label + " has more than one nonlinear facet");

        std::vector<Rational> g1, g2;
        Rational c1, c2;
        detail::linear_parts(aff.at(v.triple[0]), g1, c1);
        detail::linear_parts(aff.at(v.triple[1]), g2, c2);
        std::vector<Rational> d{g1[1] * g2[2] - g1[2] * g2[1], g1[2] * g2[0] - g1[0] * g2[2], g1[0] * g2[1] - g1[1] * g2[0]};
        std::size_t k = 0;
        for (std::size_t i = 1; i < 3; ++i)
          if (d[k].abs() < d[i].abs()) k = i;
        if (d[k].is_zero()) throw ConstructionError("vertex_selection", "facets " + v.triple[0] + " and " + v.triple[1] + " are parallel in the chart");
        std::vector<std::size_t> other;
        for (std::size_t i = 0; i < 3; ++i)
          if (i != k) other.push_back(i);
        auto sol = solve(Matrix<Rational>::from_rows({{g1[other[0]], g1[other[1]]}, {g2[other[0]], g2[other[1]]}}),
                         std::vector<Rational>{-c1, -c2});
        std::vector<Rational> base(3, Rational(0));
        base[other[0]] = (*sol)[0];
        base[other[1]] = (*sol)[1];

        auto g = detail::on_line(aff.at(last.name), base, d);
        if (g.is_zero()) throw ConstructionError("vertex_selection", "facet " + last.name + " contains the edge " + label);
        auto roots = real_roots(g);
        v.real_roots = roots.size();
        std::vector<std::size_t> admissible;
        std::vector<std::string> diag;
        for (std::size_t i = 0; i < roots.size(); ++i) {
          auto& root = roots[i];
          bool ok = true;
          for (const auto& n : v.remaining) {
            auto h = oriented(n, detail::on_line(aff.at(n), base, d));
            int s = root.exact ? h(*root.exact).sign() : detail::sign_at_root(h, root.factor, root.box);
            if (s < 0) {
              ok = false;
              diag.push_back("root " + std::to_string(i) + " violates " + n);
              break;
            }
          }
          if (ok) admissible.push_back(i);
        }
        if (admissible.size() != 1)
          throw ConstructionError("vertex_selection", "vertex " + label + ": " + std::to_string(admissible.size()) +
                                                          " admissible roots among " + std::to_string(roots.size()) +
                                                          (diag.empty() ? "" : " (" + diag.front() + ")"));
        const auto& root = roots[admissible.front()];
        if (root.exact) {
          std::vector<Rational> p(3);
          for (std::size_t i = 0; i < 3; ++i) p[i] = base[i] + d[i] * *root.exact;
          v.point = p;
        } else {
          v.base = base;
          v.direction = d;
          v.minpoly = root.factor;
          v.t_box = root.box;
        }
        out.push_back(std::move(v));
      }
  return out;
}

/// Residue value: exact for rational vertices, otherwise an enclosure, plus
/// the rational it equals exactly when that is provable from the minimal
/// polynomial of the vertex.
struct ResidueValue {
  std::optional<Rational> exact;
  Interval enclosure;
  std::optional<Rational> algebraic_exact;

  std::optional<Rational> value() const { return exact ? exact : algebraic_exact; }
  int sign() const { return exact ? exact->sign() : enclosure.sign(); }
};

namespace detail {

template <typename T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace detail

inline Rational enclosure_width() { return Rational(Integer(1), Integer("100000000000000000000")); }

/// adj / (det J(f_a, f_b, f_c) * product of the other facets) at the vertex,
/// in the chart.
inline ResidueValue vertex_residue(const CanonicalForm3& w, const VertexCert& v,
                                   const Rational& width = enclosure_width()) {
  Chart chart(w.u, w.chart);
  auto adj = chart.dehomogenize(w.numerator);
  std::array<QPoly, 3> tri{chart.dehomogenize(w.facet(v.triple[0]).poly), chart.dehomogenize(w.facet(v.triple[1]).poly),
                           chart.dehomogenize(w.facet(v.triple[2]).poly)};
  std::vector<QPoly> rest;
  for (const auto& n : v.remaining) rest.push_back(chart.dehomogenize(w.facet(n).poly));
  const auto label = detail::triple_str(v.triple);
  ResidueValue out;

  if (v.point) {
    const auto& p = *v.point;
    std::array<std::array<Rational, 3>, 3> j;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) j[a][b] = tri[a].derivative(b).evaluate(p);
    auto det = detail::det3(j);
    if (det.is_zero()) throw ConstructionError("transversality", "Jacobian vanishes at vertex " + label);
    Rational den = det;
    for (const auto& f : rest) den *= f.evaluate(p);
    if (den.is_zero()) throw ConstructionError("transversality", "another facet vanishes at vertex " + label);
    out.exact = adj.evaluate(p) / den;
    out.enclosure = Interval::point(*out.exact);
    return out;
  }

  std::array<std::array<QUPoly, 3>, 3> j;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) j[a][b] = detail::on_line(tri[a].derivative(b), v.base, v.direction);
  auto det = detail::det3(j);
  auto den = det;
  for (const auto& f : rest) den = den * detail::on_line(f, v.base, v.direction);
  auto num = detail::on_line(adj, v.base, v.direction);
  if (den.is_zero() || den.divmod(v.minpoly).second.is_zero())
    throw ConstructionError("transversality", "denominator vanishes at vertex " + label);

  Interval box = v.t_box;
  for (int iter = 0;; ++iter) {
    if (iter > 4000) throw ConstructionError("transversality", "residue enclosure did not converge at vertex " + label);
    auto ed = evaluate(den, box);
    if (ed.sign() != 0) {
      out.enclosure = evaluate(num, box) / ed;
      if (out.enclosure.width() < width) break;
    }
    IsolatedRoot r{std::nullopt, box};
    refine(v.minpoly, r, box.width() * Rational(1, 1024));
    box = r.box;
  }
  auto c = simplest_between(out.enclosure.lo, out.enclosure.hi);
  if ((num - den * c).divmod(v.minpoly).second.is_zero()) out.algebraic_exact = c;
  return out;
}

inline json to_json(const VertexCert& v) {
  json j{{"facets", {v.triple[0], v.triple[1], v.triple[2]}}, {"real_roots_on_edge", v.real_roots}};
  if (v.point) {
    json p = json::array();
    for (const auto& x : *v.point) p.push_back(x.str());
    j["point"] = p;
  } else {
    json b = json::array();
    for (const auto& iv : v.box()) b.push_back({iv.lo.str(), iv.hi.str()});
    j["box"] = b;
    j["minpoly"] = v.minpoly.str();
  }
  return j;
}

}  // namespace pg
