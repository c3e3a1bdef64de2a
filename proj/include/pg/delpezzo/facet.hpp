#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pg/delpezzo/factor.hpp"
#include "pg/delpezzo/vertices.hpp"

namespace pg {

/// Canonical form N / (l0 l1 l2 l3) dx ∧ dy of a quadrilateral whose sides
/// l0, l1 and l2, l3 are opposite. The lines are stored oriented so that
/// they are positive inside.
struct QuadForm {
  std::vector<QPoly> lines;
  std::optional<QPoly> numerator;
  bool diagonals_agree = false;
};

namespace detail {

inline std::array<Rational, 3> line_vector(const QPoly& l) {
  std::vector<Rational> g;
  Rational c;
  linear_parts(l, g, c);
  if (g.size() != 2) throw InputError("quadrilateral lines live in a plane with two coordinates");
  return {c, g[0], g[1]};
}

inline std::vector<Rational> meet(const QPoly& a, const QPoly& b) {
  auto x = line_vector(a), y = line_vector(b);
  auto s = solve(Matrix<Rational>::from_rows({{x[1], x[2]}, {y[1], y[2]}}), std::vector<Rational>{-x[0], -y[0]});
  if (!s) throw InputError("parallel sides in quadrilateral");
  return *s;
}

inline QPoly line_through(const Vars& v, const std::vector<Rational>& p, const std::vector<Rational>& q) {
  return QPoly::constant(v, p[0] * q[1] - p[1] * q[0]) + QPoly::variable(v, 0) * (p[1] - q[1]) +
         QPoly::variable(v, 1) * (q[0] - p[0]);
}

inline QPoly oriented_toward(const QPoly& l, const std::vector<Rational>& p) {
  int s = l.evaluate(p).sign();
  if (s == 0) throw InputError("orientation point lies on the line " + l.str());
  return s > 0 ? l : -l;
}

inline Rational triangle_constant(const QPoly& a, const QPoly& b, const QPoly& c) {
  auto x = line_vector(a), y = line_vector(b), z = line_vector(c);
  return det3(std::array<std::array<Rational, 3>, 3>{x, y, z}).abs();
}

// Numerator over l0 l1 l2 l3 from the split along the diagonal through p and
// q; t1 = (a, b) with apex r1, t2 = (c, d) with apex r2.
inline std::optional<QPoly> split_numerator(const Vars& v, const std::vector<QPoly>& l, std::size_t a, std::size_t b,
                                            std::size_t c, std::size_t d, const std::vector<Rational>& p,
                                            const std::vector<Rational>& q, const std::vector<Rational>& r1,
                                            const std::vector<Rational>& r2) {
  auto diag = line_through(v, p, q);
  auto d1 = oriented_toward(diag, r1);
  auto d2 = oriented_toward(diag, r2);
  Rational s = (d2 == d1) ? Rational(1) : Rational(-1);
  auto k1 = triangle_constant(l[a], l[b], d1);
  auto k2 = triangle_constant(l[c], l[d], d2);
  auto num = l[c] * l[d] * k1 + l[a] * l[b] * k2 * s;
  return num.divide_exact(d1);
}

}  // namespace detail

/// Sum of the two triangle forms of a diagonal split; both splits are
/// computed and compared.
inline QuadForm quad_canonical_form(const std::vector<QPoly>& raw, const std::vector<Rational>& interior) {
  if (raw.size() != 4) throw InputError("a quadrilateral needs four lines");
  const auto& v = raw[0].vars();
  QuadForm out;
  for (const auto& l : raw) out.lines.push_back(detail::oriented_toward(l, interior));
  const auto& l = out.lines;
  auto v02 = detail::meet(l[0], l[2]), v03 = detail::meet(l[0], l[3]);
  auto v12 = detail::meet(l[1], l[2]), v13 = detail::meet(l[1], l[3]);
  // diagonal v02-v13: triangles (l0, l3) at v03 and (l2, l1) at v12
  auto na = detail::split_numerator(v, l, 0, 3, 1, 2, v02, v13, v03, v12);
  // diagonal v03-v12: triangles (l0, l2) at v02 and (l1, l3) at v13
  auto nb = detail::split_numerator(v, l, 0, 2, 1, 3, v03, v12, v02, v13);
  out.diagonals_agree = na && nb && *na == *nb;
  if (na) out.numerator = *na;
  return out;
}

/// Residue of ω along a linear facet, compared with the quadrilateral form
/// of that facet.
struct FacetResidue {
  std::string facet;
  std::string pivot;            // coordinate solved for
  Rational scale;               // (-1)^position / pivot coefficient
  std::optional<QPoly> reduced;  // numerator restricted, divided by the opposite facet restricted
  QuadForm quad;
  bool divisible = false;
  bool identity = false;
  int relative_sign = 0;  // residue = relative_sign * quadrilateral form
};

namespace detail {

struct FacetSetup {
  HyperplaneRestriction h;
  std::string opposite;
  std::vector<std::string> sides;  // two opposite pairs
  Chart plane_chart;
};

inline FacetSetup facet_setup(const RegionSpec& r, const std::string& facet) {
  const auto& f = r.facet(facet);
  if (f.poly.degree() != 1) throw InputError("facet residues are taken along linear facets");
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < r.u->size(); ++i)
    if (i != r.chart) cand.push_back(i);
  auto h = restrict_to_hyperplane(f.poly, cand);
  std::string opp;
  std::vector<std::string> sides;
  for (const auto& [a, b] : r.opposite) {
    if (a == facet) opp = b;
    else if (b == facet) opp = a;
    else {
      sides.push_back(a);
      sides.push_back(b);
    }
  }
  if (opp.empty()) throw InputError("facet " + facet + " has no opposite facet");
  auto idx = h.reduced->find((*r.u)[r.chart]);
  return {h, opp, sides, Chart(h.reduced, static_cast<std::size_t>(idx))};
}

}  // namespace detail

inline FacetResidue facet_residue(const CanonicalForm3& w, const RegionSpec& r, const std::string& facet = "L0") {
  auto s = detail::facet_setup(r, facet);
  FacetResidue out;
  out.facet = facet;
  out.pivot = (*r.u)[s.h.pivot];
  std::size_t pos = s.h.pivot < r.chart ? s.h.pivot : s.h.pivot - 1;
  out.scale = Rational(pos % 2 ? -1 : 1) / s.h.pivot_coeff;

  auto num = s.h.restrict(w.numerator);
  auto opp = s.h.restrict(w.facet(s.opposite).poly);
  auto q = num.divide_exact(opp);
  out.divisible = q.has_value();
  if (q) out.reduced = *q;

  std::vector<QPoly> raw;
  for (std::size_t i = 0; i < 4; ++i) raw.push_back(s.plane_chart.dehomogenize(s.h.restrict(w.facet(s.sides[i]).poly)));
  std::vector<std::vector<Rational>> corners{detail::meet(raw[0], raw[2]), detail::meet(raw[0], raw[3]),
                                             detail::meet(raw[1], raw[2]), detail::meet(raw[1], raw[3])};
  std::vector<Rational> centroid(2, Rational(0));
  for (const auto& c : corners)
    for (std::size_t i = 0; i < 2; ++i) centroid[i] += c[i] * Rational(1, 4);
  out.quad = quad_canonical_form(raw, centroid);
  if (!q || !out.quad.numerator || !out.quad.diagonals_agree) return out;

  // residue: scale * q / (raw product); quadrilateral: N / (oriented product)
  auto qa = s.plane_chart.dehomogenize(*q) * out.scale;
  QPoly raw_prod = QPoly::constant(qa.vars(), Rational(1)), or_prod = raw_prod;
  for (std::size_t i = 0; i < 4; ++i) {
    raw_prod *= raw[i];
    or_prod *= out.quad.lines[i];
  }
  auto lhs = qa * or_prod;
  auto rhs = *out.quad.numerator * raw_prod;
  if (lhs == rhs) out.relative_sign = 1;
  else if (lhs == -rhs) out.relative_sign = -1;
  out.identity = out.relative_sign != 0;
  return out;
}

struct KernelSample {
  Rational lambda;
  bool divisible = false;
};

/// For each λ, whether the opposite facet restricted to `facet` divides
/// (numerator + λ · product of the four side facets) restricted there.
inline std::vector<KernelSample> kernel_check(const CanonicalForm3& w, const RegionSpec& r,
                                              const std::vector<Rational>& lambdas, const std::string& facet = "L0") {
  auto s = detail::facet_setup(r, facet);
  QPoly sides = QPoly::constant(r.u, Rational(1));
  for (const auto& n : s.sides) sides *= w.facet(n).poly;
  auto opp = s.h.restrict(w.facet(s.opposite).poly);
  std::vector<KernelSample> out;
  for (const auto& lam : lambdas) {
    auto f = s.h.restrict(w.numerator + sides * lam);
    out.push_back({lam, f.divide_exact(opp).has_value()});
  }
  return out;
}

}  // namespace pg
