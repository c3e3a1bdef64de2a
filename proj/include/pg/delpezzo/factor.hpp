#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/delpezzo/real_roots.hpp"
#include "pg/groebner/operations.hpp"

namespace pg {

/// Restriction of polynomials to the hyperplane ell = 0, solving ell for the
/// variable with the largest absolute coefficient (first one on ties).
struct HyperplaneRestriction {
  Vars full;
  Vars reduced;        // every variable except the pivot
  std::size_t pivot = 0;
  Rational pivot_coeff;
  std::map<std::string, QPoly> substitution;

  QPoly restrict(const QPoly& f) const { return substitute(f, substitution, reduced); }
  QPoly lift(const QPoly& f) const { return f.embed(full); }
};

inline HyperplaneRestriction restrict_to_hyperplane(const QPoly& ell, std::optional<std::vector<std::size_t>> candidates = {}) {
  if (ell.degree() != 1 || !ell.is_homogeneous()) throw InputError("hyperplane needs a linear form");
  const auto& vars = ell.vars();
  std::vector<Rational> a(vars->size());
  for (const auto& t : ell.terms())
    for (std::size_t i = 0; i < vars->size(); ++i)
      if (t.mono[i]) a[i] = t.coeff;
  std::vector<std::size_t> cand;
  if (candidates) cand = *candidates;
  else for (std::size_t i = 0; i < vars->size(); ++i) cand.push_back(i);
  std::optional<std::size_t> best;
  for (auto i : cand)
    if (!a[i].is_zero() && (!best || a[*best].abs() < a[i].abs())) best = i;
  if (!best) throw InputError("linear form has no usable pivot variable");
  HyperplaneRestriction h;
  h.full = vars;
  h.pivot = *best;
  h.pivot_coeff = a[*best];
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars->size(); ++i)
    if (i != h.pivot) names.push_back((*vars)[i]);
  h.reduced = make_vars(names);
  QPoly x(h.reduced);
  for (std::size_t i = 0; i < vars->size(); ++i)
    if (i != h.pivot && !a[i].is_zero()) x -= QPoly::variable(h.reduced, (*vars)[i]) * (a[i] / h.pivot_coeff);
  h.substitution.insert_or_assign((*vars)[h.pivot], x);
  return h;
}

/// All rational solutions of a polynomial system with finitely many complex
/// solutions, via a lex basis and back substitution.
inline std::vector<std::vector<Rational>> rational_points(const std::vector<QPoly>& eqs, const Vars& vars) {
  const std::size_t n = vars->size();
  std::vector<QPoly> nz;
  for (const auto& e : eqs)
    if (!e.is_zero()) nz.push_back(e);
  if (n == 0) {
    for (const auto& e : nz)
      if (!e.is_zero()) return {};
    return {{}};
  }
  if (nz.empty()) throw InputError("rational_points: solution set is not finite");
  auto gb = groebner_basis(nz, MonomialOrder::lex());
  if (gb.is_unit()) return {};
  const std::size_t last = n - 1;
  std::optional<QPoly> uni;
  for (const auto& g : gb.polys) {
    bool only_last = true;
    for (std::size_t i = 0; i < last && only_last; ++i) only_last = !g.uses_variable(i);
    if (only_last) uni = g;
  }
  if (!uni) throw InputError("rational_points: solution set is not finite");
  std::vector<std::string> head(vars->names().begin(), vars->names().end() - 1);
  auto sub = make_vars(head);
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rational_roots(QUPoly::from_poly(*uni, last))) {
    std::map<std::string, QPoly> m;
    m.insert_or_assign((*vars)[last], QPoly::constant(sub, r));
    std::vector<QPoly> reduced;
    for (const auto& g : gb.polys) reduced.push_back(substitute(g.with_order(MonomialOrder::grevlex()), m, sub));
    for (auto pt : rational_points(reduced, sub)) {
      pt.push_back(r);
      out.push_back(std::move(pt));
    }
  }
  return out;
}

/// Linear forms dividing a homogeneous f, each normalized so that its first
/// nonzero coefficient is 1. For every pivot p the unknown form is
/// x_p + sum_{j>p} a_j x_j; f vanishing on it gives polynomial equations in
/// the a_j that are solved over Q.
inline std::vector<QPoly> linear_factors(const QPoly& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw InputError("linear_factors needs a nonzero homogeneous polynomial");
  const auto& vars = f.vars();
  const std::size_t n = vars->size();
  std::vector<QPoly> out;
  if (f.degree() < 1) return out;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::string> unk, rest;
    for (std::size_t j = p + 1; j < n; ++j) unk.push_back(detail::fresh_name(*vars, "a" + std::to_string(j)));
    for (std::size_t j = 0; j < n; ++j)
      if (j != p) rest.push_back((*vars)[j]);
    auto names = unk;
    names.insert(names.end(), rest.begin(), rest.end());
    auto ring = make_vars(names);
    auto avars = make_vars(unk);
    QPoly image(ring);
    for (std::size_t j = p + 1; j < n; ++j)
      image -= QPoly::variable(ring, unk[j - p - 1]) * QPoly::variable(ring, (*vars)[j]);
    std::map<std::string, QPoly> m;
    m.insert_or_assign((*vars)[p], image);
    auto g = substitute(f, m, ring);
    // coefficients of g as a polynomial in the x's
    std::map<std::vector<unsigned>, QPoly> coeffs;
    for (const auto& t : g.terms()) {
      auto e = t.mono.exponents();
      std::vector<unsigned> xe(e.begin() + static_cast<long>(unk.size()), e.end());
      std::vector<unsigned> ae(e.begin(), e.begin() + static_cast<long>(unk.size()));
      auto it = coeffs.try_emplace(xe, QPoly(avars)).first;
      it->second += QPoly::monomial(avars, Monomial(ae), t.coeff);
    }
    std::vector<QPoly> eqs;
    for (auto& [k, c] : coeffs) eqs.push_back(c);
    std::vector<std::vector<Rational>> sols;
    if (unk.empty()) {
      if (eqs.empty()) sols.push_back({});
    } else if (eqs.empty()) {
      throw InputError("linear_factors: polynomial vanishes identically");
    } else {
      sols = rational_points(eqs, avars);
    }
    for (const auto& s : sols) {
      QPoly ell = QPoly::variable(vars, p);
      for (std::size_t j = p + 1; j < n; ++j)
        if (!s[j - p - 1].is_zero()) ell += QPoly::variable(vars, j) * s[j - p - 1];
      out.push_back(ell);
    }
  }
  return out;
}

/// C = line * quadric for a ternary cubic C, or nothing when C has no
/// rational linear factor. The first factor found is used.
inline std::optional<std::pair<QPoly, QPoly>> factor_cubic_line_conic(const QPoly& c) {
  if (c.nvars() != 3 || c.degree() != 3 || !c.is_homogeneous())
    throw InputError("factor_cubic_line_conic needs a ternary cubic form");
  for (const auto& ell : linear_factors(c)) {
    auto q = c.divide_exact(ell);
    if (q) return std::make_pair(ell, *q);
  }
  return std::nullopt;
}

}  // namespace pg
