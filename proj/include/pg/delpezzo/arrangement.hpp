#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pg/delpezzo/construction.hpp"
#include "pg/groebner/json_io.hpp"

namespace pg {

/// One component of the residual arrangement together with the Hilbert data
/// it is expected to have.
struct ResidualComponent {
  std::string name;
  std::string kind;  // "line", "curve" or "conic"
  std::shared_ptr<QIdeal> ideal;
  int expected_degree = 0;
  Integer expected_genus = 0;
};

namespace detail {

inline std::shared_ptr<QIdeal> ideal_of(std::vector<QPoly> gens) {
  for (auto& g : gens) g = primitive_integer(g);
  return std::make_shared<QIdeal>(QIdeal::of(std::move(gens)));
}

}  // namespace detail

/// Intersections of opposite facets, plus for every plane adjacent to the
/// surface the conic left after removing the edge line from their
/// intersection.
inline std::vector<ResidualComponent> residual_arrangement(const RegionSpec& r) {
  std::vector<ResidualComponent> out;
  for (const auto& [a, b] : r.opposite) {
    const auto& fa = r.facet(a);
    const auto& fb = r.facet(b);
    int da = fa.poly.degree(), db = fb.poly.degree();
    ResidualComponent c;
    c.name = a + "." + b;
    c.kind = (da == 1 && db == 1) ? "line" : "curve";
    c.ideal = detail::ideal_of({fa.poly, fb.poly});
    c.expected_degree = da * db;
    int d = std::max(da, db);
    c.expected_genus = (d - 1) * (d - 2) / 2;
    out.push_back(std::move(c));
  }
  if (r.surface.empty()) return out;
  const auto& s = r.facet(r.surface).poly;
  std::string opposite_of_surface;
  for (const auto& [a, b] : r.opposite) {
    if (a == r.surface) opposite_of_surface = b;
    if (b == r.surface) opposite_of_surface = a;
  }
  std::vector<std::string> adjacent;
  for (const auto& f : r.facets)
    if (f.name != r.surface && f.name != opposite_of_surface) adjacent.push_back(f.name);
  std::sort(adjacent.begin(), adjacent.end());
  for (const auto& name : adjacent) {
    const auto& ell = r.facet(name).poly;
    auto h = restrict_to_hyperplane(ell);
    auto cubic = h.restrict(s);
    if (cubic.degree() != 3 || cubic.nvars() != 3)
      throw ConstructionError("conic_factorization", r.surface + " restricted to " + name + " is not a plane cubic");
    auto f = factor_cubic_line_conic(cubic);
    if (!f) throw ConstructionError("conic_factorization", r.surface + " restricted to " + name + " contains no line");
    ResidualComponent c;
    c.name = "conic(" + r.surface + "," + name + ")";
    c.kind = "conic";
    c.ideal = detail::ideal_of({ell, h.lift(f->second)});
    c.expected_degree = 2;
    c.expected_genus = 0;
    out.push_back(std::move(c));
  }
  return out;
}

/// Compares each component's Hilbert data against its expected values.
inline Check check_arrangement(const std::vector<ResidualComponent>& comps) {
  Check c{"residual_arrangement", true, {}, json::array()};
  for (const auto& comp : comps) {
    const auto& h = comp.ideal->hilbert();
    json d{{"name", comp.name}, {"kind", comp.kind}, {"hilbert", to_json(h)}};
    c.detail.push_back(d);
    bool ok = h.dimension == 1 && h.degree == comp.expected_degree && h.genus == comp.expected_genus;
    if (!ok && c.pass) {
      c.pass = false;
      c.witness = comp.name + ": dim " + std::to_string(h.dimension) + ", degree " + h.degree.get_str() +
                  ", expected degree " + std::to_string(comp.expected_degree) + " and genus " + comp.expected_genus.get_str();
    }
  }
  return c;
}

/// Monomials of degree d in n variables, decreasing in grevlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n > 0) rec(0, d);
  auto ord = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

struct AdjointResult {
  unsigned degree = 0;
  std::size_t nullspace_dim = 0;
  std::vector<QPoly> basis;  // integer-normalized nullspace vectors
  std::optional<QPoly> adj;  // present when the nullspace is one-dimensional
};

/// Forms of the given degree vanishing on every component: normal forms of
/// all monomials against each component basis give linear conditions.
inline AdjointResult adjoint_interpolate(const std::vector<ResidualComponent>& comps, unsigned degree) {
  if (comps.empty()) throw InputError("adjoint_interpolate needs at least one component");
  const auto& vars = comps.front().ideal->vars();
  auto monos = monomials_of_degree(vars->size(), degree);
  std::vector<std::vector<Rational>> rows;
  for (const auto& comp : comps) {
    const auto& gb = comp.ideal->basis();
    std::vector<QPoly> nfs;
    for (const auto& m : monos) nfs.push_back(normal_form(QPoly::monomial(vars, m, Rational(1)), gb));
    std::vector<Monomial> support;
    for (const auto& nf : nfs)
      for (const auto& t : nf.terms())
        if (std::find(support.begin(), support.end(), t.mono) == support.end()) support.push_back(t.mono);
    for (const auto& mu : support) {
      std::vector<Rational> row;
      for (const auto& nf : nfs) row.push_back(nf.coeff(mu));
      rows.push_back(std::move(row));
    }
  }
  Matrix<Rational> a(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) a(i, j) = rows[i][j];
  AdjointResult out;
  out.degree = degree;
  auto ns = rows.empty() ? std::vector<std::vector<Rational>>{} : nullspace(a);
  if (rows.empty())
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<Rational> e(monos.size(), Rational(0));
      e[j] = Rational(1);
      ns.push_back(e);
    }
  out.nullspace_dim = ns.size();
  for (const auto& v : ns) {
    QPoly p(vars);
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!v[j].is_zero()) p += QPoly::monomial(vars, monos[j], v[j]);
    out.basis.push_back(primitive_integer(p));
  }
  if (out.nullspace_dim == 1) out.adj = out.basis.front();
  return out;
}

}  // namespace pg
