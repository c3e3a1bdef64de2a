#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pg/amplituhedron/curve.hpp"
#include "pg/delpezzo/arrangement.hpp"
#include "pg/delpezzo/facet.hpp"

namespace pg {

/// Decimal expansion truncated toward zero.
inline std::string decimal(const Rational& x, unsigned digits = 25) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer n = x.num() * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
  std::string sign = sgn(q) < 0 || (q == 0 && x.sign() < 0) ? "-" : "";
  Integer aq = abs(q);
  std::string s = aq.get_str();
  if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  return sign + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

/// First lattice point (i/10, j/10, k/10), |i|, |j|, |k| <= 40, of the chart
/// where every oriented facet is strictly positive.
inline std::optional<std::vector<Rational>> find_interior_point(const RegionSpec& r, int radius = 40, long denom = 10) {
  Chart chart(r.u, r.chart);
  std::vector<QPoly> f;
  for (const auto& fa : r.facets) f.push_back(chart.dehomogenize(fa.poly) * Rational(fa.orientation));
  struct DTerm { double c; unsigned e[3]; };
  std::vector<std::vector<DTerm>> fd;
  for (const auto& p : f) {
    std::vector<DTerm> ts;
    for (const auto& t : p.terms()) ts.push_back({t.coeff.to_double(), {t.mono[0], t.mono[1], t.mono[2]}});
    fd.push_back(ts);
  }
  auto eval_d = [](const std::vector<DTerm>& ts, const double* x) {
    double s = 0;
    for (const auto& t : ts) {
      double v = t.c;
      for (int i = 0; i < 3; ++i)
        for (unsigned k = 0; k < t.e[i]; ++k) v *= x[i];
      s += v;
    }
    return s;
  };
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      for (int c = -radius; c <= radius; ++c) {
        double x[3] = {double(a) / double(denom), double(b) / double(denom), double(c) / double(denom)};
        bool maybe = true;
        for (const auto& ts : fd)
          if (eval_d(ts, x) <= -1e-9) {
            maybe = false;
            break;
          }
        if (!maybe) continue;
        std::vector<Rational> p{Rational(a, denom), Rational(b, denom), Rational(c, denom)};
        bool inside = std::all_of(f.begin(), f.end(), [&](const QPoly& g) { return g.evaluate(p).sign() > 0; });
        if (inside) return p;
      }
  return std::nullopt;
}

/// Whether a line component (two linear facets) meets the closed region in
/// the chart. Exact, but only line components are examined.
inline bool line_meets_region(const RegionSpec& r, const std::string& a, const std::string& b) {
  Chart chart(r.u, r.chart);
  std::vector<Rational> g1, g2;
  Rational c1, c2;
  detail::linear_parts(chart.dehomogenize(r.facet(a).poly), g1, c1);
  detail::linear_parts(chart.dehomogenize(r.facet(b).poly), g2, c2);
  std::vector<Rational> d{g1[1] * g2[2] - g1[2] * g2[1], g1[2] * g2[0] - g1[0] * g2[2], g1[0] * g2[1] - g1[1] * g2[0]};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (d[k].abs() < d[i].abs()) k = i;
  if (d[k].is_zero()) return false;  // the line lies at infinity
  std::vector<std::size_t> other;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) other.push_back(i);
  auto sol = solve(Matrix<Rational>::from_rows({{g1[other[0]], g1[other[1]]}, {g2[other[0]], g2[other[1]]}}),
                   std::vector<Rational>{-c1, -c2});
  std::vector<Rational> base(3, Rational(0));
  base[other[0]] = (*sol)[0];
  base[other[1]] = (*sol)[1];

  std::optional<Rational> lo, hi;
  std::vector<QUPoly> curved;
  for (const auto& f : r.facets) {
    if (f.name == a || f.name == b) continue;
    auto g = detail::on_line(chart.dehomogenize(f.poly), base, d) * Rational(f.orientation);
    if (g.degree() > 1) {
      curved.push_back(g);
      continue;
    }
    if (g.degree() < 1) {
      if (g.is_zero() || g[0].sign() >= 0) continue;
      return false;
    }
    auto t0 = -g[0] / g[1];
    if (g[1].sign() > 0) {
      if (!lo || *lo < t0) lo = t0;
    } else if (!hi || t0 < *hi) {
      hi = t0;
    }
  }
  if (lo && hi && *hi < *lo) return false;
  for (const auto& g : curved) {
    // a root inside [lo, hi] touches the region; otherwise the sign is constant there
    for (auto root : real_roots(g)) {
      if (root.exact) {
        if ((!lo || !(*root.exact < *lo)) && (!hi || !(*hi < *root.exact))) return true;
        continue;
      }
      IsolatedRoot iso{std::nullopt, root.box};
      while ((lo && iso.box.contains(*lo)) || (hi && iso.box.contains(*hi))) {
        refine(root.factor, iso, iso.box.width() * Rational(1, 2));
        if (iso.exact) break;
      }
      const auto& b0 = iso.box;
      bool inside = (!lo || *lo < b0.lo) && (!hi || b0.hi < *hi);
      if (inside) return true;
    }
    Rational probe = lo && hi ? (*lo + *hi) * Rational(1, 2) : lo ? *lo + Rational(1) : hi ? *hi - Rational(1) : Rational(0);
    if (g(probe).sign() < 0) return false;
  }
  return true;
}

struct RegionOptions {
  std::vector<Rational> lambdas{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)};
  std::vector<std::uint64_t> primes{32003, 65537};
  std::string facet = "L0";
};

struct RegionReport {
  bool pass = false;
  std::vector<Check> checks;
  json data = json::object();
  json timings = json::object();

  const Check* failed() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

inline json to_json(const RegionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json j{{"pass", r.pass}, {"checks", checks}, {"data", r.data}};
  if (const auto* f = r.failed()) j["failed_check"] = f->name;
  return j;
}

namespace detail {

inline json poly_coefficients(const QPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({{"exponents", t.mono.exponents()}, {"coeff", integer_json(t.coeff.num())}});
  return out;
}

class StageTimer {
 public:
  explicit StageTimer(json& sink) : sink_(sink) {}
  template <typename Fn>
  auto run(const std::string& name, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    struct Record {
      json& sink;
      std::string name;
      std::chrono::steady_clock::time_point t0;
      ~Record() { sink[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
    } rec{sink_, name, t0};
    return fn();
  }

 private:
  json& sink_;
};

}  // namespace detail

/// Runs every verification stage on the region. A failing stage stops the
/// stages that depend on it; the report names the first failing check.
inline RegionReport verify_region(const RegionSpec& r, const RegionOptions& opt = {}) {
  RegionReport rep;
  detail::StageTimer timer(rep.timings);
  auto add = [&](const std::vector<Check>& cs) {
    rep.checks.insert(rep.checks.end(), cs.begin(), cs.end());
    return all_pass(cs);
  };
  auto finish = [&] {
    rep.pass = all_pass(rep.checks);
    return rep;
  };
  rep.data["region"] = r.name;

  try {
    if (!add(timer.run("shape", [&] { return verify_region_shape(r); }))) return finish();
    if (!add(timer.run("construction", [&] { return verify_construction(r); }))) return finish();

    auto interior = timer.run("interior_point", [&] { return find_interior_point(r); });
    Check ip{"interior_point", interior.has_value(), {}, {}};
    if (interior) {
      json p = json::array();
      for (const auto& x : *interior) p.push_back(x.str());
      rep.data["interior_point"] = p;
    } else {
      ip.witness = "no lattice point strictly inside all facets";
    }
    if (!add({ip})) return finish();

    auto comps = timer.run("residual_arrangement", [&] { return residual_arrangement(r); });
    auto arr = timer.run("hilbert", [&] { return check_arrangement(comps); });
    rep.data["components"] = arr.detail;
    if (!add({arr})) return finish();

    std::vector<Check> extra;
    for (const auto& comp : comps) {
      if (comp.kind != "curve") continue;
      auto vs = timer.run("smoothness", [&] { return smoothness_probes(*comp.ideal, comp.ideal->hilbert(), opt.primes); });
      Check sm{"curve_smooth", merge_verdicts(vs) == Smoothness::kSmooth, {}, json::array()};
      for (const auto& v : vs) sm.detail.push_back({{"prime", v.prime}, {"verdict", to_string(v.verdict)}});
      if (!sm.pass) sm.witness = comp.name + " is not certified smooth";
      extra.push_back(sm);
    }
    Check disj{"residual_disjointness", true, {}, {{"scope", "partial check: line components only"}}};
    for (const auto& [a, b] : r.opposite)
      if (r.facet(a).poly.degree() == 1 && r.facet(b).poly.degree() == 1 && line_meets_region(r, a, b)) {
        disj.pass = false;
        disj.witness = "line " + a + "." + b + " meets the region";
        break;
      }
    extra.push_back(disj);
    if (!add(extra)) return finish();

    const auto deg = static_cast<unsigned>(r.adjoint_degree());
    auto ad = timer.run("adjoint", [&] { return adjoint_interpolate(comps, deg); });
    Check uniq{"adjoint_unique", ad.nullspace_dim == 1, {}, {{"degree", deg}, {"nullspace_dim", ad.nullspace_dim}}};
    if (!uniq.pass) {
      uniq.witness = "nullspace dimension " + std::to_string(ad.nullspace_dim);
      json b = json::array();
      for (const auto& p : ad.basis) b.push_back(p.str());
      uniq.detail["basis"] = b;
    }
    if (!add({uniq})) return finish();
    QPoly adj = *ad.adj;

    Check poles{"adjoint_poles", true, {}, {}};
    for (const auto& f : r.facets)
      if (QIdeal::of({f.poly}).contains(adj)) {
        poles = {"adjoint_poles", false, "adjoint is divisible by " + f.name, {}};
        break;
      }
    Check member{"adjoint_on_arrangement", true, {}, {}};
    for (const auto& comp : comps)
      if (!comp.ideal->contains(adj)) {
        member = {"adjoint_on_arrangement", false, "adjoint does not vanish on " + comp.name, {}};
        break;
      }
    if (!add({poles, member})) return finish();

    auto verts = timer.run("vertices", [&] { return vertex_enumerate(r); });
    std::optional<Rational> rho;
    for (const auto& v : verts)
      if (detail::triple_str(v.triple) == r.reference_vertex) rho = vertex_residue(canonical_form(r, adj), v).exact;
    if (!rho || rho->is_zero()) throw ConstructionError("adjoint_normalization", "reference vertex " + r.reference_vertex + " has no exact residue");
    if (rho->sign() < 0) adj = -adj;
    Rational scale = r.integral_adjoint ? Rational(1) : rho->abs().inverse();
    auto omega = canonical_form(r, adj * scale);
    rep.data["adjoint"] = {{"degree", deg},
                           {"nullspace_dim", ad.nullspace_dim},
                           {"polynomial", adj.str()},
                           {"coefficients", detail::poly_coefficients(adj)},
                           {"scale", scale.str()},
                           {"reference_residue", rho->abs().str()}};

    Check res{"vertex_residues", true, {}, json::array()};
    int plus = 0, minus = 0;
    auto width = enclosure_width();
    timer.run("residues", [&] {
      for (const auto& v : verts) {
        auto val = vertex_residue(omega, v, width);
        auto vj = to_json(v);
        bool ok;
        if (val.exact) {
          ok = val.exact->abs() == Rational(1);
          vj["residue"] = val.exact->str();
        } else {
          ok = val.enclosure.width() < width && (val.enclosure.contains(Rational(1)) || val.enclosure.contains(Rational(-1)));
          vj["residue_enclosure"] = {val.enclosure.lo.str(), val.enclosure.hi.str()};
          vj["residue_decimal"] = decimal(val.enclosure.mid());
          if (val.algebraic_exact) vj["residue_exact_algebraic"] = val.algebraic_exact->str();
        }
        vj["sign"] = val.sign();
        (val.sign() > 0 ? plus : minus)++;
        res.detail.push_back(vj);
        if (!ok && res.pass) {
          res.pass = false;
          res.witness = "vertex " + detail::triple_str(v.triple) + " has residue of absolute value != 1";
        }
      }
      return 0;
    });
    rep.data["residue_signs"] = {{"plus", plus}, {"minus", minus}};
    if (!add({res})) return finish();

    auto fr = timer.run("facet_residue", [&] { return facet_residue(omega, r, opt.facet); });
    Check fc{"facet_residue", fr.divisible && fr.identity, {}, {{"facet", fr.facet}, {"pivot", fr.pivot}}};
    if (!fr.divisible) fc.witness = "numerator restricted to " + fr.facet + " is not divisible by the opposite facet";
    else if (!fr.quad.diagonals_agree) fc.witness = "quadrilateral diagonal splits disagree";
    else if (!fr.identity) fc.witness = "residue differs from the quadrilateral form";
    else fc.detail["relative_sign"] = fr.relative_sign;
    if (!add({fc})) return finish();

    if (!r.surface.empty()) {
      auto ks = timer.run("kernel", [&] { return kernel_check(omega, r, opt.lambdas, opt.facet); });
      Check kc{"kernel_form", true, {}, json::array()};
      for (const auto& k : ks) {
        kc.detail.push_back({{"lambda", k.lambda.str()}, {"divisible", k.divisible}});
        if (k.divisible != k.lambda.is_zero() && kc.pass) {
          kc.pass = false;
          kc.witness = "lambda = " + k.lambda.str() + (k.divisible ? " cancels the pole" : " keeps a pole");
        }
      }
      add({kc});
    }
  } catch (const ConstructionError& e) {
    rep.checks.push_back({e.check(), false, e.what(), {}});
  }
  return finish();
}

}  // namespace pg
