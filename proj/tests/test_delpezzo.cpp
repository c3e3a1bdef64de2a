#include <gtest/gtest.h>

#include "pg/delpezzo/pipeline.hpp"
#include "pg/exactalg/parse.hpp"

using namespace pg;

namespace {

QUPoly upoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QUPoly(v);
}

const RegionReport& builtin_report() {
  static const RegionReport rep = verify_region(builtin_region());
  return rep;
}

QPoly builtin_adjoint() {
  const auto& rep = builtin_report();
  return parse_poly(rep.data["adjoint"]["polynomial"].get<std::string>(), builtin_region().u);
}

const Check* find_check(const RegionReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// 0 <= x, y <= 1, 0 <= z, 2 - z^2 >= 0: the top vertices sit at z = sqrt(2).
RegionSpec sqrt2_region() {
  RegionSpec r;
  r.name = "sqrt2-box";
  r.u = make_vars({"u0", "u1", "u2", "u3"});
  auto P = [&](const char* s) { return parse_poly(s, r.u); };
  r.facets = {{"L0", P("u0"), 1},      {"L1", P("u1"), 1}, {"L2", P("u3 - u0"), 1},
              {"L3", P("u3 - u1"), 1}, {"L4", P("u2"), 1}, {"S", P("2*u3^2 - u2^2"), 1}};
  r.opposite = {{{"L0", "L2"}, {"L1", "L3"}, {"L4", "S"}}};
  r.surface = "S";
  r.reference_vertex = "L0,L1,L4";
  return r;
}

}  // namespace

TEST(Region, BuiltinData) {
  auto r = builtin_region();
  EXPECT_EQ(r.facets.size(), 6u);
  EXPECT_EQ(r.adjoint_degree(), 4);
  const auto& s = r.facet("S").poly;
  EXPECT_EQ(s.degree(), 3);
  EXPECT_EQ(s.size(), 14u);
  EXPECT_EQ(r.facet("L2").poly, parse_poly("-6*u0 + u1 + 11*u3", r.u));
  EXPECT_EQ(r.points[3][1], Rational(1, 2));
  EXPECT_THROW(r.facet("L9"), InputError);
}

TEST(Region, JsonRoundTrip) {
  auto r = builtin_region();
  auto back = region_from_json(to_json(r));
  ASSERT_EQ(back.facets.size(), r.facets.size());
  for (std::size_t i = 0; i < r.facets.size(); ++i) {
    EXPECT_EQ(back.facets[i].name, r.facets[i].name);
    EXPECT_EQ(back.facets[i].poly.str(), r.facets[i].poly.str());
    EXPECT_EQ(back.facets[i].orientation, r.facets[i].orientation);
  }
  EXPECT_EQ(back.points, r.points);
  EXPECT_EQ(back.map_scale, r.map_scale);
  EXPECT_EQ(back.reference_vertex, r.reference_vertex);
  EXPECT_TRUE(back.integral_adjoint);

  auto j = to_json(plain_cube_region());
  EXPECT_EQ(region_from_json(j).facet("L5").poly, plain_cube_region().facet("L5").poly);

  json bad = to_json(r);
  bad["facets"][0]["orientation"] = 2;
  EXPECT_THROW(region_from_json(bad), InputError);
  bad = to_json(r);
  bad["opposite"][0][1] = "L7";
  EXPECT_THROW(region_from_json(bad), InputError);
}

TEST(Construction, BuiltinChecksPass) {
  auto r = builtin_region();
  for (const auto& c : verify_region_shape(r)) EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
  auto cs = verify_construction(r);
  ASSERT_EQ(cs.size(), 5u);
  for (const auto& c : cs) EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
}

TEST(Construction, UnscaledMapMissesSurface) {
  auto r = builtin_region();
  r.map_scale = {Rational(1), Rational(1), Rational(1), Rational(1)};
  auto cs = verify_construction(r);
  EXPECT_FALSE(cs[1].pass);
  EXPECT_EQ(cs[1].name, "surface_identity");
}

TEST(Construction, Witnesses) {
  auto r = builtin_region();
  r.points[2] = {Rational(0), Rational(-2), Rational(1)};
  auto cs = verify_construction(r);
  EXPECT_FALSE(cs[0].pass);
  EXPECT_NE(cs[0].witness.find("(C)"), std::string::npos);

  r = builtin_region();
  r.points[5] = {Rational(0), Rational(0), Rational(1)};  // on the line through A and C
  cs = verify_construction(r);
  EXPECT_FALSE(cs[3].pass);
  EXPECT_EQ(cs[3].witness, "A,C,F are collinear");

  r = builtin_region();
  r.cubics[3] = r.cubics[0] + r.cubics[1];
  EXPECT_FALSE(verify_construction(r)[2].pass);

  r = builtin_region();
  r.facets[1].poly = r.facets[0].poly * Rational(3);
  EXPECT_FALSE(verify_region_shape(r)[0].pass);
}

TEST(Factor, LineTimesConic) {
  auto v = make_vars({"x", "y", "z"});
  auto f = factor_cubic_line_conic(parse_poly("x^3 + x*y^2 + x*z^2", v));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->first * f->second, parse_poly("x^3 + x*y^2 + x*z^2", v));
  EXPECT_EQ(f->first.degree(), 1);
  EXPECT_FALSE(factor_cubic_line_conic(parse_poly("x^3 + y^3 + z^3", v)).has_value());
  auto g = parse_poly("(2*x - 3*y + z)*(x^2 - y*z + 5*z^2)", v);
  auto h = factor_cubic_line_conic(g);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->first * h->second, g);
  EXPECT_TRUE(h->first.divide_exact(parse_poly("2*x - 3*y + z", v)).has_value());
}

TEST(Factor, LinearFactors) {
  auto v = make_vars({"x", "y"});
  auto lf = linear_factors(parse_poly("(x - 2*y)*(x + y)*(x^2 + y^2)", v));
  EXPECT_EQ(lf.size(), 2u);
  EXPECT_TRUE(linear_factors(parse_poly("x^2 + y^2", v)).empty());
}

TEST(Factor, BuiltinPlaneSections) {
  auto r = builtin_region();
  const auto& s = r.facet("S").poly;
  for (const char* n : {"L1", "L2", "L3", "L4"}) {
    auto h = restrict_to_hyperplane(r.facet(n).poly);
    EXPECT_TRUE(factor_cubic_line_conic(h.restrict(s)).has_value()) << n;
  }
  auto h0 = restrict_to_hyperplane(r.facet("L0").poly);
  EXPECT_FALSE(factor_cubic_line_conic(h0.restrict(s)).has_value());
}

TEST(Factor, HyperplaneRestrictionLift) {
  auto u = make_vars({"u0", "u1", "u2", "u3"});
  auto ell = parse_poly("2*u0 - 5*u1 + u3", u);
  auto h = restrict_to_hyperplane(ell);
  EXPECT_EQ((*u)[h.pivot], "u1");
  auto f = parse_poly("u0*u1 + u2^2 - u3", u);
  auto back = h.lift(h.restrict(f));
  EXPECT_TRUE(QIdeal::of({ell}).contains(f - back));
}

TEST(Arrangement, BuiltinComponents) {
  auto comps = residual_arrangement(builtin_region());
  ASSERT_EQ(comps.size(), 7u);
  EXPECT_EQ(comps[0].name, "L0.S");
  EXPECT_EQ(comps[0].kind, "curve");
  const auto& h = comps[0].ideal->hilbert();
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 3);
  EXPECT_EQ(*h.genus, 1);
  for (std::size_t i : {1u, 2u}) {
    EXPECT_EQ(comps[i].kind, "line");
    EXPECT_EQ(comps[i].ideal->hilbert().degree, 1);
  }
  for (std::size_t i = 3; i < 7; ++i) {
    EXPECT_EQ(comps[i].kind, "conic");
    EXPECT_EQ(comps[i].ideal->hilbert().degree, 2);
    EXPECT_EQ(*comps[i].ideal->hilbert().genus, 0);
  }
  EXPECT_TRUE(check_arrangement(comps).pass);
}

TEST(Arrangement, DisplayedL2HasNoLine) {
  auto r = builtin_region();
  r.facets[2].poly = parse_poly("6*u0 + u1 + 11*u3", r.u);
  try {
    residual_arrangement(r);
    FAIL() << "expected a conic_factorization failure";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.check(), "conic_factorization");
  }
  auto rep = verify_region(r);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failed()->name, "conic_factorization");
}

TEST(Arrangement, MonomialCount) {
  EXPECT_EQ(monomials_of_degree(4, 4).size(), 35u);
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_of_degree(4, 4).front(), Monomial(std::vector<unsigned>{4, 0, 0, 0}));
}

TEST(Adjoint, BuiltinUnique) {
  auto r = builtin_region();
  auto ad = adjoint_interpolate(residual_arrangement(r), 4);
  EXPECT_EQ(ad.nullspace_dim, 1u);
  ASSERT_TRUE(ad.adj.has_value());
  EXPECT_TRUE(QIdeal::of({r.facet("S").poly, r.facet("L0").poly}).contains(*ad.adj));
  for (const auto& f : r.facets) EXPECT_FALSE(ad.adj->divide_exact(f.poly).has_value()) << f.name;
  EXPECT_TRUE(ad.adj->is_homogeneous());
  EXPECT_EQ(ad.adj->degree(), 4);
  auto normalized = builtin_adjoint();
  EXPECT_TRUE(normalized == *ad.adj || normalized == -*ad.adj);
}

TEST(Adjoint, PlainCubeQuadric) {
  auto r = plain_cube_region();
  EXPECT_EQ(r.adjoint_degree(), 2);
  auto comps = residual_arrangement(r);
  EXPECT_EQ(comps.size(), 3u);
  auto ad = adjoint_interpolate(comps, 2);
  EXPECT_EQ(ad.nullspace_dim, 1u);
}

TEST(Adjoint, UnitCubeLinesAtInfinity) {
  // the three residual lines all lie in u3 = 0
  auto ad = adjoint_interpolate(residual_arrangement(unit_cube_region()), 2);
  EXPECT_EQ(ad.nullspace_dim, 4u);
  for (const auto& b : ad.basis) EXPECT_TRUE(b.divide_exact(parse_poly("u3", unit_cube_region().u)).has_value());
}

TEST(Vertices, BuiltinPoints) {
  auto vs = vertex_enumerate(builtin_region());
  ASSERT_EQ(vs.size(), 8u);
  std::map<std::string, std::vector<Rational>> expect{
      {"L0,L1,L3", {Rational(240787, 535650), Rational(-157229, 285680), Rational(-868643, 1428400)}},
      {"L0,L2,L3", {Rational(24124, 13425), Rational(-977, 4475), Rational(7979, 17900)}},
      {"L1,L3,S", {Rational(76, 177), Rational(-20, 59), Rational(-40, 59)}},
      {"L1,L4,S", {Rational(114, 239), Rational(-90, 239), Rational(-233, 239)}},
      {"L2,L3,S", {Rational(28, 15), Rational(1, 5), Rational(2, 5)}},
      {"L2,L4,S", {Rational(39, 19), Rational(25, 19), Rational(-3, 19)}},
  };
  std::size_t matched = 0;
  for (const auto& v : vs) {
    ASSERT_TRUE(v.is_exact());
    EXPECT_EQ(v.remaining.size(), 3u);
    auto it = expect.find(detail::triple_str(v.triple));
    if (it == expect.end()) continue;
    EXPECT_EQ(*v.point, it->second) << it->first;
    ++matched;
  }
  EXPECT_EQ(matched, expect.size());
}

TEST(Vertices, BuiltinResidueSigns) {
  auto r = builtin_region();
  auto w = canonical_form(r, builtin_adjoint());
  auto w2 = canonical_form(r, builtin_adjoint() * Rational(2));
  std::map<std::string, int> expect{{"L0,L1,L3", 1}, {"L0,L1,L4", -1}, {"L0,L2,L3", -1}, {"L0,L2,L4", 1},
                                    {"L1,L3,S", -1}, {"L1,L4,S", 1},   {"L2,L3,S", 1},   {"L2,L4,S", -1}};
  for (const auto& v : vertex_enumerate(r)) {
    auto a = vertex_residue(w, v);
    ASSERT_TRUE(a.exact.has_value());
    EXPECT_EQ(*a.exact, Rational(expect.at(detail::triple_str(v.triple))));
    EXPECT_EQ(*vertex_residue(w2, v).exact, *a.exact * Rational(2));
  }
}

TEST(Vertices, UnitCube) {
  auto r = unit_cube_region();
  auto w = canonical_form(r, parse_poly("u3^2", r.u));
  auto vs = vertex_enumerate(r);
  ASSERT_EQ(vs.size(), 8u);
  int sum = 0;
  for (const auto& v : vs) {
    auto a = vertex_residue(w, v);
    ASSERT_TRUE(a.exact.has_value());
    EXPECT_EQ(a.exact->abs(), Rational(1));
    sum += a.exact->sign();
  }
  EXPECT_EQ(sum, 0);
}

TEST(Vertices, AlgebraicVertex) {
  auto r = sqrt2_region();
  auto vs = vertex_enumerate(r);
  ASSERT_EQ(vs.size(), 8u);
  const VertexCert* top = nullptr;
  for (const auto& v : vs)
    if (detail::triple_str(v.triple) == "L0,L1,S") top = &v;
  ASSERT_NE(top, nullptr);
  EXPECT_FALSE(top->is_exact());
  EXPECT_EQ(top->minpoly.degree(), 2);
  auto box = top->box();
  EXPECT_TRUE(box[0].contains(Rational(0)));
  EXPECT_TRUE(box[2].lo < Rational(14143, 10000) && Rational(14142, 10000) < box[2].hi);

  auto a = vertex_residue(canonical_form(r, parse_poly("u3^3", r.u)), *top);
  EXPECT_FALSE(a.exact.has_value());
  ASSERT_TRUE(a.algebraic_exact.has_value());
  EXPECT_EQ(*a.algebraic_exact, Rational(-1, 4));
  EXPECT_TRUE(a.enclosure.width() < enclosure_width());

  // -1/(2 sqrt 2) is irrational
  auto b = vertex_residue(canonical_form(r, parse_poly("u2*u3^2", r.u)), *top);
  EXPECT_FALSE(b.algebraic_exact.has_value());
  EXPECT_EQ(b.sign(), -1);
  EXPECT_TRUE(Rational(-35355339059328, 100000000000000) < b.enclosure.lo);
  EXPECT_TRUE(b.enclosure.hi < Rational(-35355339059327, 100000000000000));
}

TEST(Vertices, JsonUsesExactStrings) {
  auto r = sqrt2_region();
  for (const auto& v : vertex_enumerate(r)) {
    auto j = to_json(v);
    if (v.is_exact()) {
      EXPECT_TRUE(j["point"][0].is_string());
    } else {
      EXPECT_TRUE(j["box"][2][0].is_string());
      EXPECT_EQ(j["minpoly"].get<std::string>(), v.minpoly.str());
    }
  }
}

TEST(Quad, UnitSquare) {
  auto v = make_vars({"x", "y"});
  std::vector<QPoly> lines{parse_poly("x", v), parse_poly("1 - x", v), parse_poly("y", v), parse_poly("1 - y", v)};
  auto q = quad_canonical_form(lines, {Rational(1, 2), Rational(1, 2)});
  ASSERT_TRUE(q.numerator.has_value());
  EXPECT_TRUE(q.diagonals_agree);
  EXPECT_EQ(*q.numerator, QPoly::constant(v, Rational(1)));
}

TEST(Quad, Trapezoid) {
  // x >= 0, y >= 0, y <= 1, x + y <= 3: area-free check of the two splits
  auto v = make_vars({"x", "y"});
  std::vector<QPoly> lines{parse_poly("x", v), parse_poly("3 - x - y", v), parse_poly("y", v), parse_poly("1 - y", v)};
  auto q = quad_canonical_form(lines, {Rational(1), Rational(1, 2)});
  EXPECT_TRUE(q.diagonals_agree);
  ASSERT_TRUE(q.numerator.has_value());
  EXPECT_EQ(q.numerator->degree(), 1);
}

TEST(FacetResidue, BuiltinL0) {
  auto r = builtin_region();
  auto fr = facet_residue(canonical_form(r, builtin_adjoint()), r, "L0");
  EXPECT_TRUE(fr.divisible);
  EXPECT_TRUE(fr.quad.diagonals_agree);
  EXPECT_TRUE(fr.identity);
  EXPECT_EQ(fr.relative_sign, -1);
  EXPECT_EQ(fr.pivot, "u1");
}

TEST(FacetResidue, PerturbedNumeratorFails) {
  auto r = builtin_region();
  auto fr = facet_residue(canonical_form(r, builtin_adjoint() + parse_poly("u0^4", r.u)), r, "L0");
  EXPECT_FALSE(fr.divisible && fr.identity);
}

TEST(Kernel, OnlyZeroCancels) {
  auto r = builtin_region();
  auto ks = kernel_check(canonical_form(r, builtin_adjoint()), r,
                         {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(7, 3)});
  ASSERT_EQ(ks.size(), 6u);
  for (const auto& k : ks) EXPECT_EQ(k.divisible, k.lambda.is_zero()) << k.lambda.str();
}

TEST(RealRoots, Isolation) {
  auto f = upoly({-2, 0, 1});
  auto roots = isolate_real_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LE(roots[0].box.hi.sign(), 0);
  IsolatedRoot r = roots[1];
  refine(f, r, Rational(1, 1000000));
  EXPECT_TRUE(r.box.contains(Rational(1414213, 1000000)) || r.box.lo > Rational(1414213, 1000000));
  EXPECT_TRUE(r.box.hi < Rational(1414214, 1000000));
  EXPECT_EQ(count_roots(sturm_sequence(f), Rational(-10), Rational(10)), 2);
  EXPECT_EQ(count_roots(sturm_sequence(upoly({1, 0, 1})), Rational(-10), Rational(10)), 0);
}

TEST(RealRoots, RationalAndIrrational) {
  // (3t - 1)(t^2 - 2)(t + 5)^2
  auto f = upoly({-1, 3}) * upoly({-2, 0, 1}) * upoly({5, 1}) * upoly({5, 1});
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.size(), 2u);
  EXPECT_EQ(rr[0], Rational(-5));
  EXPECT_EQ(rr[1], Rational(1, 3));
  auto all = real_roots(f);
  ASSERT_EQ(all.size(), 4u);
  int exact = 0;
  for (const auto& x : all)
    if (x.exact) ++exact;
    else EXPECT_EQ(x.factor.degree(), 2);
  EXPECT_EQ(exact, 2);
}

TEST(RealRoots, SimplestBetween) {
  EXPECT_EQ(simplest_between(Rational(3, 10), Rational(9, 20)), Rational(1, 3));
  EXPECT_EQ(simplest_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(-7, 2), Rational(-3)), Rational(-3));
  EXPECT_EQ(simplest_between(Rational(-1, 2), Rational(1, 2)), Rational(0));
  EXPECT_EQ(simplest_between(Rational(31415, 10000), Rational(31416, 10000)), Rational(333, 106));
}

TEST(Interval, Arithmetic) {
  Interval a{Rational(1), Rational(2)}, b{Rational(-1), Rational(3)};
  auto p = a * b;
  EXPECT_EQ(p.lo, Rational(-2));
  EXPECT_EQ(p.hi, Rational(6));
  auto q = a / Interval{Rational(2), Rational(4)};
  EXPECT_EQ(q.lo, Rational(1, 4));
  EXPECT_EQ(q.hi, Rational(1));
  EXPECT_THROW(a / b, std::domain_error);
  EXPECT_EQ((a - b).lo, Rational(-2));
  EXPECT_EQ(b.abs().lo, Rational(0));
  EXPECT_EQ(b.sign(), 0);
  auto e = evaluate(upoly({-2, 0, 1}), Interval{Rational(1), Rational(2)});
  EXPECT_TRUE(e.contains(Rational(0)));
}

TEST(Decimal, Truncates) {
  EXPECT_EQ(decimal(Rational(1, 3), 5), "0.33333");
  EXPECT_EQ(decimal(Rational(-1, 3), 3), "-0.333");
  EXPECT_EQ(decimal(Rational(7), 2), "7.00");
  EXPECT_EQ(decimal(Rational(-1, 1000), 2), "-0.00");
}

TEST(Pipeline, BuiltinPasses) {
  const auto& rep = builtin_report();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
  EXPECT_TRUE(rep.pass);
  for (const char* n : {"incidence", "surface_identity", "residual_arrangement", "curve_smooth", "adjoint_unique",
                        "vertex_residues", "facet_residue", "kernel_form"})
    EXPECT_NE(find_check(rep, n), nullptr) << n;
  EXPECT_EQ(rep.data["residue_signs"]["plus"], 4);
  EXPECT_EQ(rep.data["residue_signs"]["minus"], 4);
  EXPECT_EQ(rep.data["adjoint"]["nullspace_dim"], 1);
  EXPECT_EQ(rep.data["adjoint"]["reference_residue"], "1");
  EXPECT_EQ(find_check(rep, "facet_residue")->detail["relative_sign"], -1);
  EXPECT_EQ(to_json(rep).count("failed_check"), 0u);
}

TEST(Pipeline, PlainCubePasses) {
  auto rep = verify_region(plain_cube_region());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
  EXPECT_EQ(rep.data["adjoint"]["degree"], 2);
  EXPECT_EQ(find_check(rep, "kernel_form"), nullptr);
}

TEST(Pipeline, ConstrainedCoefficientMutationsFail) {
  auto base = builtin_region();
  int runs = 0;
  auto expect_fail = [&](const RegionSpec& r, const std::string& what) {
    auto rep = verify_region(r);
    ++runs;
    EXPECT_FALSE(rep.pass) << what;
    if (!rep.pass) {
      EXPECT_FALSE(rep.failed()->name.empty()) << what;
    }
  };
  auto bump = [](const QPoly& p, std::size_t k) {
    auto ts = p.terms();
    ts[k].coeff += Rational(1);
    return QPoly(p.vars(), ts);
  };
  for (std::size_t f = 1; f < base.facets.size(); ++f)
    for (std::size_t k = 0; k < base.facets[f].poly.size(); ++k) {
      auto r = base;
      r.facets[f].poly = bump(base.facets[f].poly, k);
      expect_fail(r, base.facets[f].name + " term " + std::to_string(k));
    }
  for (std::size_t i = 0; i < base.cubics.size(); ++i)
    for (std::size_t k = 0; k < base.cubics[i].size(); ++k) {
      auto r = base;
      r.cubics[i] = bump(base.cubics[i], k);
      expect_fail(r, "c" + std::to_string(i) + " term " + std::to_string(k));
    }
  for (std::size_t i = 0; i < base.points.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      auto r = base;
      r.points[i][k] += Rational(1);
      expect_fail(r, base.point_names[i] + "[" + std::to_string(k) + "]");
    }
  EXPECT_GT(runs, 60);
}

TEST(Pipeline, L0MutationsCaughtByResidues) {
  auto base = builtin_region();
  for (const char* s : {"300*u0 - 899*u1 - 100*u2 - 691*u3", "300*u0 - 900*u1 - 100*u2 - 690*u3"}) {
    auto r = base;
    r.facets[0].poly = parse_poly(s, r.u);
    auto rep = verify_region(r);
    EXPECT_FALSE(rep.pass) << s;
    EXPECT_EQ(rep.failed()->name, "vertex_residues") << s;
  }
}

TEST(Pipeline, JsonMutationFails) {
  json j = to_json(builtin_region());
  j["facets"][5]["poly"] = j["facets"][5]["poly"].get<std::string>() + " + u3^3";
  auto rep = verify_region(region_from_json(j));
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failed()->name, "surface_identity");
}
