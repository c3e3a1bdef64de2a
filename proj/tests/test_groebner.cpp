#include <gtest/gtest.h>

#include <thread>

#include "pg/exactalg/parse.hpp"
#include "pg/groebner/json_io.hpp"
#include "pg/groebner/operations.hpp"

using namespace pg;

namespace {

QPoly P(const std::string& s, const Vars& v) { return parse_poly(s, v); }

QIdeal I(const Vars& v, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto s : gens) g.push_back(P(s, v));
  return QIdeal(v, std::move(g));
}

std::vector<QPoly> polys(const Vars& v, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto s : gens) g.push_back(P(s, v).with_order(MonomialOrder::grevlex()));
  return g;
}

}  // namespace

TEST(GroebnerBasis, SmallExamples) {
  auto v = make_vars({"x", "y"});
  auto lex = I(v, {"x^2", "x"}).basis(MonomialOrder::lex());
  ASSERT_EQ(lex.polys.size(), 1u);
  EXPECT_EQ(lex.polys[0], P("x", v));

  auto g = I(v, {"x - y", "x + y"}).basis();
  EXPECT_EQ(g.polys, polys(v, {"x", "y"}));

  auto pv = make_vars({"p12", "p13", "p14", "p23", "p24", "p34"});
  auto q = I(pv, {"2*p12*p34 - 2*p13*p24 + 2*p14*p23"}).basis();
  ASSERT_EQ(q.polys.size(), 1u);
  EXPECT_EQ(q.polys[0], P("p12*p34 - p13*p24 + p14*p23", pv));
}

TEST(GroebnerBasis, ZeroAndUnitIdeals) {
  auto v = make_vars({"x", "y"});
  EXPECT_TRUE(QIdeal::zero(v).basis().polys.empty());
  EXPECT_TRUE(I(v, {"x*y - 1", "x"}).is_unit());
  EXPECT_EQ(I(v, {"x*y - 1", "x"}).basis().polys, polys(v, {"1"}));
  EXPECT_THROW(groebner_basis(std::vector<QPoly>{}), InputError);
}

TEST(GroebnerBasis, Cyclic4) {
  auto v = make_vars({"a", "b", "c", "d"});
  auto id = I(v, {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"});
  const auto& gb = id.basis();
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
  EXPECT_EQ(gb.polys.size(), 7u);
  auto lex = id.basis(MonomialOrder::lex());
  EXPECT_TRUE(satisfies_buchberger_criterion(lex));
  EXPECT_TRUE(id.contains(P("(a+b+c+d)*(a-7*c)", v)));
  EXPECT_FALSE(id.contains(P("a", v)));
}

TEST(GroebnerBasis, PrimeField) {
  PrimeFieldScope scope(32003);
  auto v = make_vars({"x", "y", "z"});
  std::vector<FpPoly> gens;
  for (auto s : {"x^2 + y*z - 2", "y^2 - 3*x*z", "x*y*z - 1"}) gens.push_back(reduce_mod_p(P(s, v)));
  auto gb = groebner_basis(gens);
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
}

TEST(NormalForm, Examples) {
  auto v = make_vars({"x", "y", "z"});
  auto id = I(v, {"x^2 - y*z", "x*y - z^2"});
  for (const auto& g : id.generators()) EXPECT_TRUE(normal_form(g, id.basis()).is_zero());
  EXPECT_EQ(normal_form(P("1", v), id.basis()), P("1", v));
  EXPECT_THROW(normal_form(P("x", make_vars({"x"})), id.basis()), InputError);
}

TEST(Quotient, Examples) {
  auto v = make_vars({"x", "y"});
  EXPECT_EQ(quotient(I(v, {"x*y"}), I(v, {"x"})), I(v, {"y"}));
  EXPECT_EQ(saturate(I(v, {"x^2*y"}), I(v, {"x"})), I(v, {"y"}));
  EXPECT_EQ(saturate_aux(I(v, {"x^2*y"}), I(v, {"x"})), I(v, {"y"}));
  EXPECT_TRUE(quotient(I(v, {"x"}), I(v, {"x"})).is_unit());
}

TEST(Quotient, SplitsLineFromConic) {
  auto v = make_vars({"x", "y", "z", "w"});
  // plane w = 0 meets the cubic in line x = 0 plus conic
  auto cubic = I(v, {"w", "x*(y^2 - x*z + z^2)"});
  auto line = I(v, {"w", "x"});
  auto conic = quotient(cubic, line);
  EXPECT_EQ(conic, I(v, {"w", "y^2 - x*z + z^2"}));
  auto h = conic.hilbert();
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 2);
  EXPECT_EQ(*h.genus, 0);
}

TEST(Intersect, Monomial) {
  auto v = make_vars({"x", "y"});
  EXPECT_EQ(intersect(I(v, {"x^2", "y"}), I(v, {"x", "y^2"})), I(v, {"x^2", "x*y", "y^2"}));
}

TEST(Eliminate, Examples) {
  auto v = make_vars({"t", "x", "y"});
  auto e = eliminate(I(v, {"x - t", "y - t^2"}), {"t"});
  EXPECT_EQ(e, I(v, {"y - x^2"}));
  auto same = eliminate(I(v, {"x - t"}), {});
  EXPECT_EQ(same, I(v, {"x - t"}));

  // line through (1,2) and (3,5) in the affine plane, parametrized by s
  auto w = make_vars({"s", "a", "b"});
  auto line = eliminate(I(w, {"a - 1 - 2*s", "b - 2 - 3*s"}), {"s"});
  ASSERT_EQ(line.basis().polys.size(), 1u);
  const auto& f = line.basis().polys[0];
  EXPECT_TRUE(f.evaluate({Rational(0), Rational(1), Rational(2)}).is_zero());
  EXPECT_TRUE(f.evaluate({Rational(0), Rational(3), Rational(5)}).is_zero());
  EXPECT_THROW(eliminate(I(w, {"a"}), {"q"}), InputError);
}

TEST(Hilbert, FullRingAndCurves) {
  auto v = make_vars({"u0", "u1", "u2", "u3"});
  auto h = QIdeal::zero(v).hilbert();
  EXPECT_EQ(h.dimension, 3);
  EXPECT_EQ(h.degree, 1);
  // C(t+3,3) = (t^3 + 6t^2 + 11t + 6)/6
  EXPECT_EQ(h.polynomial, QUPoly(std::vector<Rational>{Rational(1), Rational(11, 6), Rational(1), Rational(1, 6)}));

  auto twisted = I(v, {"u0*u2 - u1^2", "u1*u3 - u2^2", "u0*u3 - u1*u2"}).hilbert();
  EXPECT_EQ(twisted.dimension, 1);
  EXPECT_EQ(twisted.degree, 3);
  EXPECT_EQ(*twisted.genus, 0);

  auto plane_cubic = I(v, {"u3", "u0^3 + u1^3 + u2^3"}).hilbert();
  EXPECT_EQ(plane_cubic.degree, 3);
  EXPECT_EQ(*plane_cubic.genus, 1);
  EXPECT_EQ(plane_cubic.polynomial, QUPoly(std::vector<Rational>{Rational(0), Rational(3)}));

  auto points = I(v, {"u1", "u2", "u3*(u3 - u0)"}).hilbert();
  EXPECT_EQ(points.dimension, 0);
  EXPECT_EQ(points.degree, 2);
  EXPECT_FALSE(points.genus);

  EXPECT_THROW(I(v, {"u0 - 1"}).hilbert(), InputError);
}

TEST(Hilbert, ProjectiveEmptiness) {
  auto v = make_vars({"u0", "u1", "u2", "u3"});
  auto irr = I(v, {"u0", "u1", "u2", "u3"});
  EXPECT_TRUE(irr.is_projectively_empty());
  EXPECT_TRUE(is_projectively_empty_by_saturation(irr));
  EXPECT_FALSE(I(v, {"u0"}).is_projectively_empty());
  EXPECT_FALSE(is_projectively_empty_by_saturation(I(v, {"u0"})));
  auto primary = I(v, {"u0^2", "u1^3", "u2*u0", "u2^2", "u3^4"});
  EXPECT_TRUE(primary.is_projectively_empty());
  EXPECT_TRUE(is_projectively_empty_by_saturation(primary));
}

TEST(Hilbert, GenericHyperplaneDropsDimension) {
  auto v = make_vars({"u0", "u1", "u2", "u3", "u4"});
  auto id = I(v, {"u0*u2 - u1^2"});
  EXPECT_EQ(id.hilbert().dimension, 3);
  auto cut1 = id.plus(polys(v, {"u0 + 2*u1 - 3*u2 + 5*u3 + 7*u4"}));
  EXPECT_EQ(cut1.hilbert().dimension, 2);
  auto cut2 = cut1.plus(polys(v, {"4*u0 - u1 + u2 - 2*u3 + u4"}));
  EXPECT_EQ(cut2.hilbert().dimension, 1);
  EXPECT_EQ(cut2.hilbert().degree, 2);
}

TEST(IdealCache, ConcurrentRequestsComputeOnce) {
  auto v = make_vars({"a", "b", "c", "d"});
  auto id = I(v, {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"});
  std::vector<std::thread> ts;
  std::vector<const GroebnerBasis<Rational>*> seen(4);
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { seen[i] = &id.basis(); });
  for (auto& t : ts) t.join();
  EXPECT_EQ(id.computations(), 1);
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
  id.basis(MonomialOrder::lex());
  EXPECT_EQ(id.computations(), 2);
}

TEST(GroebnerJson, RoundTrip) {
  auto v = make_vars({"x", "y", "z"});
  auto id = I(v, {"x^2 - y*z", "x*y - z^2"});
  auto j = to_json(id);
  EXPECT_EQ(ideal_from_json(j), id);
  auto gb = id.basis(MonomialOrder::lex());
  EXPECT_EQ(basis_from_json(basis_to_json(gb)), gb);
  auto h = to_json(I(make_vars({"u0", "u1", "u2"}), {"u0^3 + u1^3 + u2^3"}).hilbert());
  EXPECT_EQ(h.dump(), R"({"degree":3,"dim":1,"genus":1,"hp":["0","3"]})");
}
