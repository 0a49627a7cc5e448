#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hilbsam;
using namespace testing_helpers;

namespace {

std::vector<QPoly> polys(const std::string& text, const PolyRingPtr& r) { return parse_generators<Rational>(text, r); }

/// Reduced-basis conditions: monic, no term divisible by another lead, and
/// every S-polynomial reduces to zero.
template <Field K>
void expect_reduced_groebner(const GroebnerBasis<K>& gb) {
  const auto& order = gb.order();
  const auto leads = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const auto& g = gb.elements()[i];
    EXPECT_TRUE(FieldTraits<K>::is_one(g.leading_term(order).coeff));
    for (const auto& t : g.terms())
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (j != i) EXPECT_FALSE(leads[j].divides(t.monomial)) << g.to_string();
  }
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const auto& f = gb.elements()[i];
      const auto& g = gb.elements()[j];
      auto l = leads[i].lcm(leads[j]);
      K one = FieldTraits<K>::from_int(1, gb.ring()->field);
      auto s = f.scaled(one, leads[i].quotient_of(l)) - g.scaled(one, leads[j].quotient_of(l));
      EXPECT_TRUE(gb.reduce(s).is_zero());
    }
}

}  // namespace

TEST(Buchberger, TextbookExampleLex) {
  // (x^2 + y^2 + z^2 - 1, x^2 + z^2 - y, x - z) under lex with x > y > z
  auto r = make_poly_ring({"x", "y", "z"});
  const MonomialOrder lex{OrderKind::lex};
  auto gb = buchberger(polys("x^2 + y^2 + z^2 - 1, x^2 + z^2 - y, x - z", r), lex);
  expect_reduced_groebner(gb);
  std::vector<QPoly> expect{q("z^4 + 1/2 z^2 - 1/4", r), q("y - 2 z^2", r), q("x - z", r)};
  EXPECT_EQ(gb.elements(), expect);
}

TEST(Buchberger, TwistedCubicDegrevlex) {
  auto r = make_poly_ring({"x", "y", "z", "w"});
  auto gb = buchberger(polys("x z - y^2, y w - z^2, x w - y z", r));
  expect_reduced_groebner(gb);
  EXPECT_EQ(gb.size(), 3u);
}

TEST(Buchberger, UnitIdealAndMembership) {
  auto r = make_poly_ring({"x", "y"});
  auto gb = buchberger(polys("x y - 1, x", r));
  EXPECT_TRUE(gb.is_unit());
  auto gb2 = buchberger(polys("x^2 - y, x y - 1", r));
  expect_reduced_groebner(gb2);
  EXPECT_TRUE(ideal_member(q("x^3 - 1", r), gb2));  // x*(x^2-y) + (xy-1)
  EXPECT_FALSE(ideal_member(q("x + y", r), gb2));
}

TEST(Buchberger, RejectsEmptyOrZeroInput) {
  auto r = make_poly_ring({"x"});
  EXPECT_THROW(buchberger(std::vector<QPoly>{}), PreconditionError);
  EXPECT_THROW(buchberger(std::vector<QPoly>{QPoly(r)}), PreconditionError);
}

TEST(Buchberger, CanonicalIndependentOfGeneratorOrder) {
  auto r = make_poly_ring({"x", "y", "z"});
  auto a = buchberger(polys("x^2 - y z, y^2 - x z, z^2 - x y, x^5", r));
  auto b = buchberger(polys("x^5, z^2 - x y, x^2 - y z, y^2 - x z, x^2 - y z + z^2 - x y", r));
  EXPECT_EQ(a, b);
}

TEST(Buchberger, AllOrdersAgreeOnColength) {
  auto r = make_poly_ring({"x", "y", "z"});
  auto gens = polys("x^3 - y z, y^3 - x z, z^3 - x y", r);
  std::optional<std::size_t> seen;
  for (auto kind : {OrderKind::lex, OrderKind::deglex, OrderKind::degrevlex}) {
    auto gb = buchberger(gens, MonomialOrder{kind});
    expect_reduced_groebner(gb);
    auto c = standard_monomials(gb).count();
    ASSERT_TRUE(c);
    if (seen) EXPECT_EQ(*c, *seen);
    seen = c;
  }
  EXPECT_EQ(*seen, 27u);  // Bezout: three cubics meeting in a finite scheme
}

TEST(Buchberger, PrimeFieldMatchesRationalsForGenericPrime) {
  auto rq = make_poly_ring({"x", "y"});
  auto rp = make_poly_ring({"x", "y"}, FieldDescriptor::prime(32003));
  const std::string gens = "x^3 - 2x y, x^2 y - 2y^2 + x";
  auto gq = buchberger(parse_generators<Rational>(gens, rq));
  auto gp = buchberger(parse_generators<ModP>(gens, rp));
  expect_reduced_groebner(gp);
  EXPECT_EQ(gq.leading_monomials(), gp.leading_monomials());
}

TEST(Buchberger, BudgetIsHonoured) {
  auto r = make_poly_ring({"x", "y", "z"});
  EXPECT_THROW(buchberger(polys("x^3 - y z, y^3 - x z, z^3 - x y", r), {}, ComputeBudget::seconds(-1)),
               ResourceLimit);
}

TEST(NormalForm, FirstListedReducerWins) {
  auto r = make_poly_ring({"x", "y"});
  // x y is divisible by both x and y; the first listed reducer is used
  auto nf1 = normal_form(q("x y", r), polys("x - 1, y - 2", r));
  auto nf2 = normal_form(q("x y", r), polys("y - 2, x - 1", r));
  EXPECT_EQ(nf1, q("2", r));
  EXPECT_EQ(nf2, q("2", r));
  EXPECT_EQ(normal_form(q("x^2 + y", r), polys("x^2", r)), q("y", r));
}

TEST(StandardMonomials, SmallQuotient) {
  auto r = make_poly_ring({"x", "y"});
  auto gb = buchberger(polys("x^2, x y, y^3", r));
  auto s = standard_monomials(gb);
  ASSERT_TRUE(s.finite);
  // 1, x, y, y^2
  EXPECT_EQ(s.count(), 4u);
  auto inf = standard_monomials(buchberger(polys("x^2", r)));
  EXPECT_FALSE(inf.finite);
}

TEST(Colength, MatchesLatticeOracleOnRandomMonomialIdeals) {
  std::mt19937 rng(20261014);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t arity = 1 + trial % 3;
    auto gens = oracle::random_monomial_ideal(rng, arity, arity == 3 ? 7 : 12, 1 + trial % 5);
    auto expect = oracle::lattice_colength(arity, gens);
    ASSERT_TRUE(expect);
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(arity);
    auto ring = poly_ring(names);
    std::vector<QPoly> ps;
    for (const auto& g : gens) ps.push_back(QPoly::monomial(ring->base, Monomial::from_exponents(g)));
    EXPECT_EQ(colength(ps, *ring), Colength(*expect));
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(Colength, MatchesLinearAlgebraOracleOnNonMonomialIdeals) {
  auto ring = poly_ring({"x", "y"});
  // (x^2 - y^3, x y) contains m^5; linear algebra on degree < 8 suffices
  auto gens = polys("x^2 - y^3, x y", ring->base);
  oracle::Sparse f1{{{2, 0}, 1}, {{0, 3}, -1}}, f2{{{1, 1}, 1}};
  EXPECT_EQ(colength(gens, *ring), Colength(oracle::linear_algebra_colength(2, {f1, f2}, 8)));
  EXPECT_EQ(colength(gens, *ring), Colength(5));  // 1, x, y, y^2, y^3
}

TEST(Colength, QuotientRingIncludesModulus) {
  auto ring = double_point(8);
  auto gens = polys("x^6, x^2 y", ring->base);
  // length(R/I) in the hypersurface ring: standard monomials of (x^6, x^2 y, y^2 - x^8)
  oracle::Sparse a{{{6, 0}, 1}}, b{{{2, 1}, 1}}, f{{{0, 2}, 1}, {{8, 0}, -1}};
  auto expect = oracle::linear_algebra_colength(2, {a, b, f}, 12);
  EXPECT_EQ(colength(gens, *ring), Colength(expect));
  EXPECT_EQ(expect, 8u);
}

TEST(Colength, UnitAndZeroIdeals) {
  auto ring = poly_ring({"x", "y"});
  EXPECT_EQ(colength(polys("1", ring->base), *ring), Colength(0));
  EXPECT_EQ(colength(std::vector<QPoly>{QPoly(ring->base)}, *ring), std::nullopt);
}

TEST(Support, ManyCases) {
  auto ring = poly_ring({"x", "y"});
  EXPECT_TRUE(supported_only_at_origin(polys("x^3, y^2", ring->base), *ring));
  EXPECT_TRUE(supported_only_at_origin(polys("x^2 - y^3, x y", ring->base), *ring));
  // finite colength but with a point away from the origin
  EXPECT_FALSE(supported_only_at_origin(polys("x^2 - x, y", ring->base), *ring));
  EXPECT_FALSE(supported_only_at_origin(polys("x^2", ring->base), *ring));
  EXPECT_FALSE(supported_only_at_origin(polys("1 + x", ring->base), *ring));
  EXPECT_FALSE(supported_only_at_origin(std::vector<QPoly>{QPoly(ring->base)}, *ring));
  auto dp = double_point(3);
  EXPECT_TRUE(supported_only_at_origin(polys("x", dp->base), *dp));
  EXPECT_FALSE(supported_only_at_origin(polys("x - 1", dp->base), *dp));
}
