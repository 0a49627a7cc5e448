#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hilbsam;
using namespace testing_helpers;

namespace {

PolyRingPtr plane() { return make_poly_ring({"x", "y"}); }

}  // namespace

TEST(Univariate, RationalRootsWithMultiplicity) {
  using univariate::Poly;
  // (t - 1)^2 (2t + 3) (t^2 + 1) expanded
  // (t^2 - 2t + 1)(2t + 3) = 2t^3 - t^2 - 4t + 3; times (t^2 + 1)
  Poly p{3, -4, 2, -2, -1, 2};
  auto split = univariate::rational_roots(p);
  ASSERT_EQ(split.roots.size(), 2u);
  EXPECT_EQ(split.roots[0].first, Rational(-3, 2));
  EXPECT_EQ(split.roots[0].second, 1u);
  EXPECT_EQ(split.roots[1].first, Rational(1));
  EXPECT_EQ(split.roots[1].second, 2u);
  ASSERT_EQ(split.cofactor.size(), 3u);  // t^2 + 1 up to scale
  EXPECT_EQ(split.cofactor[1], 0);
  EXPECT_EQ(split.cofactor[0], split.cofactor[2]);
}

TEST(Univariate, ZeroRootAndRationalCoefficients) {
  using univariate::Poly;
  Poly p{0, 0, Rational(1, 2), Rational(-1, 3)};  // t^2 (1/2 - t/3)
  auto split = univariate::rational_roots(p);
  ASSERT_EQ(split.roots.size(), 2u);
  EXPECT_EQ(split.roots[0], std::make_pair(Rational(0), 2u));
  EXPECT_EQ(split.roots[1], std::make_pair(Rational(3, 2), 1u));
}

TEST(BlowUp, CuspHasOneTangentAndChartBWhenVertical) {
  auto r = plane();
  auto bu = blow_up_origin(q("y^2 - x^3", r));
  EXPECT_EQ(bu.multiplicity, 2u);
  ASSERT_EQ(bu.points.size(), 1u);
  EXPECT_EQ(bu.points[0].step.chart, 'A');
  EXPECT_EQ(bu.points[0].step.coordinate, 0);
  EXPECT_EQ(bu.points[0].strict_transform, q("y^2 - x", r));
  // the tangent x = 0 is only visible in chart B
  auto vertical = blow_up_origin(q("x^2 - y^3", r));
  ASSERT_EQ(vertical.points.size(), 1u);
  EXPECT_EQ(vertical.points[0].step.chart, 'B');
  EXPECT_EQ(vertical.points[0].strict_transform, q("x^2 - y", r));
}

TEST(BlowUp, NodeSeparatesIntoTwoPoints) {
  auto r = plane();
  auto bu = blow_up_origin(q("y^2 - x^2 - x^3", r));
  ASSERT_EQ(bu.points.size(), 2u);
  EXPECT_EQ(bu.points[0].step.coordinate, -1);
  EXPECT_EQ(bu.points[1].step.coordinate, 1);
  for (const auto& p : bu.points) EXPECT_EQ(order_of_vanishing(p.strict_transform), 1u);
}

TEST(BlowUp, IrrationalSimpleTangentsAreSmoothPoints) {
  auto r = plane();
  auto bu = blow_up_origin(q("y^2 - 2x^2 + x^3", r));
  EXPECT_TRUE(bu.points.empty());
  EXPECT_EQ(bu.irrational_smooth_points, 2u);
}

TEST(Resolve, DoublePointFamilyMultiplicities) {
  auto r = plane();
  for (unsigned n = 2; n <= 13; ++n) {
    auto tree = resolve(q("y^2 - x^" + std::to_string(n), r));
    auto ms = tree.multiplicities();
    // floor(n/2) double points above the origin
    unsigned doubles = static_cast<unsigned>(std::count(ms.begin(), ms.end(), 2u));
    EXPECT_EQ(doubles, n / 2) << "n=" << n;
    EXPECT_TRUE(std::all_of(ms.begin(), ms.end(), [](unsigned m) { return m <= 2; }));
  }
}

TEST(Resolve, SmoothCurveIsALeaf) {
  auto tree = resolve(q("y - x^2", plane()));
  EXPECT_EQ(tree.multiplicity, 1u);
  EXPECT_TRUE(tree.children.empty());
  EXPECT_EQ(tree.depth(), 0u);
}

TEST(Resolve, Preconditions) {
  auto r = plane();
  EXPECT_THROW(resolve(q("y^2", r)), NonReducedError);
  EXPECT_THROW(resolve(q("(y - x)^2 * (y + x)", r)), NonReducedError);
  EXPECT_THROW(resolve(q("y - 1", r)), PreconditionError);
  EXPECT_THROW(resolve(q("0", r)), PreconditionError);
  auto three = make_poly_ring({"x", "y", "z"});
  EXPECT_THROW(resolve(q("x y - z^2", three)), PreconditionError);
}

TEST(Resolve, RepeatedIrrationalTangentIsRationalityError) {
  EXPECT_THROW(resolve(q("(y^2 - 2x^2)^2 + x^5", plane())), RationalityError);
}

TEST(Delta, AgreesWithMilnorFormulaOnBinomialCurves) {
  auto r = plane();
  std::vector<std::pair<long, long>> corpus;
  for (long n = 2; n <= 13; ++n) corpus.emplace_back(2, n);
  corpus.insert(corpus.end(), {{3, 4}, {3, 5}, {3, 6}, {4, 6}, {3, 7}});
  for (auto [p, qq] : corpus) {
    auto f = q("y^" + std::to_string(p) + " - x^" + std::to_string(qq), r);
    auto d = delta(f);
    EXPECT_EQ(d.delta_combinatorial, oracle::binomial_curve_delta(p, qq)) << p << "," << qq;
    EXPECT_TRUE(d.agree) << p << "," << qq;
    EXPECT_EQ(d.delta_northcott, d.delta_combinatorial);
  }
}

TEST(Delta, NodeAndTacnodeAndOrdinaryTriplePoint) {
  auto r = plane();
  EXPECT_EQ(delta(q("x y", r)).delta_combinatorial, 1);
  EXPECT_EQ(delta(q("y^2 - x^4", r)).delta_combinatorial, 2);
  // three lines: m = 3 once
  EXPECT_EQ(delta(q("x y (x - y)", r)).delta_combinatorial, 3);
  EXPECT_TRUE(delta(q("x y (x - y)", r)).agree);
  // y^2 = 2x^2 + x^3: a node with irrational branches
  auto irr = delta(q("y^2 - 2x^2 - x^3", r));
  EXPECT_EQ(irr.delta_combinatorial, 1);
  EXPECT_TRUE(irr.agree);
}

TEST(Hironaka, CurveExampleFlags) {
  auto r = plane();
  for (unsigned n = 8; n <= 12; ++n) {
    auto curve = make_plane_curve(q("y^2 - x^" + std::to_string(n), r));
    Ideal<Rational> i(curve.ring, parse_generators<Rational>("x^6, x^2 y", r));
    auto rep = is_hironaka(curve, i);
    EXPECT_EQ(rep.e0, 12);
    EXPECT_EQ(rep.e1, 4);
    EXPECT_EQ(rep.delta, n / 2);
    EXPECT_EQ(rep.hironaka, n == 8 || n == 9) << "n=" << n;
  }
}

TEST(Hironaka, MaximalIdealOfACusp) {
  auto r = plane();
  auto curve = make_plane_curve(q("y^2 - x^3", r));
  auto rep = is_hironaka(curve, Ideal<Rational>::maximal(curve.ring));
  EXPECT_EQ(rep.e0, 2);
  EXPECT_EQ(rep.e1, 1);
  EXPECT_EQ(rep.delta, 1);
  EXPECT_TRUE(rep.hironaka);
}

TEST(Hironaka, IdealMustLiveOnTheCurve) {
  auto r = plane();
  auto curve = make_plane_curve(q("y^2 - x^3", r));
  auto other = make_ring<Rational>(r);
  EXPECT_THROW(is_hironaka(curve, Ideal<Rational>::maximal(other)), PreconditionError);
}

TEST(Hironaka, BoundHoldsOnCurveCorpus) {
  auto r = plane();
  const std::vector<std::string> ideals{"x, y", "x^2, y", "x^3, y", "x^2, x y", "x^4, x y", "x^6, x^2 y"};
  for (unsigned n = 3; n <= 8; ++n) {
    auto curve = make_plane_curve(q("y^2 - x^" + std::to_string(n), r));
    for (const auto& gens : ideals) {
      Ideal<Rational> i(curve.ring, parse_generators<Rational>(gens, r));
      if (!i.is_m_primary()) continue;
      auto rep = is_hironaka(curve, i);
      EXPECT_GE(rep.e1, 0);
      EXPECT_LE(rep.e1, rep.delta) << "n=" << n << " I=(" << gens << ")";
    }
  }
}
