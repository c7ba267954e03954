#include <gtest/gtest.h>

#include <algorithm>

#include "firstfall/error.hpp"
#include "firstfall/ring.hpp"
#include "helpers.hpp"

using namespace firstfall;
using firstfall::testing::kP;
using firstfall::testing::poly;

TEST(MonomialBasis, BilinearPieceHasProductCount) {
  RingSpec r(kP, {{"x", 2}, {"y", 2}});
  const auto basis = monomial_basis(r, {1, 1});
  ASSERT_EQ(basis.size(), 4u);
  EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
  for (const auto& m : basis) EXPECT_EQ(mdeg(r, m), (MultiDegree{1, 1}));
}

TEST(MonomialBasis, StarsAndBars) {
  const auto r = RingSpec::standard(kP, 2);
  EXPECT_EQ(monomial_basis(r, {3}).size(), 4u);
  EXPECT_EQ(monomial_count(r, {3}), 4u);
}

TEST(MonomialBasis, ExponentCapLeavesOneMonomial) {
  const auto r = RingSpec::standard(kP, 2);
  const auto basis = monomial_basis(r, {4}, 3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].exps, (std::vector<std::uint16_t>{2, 2}));
  EXPECT_EQ(monomial_count(r, {4}, 3), 1u);
}

TEST(MonomialBasis, CountMatchesEnumerationOnWeightedRing) {
  RingSpec r(kP, {{"x", 2}, {"y", 1}}, {MultiDegree{1, 0}, MultiDegree{2, 1}, MultiDegree{0, 1}});
  for (const auto& d : multidegrees_up_to(2, 6)) EXPECT_EQ(monomial_basis(r, d).size(), monomial_count(r, d));
}

TEST(Homogeneity, BilinearFormHasDegreeOneOne) {
  RingSpec r(kP, {{"x", 2}, {"y", 2}});
  const auto h = is_multihomogeneous(poly(kP, {{1, {1, 0, 1, 0}}, {1, {0, 1, 0, 1}}}), r);
  ASSERT_TRUE(h.is_degree());
  EXPECT_EQ(h.degree, (MultiDegree{1, 1}));
}

TEST(Homogeneity, MixedBlocksAreNotHomogeneous) {
  RingSpec r(kP, {{"x", 2}, {"y", 2}});
  const auto h = is_multihomogeneous(poly(kP, {{1, {1, 0, 1, 0}}, {1, {2, 0, 0, 0}}}), r);
  EXPECT_EQ(h.kind, Homogeneity::Kind::NotHomogeneous);
}

TEST(Homogeneity, ZeroIsDistinguished) {
  RingSpec r(kP, {{"x", 2}});
  EXPECT_EQ(is_multihomogeneous(Poly{}, r).kind, Homogeneity::Kind::Zero);
}

TEST(TopComponent, DropsLowerDegrees) {
  const auto p = poly(kP, {{1, {1, 1}}, {1, {1, 0}}, {1, {0, 0}}});
  EXPECT_EQ(top_component(p), poly(kP, {{1, {1, 1}}}));
}

TEST(TopComponent, HomogeneousInputIsUnchanged) {
  const auto p = poly(kP, {{3, {2, 0}}, {5, {1, 1}}});
  EXPECT_EQ(top_component(p), p);
}

TEST(TopComponent, TotalDegreeTieKeepsEverything) {
  const auto p = poly(kP, {{1, {1, 0, 1, 0}}, {1, {2, 0, 0, 0}}});
  EXPECT_EQ(top_component(p), p);
}

TEST(Deglex, TotalFirstThenLex) {
  EXPECT_EQ(deglex_cmp({1, 2}, {2, 1}), std::strong_ordering::less);
  EXPECT_EQ(deglex_cmp({2, 0}, {0, 3}), std::strong_ordering::less);
  EXPECT_EQ(deglex_cmp({1, 1}, {1, 1}), std::strong_ordering::equal);
}

TEST(Deglex, EnumerationIsSortedAndComplete) {
  const auto ds = multidegrees_up_to(3, 4);
  EXPECT_EQ(ds.size(), 35u);  // C(4+3, 3)
  EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end(), DeglexLess{}));
}

TEST(Poly, ArithmeticAndEvaluation) {
  const FieldSpec f(7);
  const auto a = poly(f, {{1, {1, 0}}, {1, {0, 1}}});
  const auto sq = mul(a, a, f);
  EXPECT_EQ(sq, poly(f, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));
  EXPECT_TRUE(sub(a, a, f).is_zero());
  const std::vector<FieldElem> pt{{3}, {5}};
  EXPECT_EQ(evaluate(sq, pt, f).value, 1u);  // 8^2 = 64 = 1 mod 7
}

TEST(Poly, AddTermCancelsToZero) {
  const FieldSpec f(7);
  Poly p;
  p.add_term(Monomial{{1}}, {3}, f);
  p.add_term(Monomial{{1}}, {4}, f);
  EXPECT_TRUE(p.is_zero());
}

TEST(SystemInstance, DegreesRejectZeroGenerator) {
  SystemInstance sys{RingSpec::standard(kP, 2), {Poly{}}};
  try {
    sys.degrees();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHomogeneousSystem);
  }
}

TEST(SystemInstance, CollapsedRingSumsWeights) {
  RingSpec r(kP, {{"x", 2}, {"y", 1}});
  SystemInstance sys{r, {poly(kP, {{1, {1, 0, 1}}})}};
  const auto c = sys.collapsed();
  EXPECT_EQ(c.ring.s(), 1u);
  EXPECT_EQ(c.degrees().front(), (MultiDegree{2}));
}

TEST(RingSpec, RejectsEmptyBlock) {
  EXPECT_THROW(RingSpec(kP, {{"x", 0}}), Error);
}
