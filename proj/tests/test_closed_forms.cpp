#include <string>

#include <gtest/gtest.h>

#include "gpbc/centrality.hpp"
#include "gpbc/closed_forms.hpp"
#include "gpbc/families.hpp"
#include "gpbc/geodesics.hpp"

namespace gpbc {
namespace {

using namespace closed_forms;

constexpr auto OO = PairClass::OuterOuter;
constexpr auto II = PairClass::InnerInner;
constexpr auto OI = PairClass::OuterInner;

Rational value(const ClosedFormValue& v) {
  EXPECT_TRUE(v.applicable()) << v.reason;
  return v.value.value_or(Rational(-1));
}

TEST(ClassifyTest, ShorterWayAround) {
  EXPECT_EQ(classify_pair(13, VertexId::outer(0, 13), VertexId::outer(9, 13)), (PairKind{OO, 4}));
  EXPECT_EQ(classify_pair(13, VertexId::inner(2, 13), VertexId::outer(0, 13)), (PairKind{OI, 2}));
  EXPECT_EQ(classify_pair(12, VertexId::inner(1, 12), VertexId::inner(7, 12)), (PairKind{II, 6}));
  EXPECT_EQ((PairKind{II, 5}).str(), "InnerInner r=5");
}

TEST(SigmaFormulaTest, Examples) {
  EXPECT_THROW(cf_sigma(13, {OO, 7}), DomainError);
  EXPECT_EQ(value(cf_sigma(15, {OO, 7})), Rational(3));
  EXPECT_EQ(value(cf_sigma(17, {II, 3})), Rational(2));
  EXPECT_EQ(value(cf_sigma(14, {OI, 7})), Rational(2));
  EXPECT_EQ(value(cf_sigma(13, {OO, 4})), Rational(2));
  EXPECT_EQ(value(cf_sigma(11, {OO, 5})), Rational(4));
  EXPECT_EQ(value(cf_sigma(14, {II, 7})), Rational(8));
  EXPECT_EQ(value(cf_sigma(10, {OO, 5})), Rational(6));
  EXPECT_EQ(value(cf_sigma(20, {OO, 0})), Rational(1));
  EXPECT_THROW(cf_sigma(4, {OO, 1}), DomainError);
  EXPECT_FALSE(cf_sigma(15, {OO, 7}).anchor.empty());
}

TEST(DistanceFormulaTest, Examples) {
  EXPECT_EQ(value(cf_distance(20, {OO, 8})), Rational(6));
  EXPECT_EQ(value(cf_distance(20, {II, 0})), Rational(0));
  EXPECT_EQ(value(cf_distance(20, {OI, 3})), Rational(3));
  EXPECT_EQ(value(cf_distance(14, {OO, 6})), Rational(5));
  EXPECT_EQ(value(cf_distance(12, {II, 3})), Rational(4));
  EXPECT_EQ(value(cf_distance(20, {II, 3})), Rational(4));
  EXPECT_THROW(cf_distance(20, {OI, 11}), DomainError);
}

TEST(DiameterFormulaTest, Examples) {
  EXPECT_EQ(value(cf_diameter(13)), Rational(5));
  EXPECT_EQ(value(cf_diameter(8)), Rational(4));
  EXPECT_EQ(value(cf_diameter(12)), Rational(5));
  const auto small = cf_diameter(5);
  EXPECT_FALSE(small.applicable());
  EXPECT_FALSE(small.reason.empty());
  EXPECT_FALSE(cf_diameter(7).applicable());
  EXPECT_THROW(cf_diameter(4), DomainError);
}

TEST(BetweennessFormulaTest, OuterExamples) {
  const auto b13 = cf_betweenness_outer(13);
  EXPECT_EQ(value(b13), Rational(33, 2));
  ASSERT_EQ(b13.breakdown.size(), 3u);
  EXPECT_EQ(b13.breakdown[0].value, Rational(13, 2));
  EXPECT_EQ(b13.breakdown[1].value, Rational(4));
  EXPECT_EQ(b13.breakdown[2].value, Rational(6));
  EXPECT_EQ(b13.breakdown[0].name, "B(u0,U)");
  EXPECT_EQ(value(cf_betweenness_outer(12)), Rational(37, 2));
  EXPECT_EQ(value(cf_betweenness_outer(15)), Rational(59, 3));
  EXPECT_THROW(cf_betweenness_outer(11), DomainError);
}

TEST(BetweennessFormulaTest, InnerExamples) {
  EXPECT_EQ(value(cf_betweenness_inner(13)), Rational(65, 2));
  const auto b14 = cf_betweenness_inner(14);
  EXPECT_EQ(value(b14), Rational(38));
  ASSERT_EQ(b14.breakdown.size(), 3u);
  EXPECT_EQ(b14.breakdown[0].value, Rational(19, 2));
  EXPECT_EQ(b14.breakdown[1].value, Rational(15, 2));
  EXPECT_EQ(b14.breakdown[2].value, Rational(21));
  EXPECT_EQ(value(cf_betweenness_inner(15)), Rational(139, 3));
  EXPECT_THROW(cf_betweenness_inner(5), DomainError);
}

// The totals are separate formulas; their components must add up to them.
TEST(BetweennessFormulaTest, PropertyBreakdownSumsToTotal) {
  auto check = [](std::size_t n) {
    for (const auto& cf : {cf_betweenness_outer(n), cf_betweenness_inner(n)}) {
      Rational sum;
      for (const auto& c : cf.breakdown) sum += c.value;
      ASSERT_EQ(sum, *cf.value) << "n=" << n;
    }
  };
  for (std::size_t n = 12; n <= 5000; ++n) check(n);
  for (std::size_t n = 5001; n <= 1000000; n += 997) check(n);
  check(999999);
  check(1000000);
}

TEST(BetweennessFormulaTest, ResidueDispatch) {
  EXPECT_NE(cf_betweenness_outer(16).anchor.find("even"), std::string::npos);
  EXPECT_NE(cf_betweenness_outer(17).anchor.find("13,17,21"), std::string::npos);
  EXPECT_NE(cf_betweenness_outer(19).anchor.find("15,19,23"), std::string::npos);
  EXPECT_NE(cf_betweenness_inner(21).anchor.find("13,17,21"), std::string::npos);
  EXPECT_NE(cf_betweenness_inner(23).anchor.find("15,19,23"), std::string::npos);
}

// Frozen against the Brandes oracle: totals for the first residue classes.
TEST(BetweennessFormulaTest, MatchesOracleSmallRange) {
  for (std::size_t n = 12; n <= 23; ++n) {
    const auto m = betweenness(build_gp(n, 2));
    EXPECT_EQ(*cf_betweenness_outer(n).value, m.values[0]) << "n=" << n;
    EXPECT_EQ(*cf_betweenness_inner(n).value, m.values[n]) << "n=" << n;
  }
}

TEST(ClassicFormulaTest, Examples) {
  EXPECT_EQ(value(cf_classic_induced(Family::Path, 6, 3, 5)), Rational(2));
  EXPECT_EQ(value(cf_classic_induced(Family::Path, 6, 3, 1)), Rational(3));
  EXPECT_EQ(value(cf_classic_induced(Family::Cycle, 6, 3, 0)), Rational(0));
  EXPECT_EQ(value(cf_classic_induced(Family::Cycle, 7, 1, 0)), Rational(2));
  EXPECT_EQ(value(cf_classic_induced(Family::Star, 6, 0, 2)), Rational(4));
  EXPECT_EQ(value(cf_classic_induced(Family::Wheel, 8, 0, 3)), Rational(3));
  EXPECT_EQ(value(cf_classic_induced(Family::Wheel, 8, 1, 7)), Rational(1, 2));
  EXPECT_EQ(value(cf_classic_induced(Family::Wheel, 8, 1, 3)), Rational(0));
  EXPECT_THROW(cf_classic_induced(Family::Path, 6, 2, 2), DomainError);
  EXPECT_THROW(cf_classic_induced(Family::Wheel, 5, 0, 1), DomainError);
}

// Every family formula against the induced_by_vertex oracle, small sizes.
TEST(ClassicFormulaTest, PropertyMatchesOracle) {
  for (std::size_t n = 6; n <= 14; ++n) {
    const struct {
      Family family;
      AdjacencyGraph graph;
      std::size_t offset;
    } cases[] = {{Family::Path, families::path(n), 1},
                 {Family::Cycle, families::cycle(n), 0},
                 {Family::Star, families::star(n), 0},
                 {Family::Wheel, families::wheel(n), 0},
                 {Family::Complete, families::complete(n), 0}};
    for (const auto& c : cases) {
      const AllPairsGeodesics<BigInt> ap(c.graph);
      for (VertexIndex x = 0; x < n; ++x) {
        for (VertexIndex x0 = 0; x0 < n; ++x0) {
          if (x == x0) continue;
          const auto cf = cf_classic_induced(c.family, n, x + c.offset, x0 + c.offset);
          ASSERT_EQ(value(cf), induced_by_vertex(ap, x, x0))
              << to_string(c.family) << " n=" << n << " x=" << x << " x0=" << x0;
        }
      }
    }
  }
}

}  // namespace
}  // namespace gpbc
