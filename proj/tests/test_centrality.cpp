#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "brute_force.hpp"
#include "gpbc/centrality.hpp"
#include "gpbc/families.hpp"
#include "gpbc/petersen.hpp"

namespace gpbc {
namespace {

Rational from_frac(const brute::Frac& f) { return Rational(BigInt(f.num), BigInt(f.den)); }

TEST(BetweennessTest, PetersenIsThreeEverywhere) {
  const auto m = betweenness(build_gp(5, 2));
  const auto oracle = brute::betweenness(brute::adjacency_of(build_gp(5, 2)));
  for (VertexIndex v = 0; v < 10; ++v) {
    EXPECT_EQ(m.values[v], Rational(3));
    EXPECT_EQ(oracle[v], brute::Frac(3));
  }
}

TEST(BetweennessTest, GpTwelveTwo) {
  const auto m = betweenness(build_gp(12, 2));
  for (long long i = 0; i < 12; ++i) {
    EXPECT_EQ(m.at(VertexId::outer(i, 12)), Rational(37, 2));
    EXPECT_EQ(m.at(VertexId::inner(i, 12)), Rational(51, 2));
  }
}

TEST(InducedTest, BySet) {
  const auto g = build_gp(12, 2);
  const AllPairsGeodesics<BigInt> ap(g);
  EXPECT_EQ(induced_by_set(ap, 0, g.outer_ring()), Rational(13, 2));
  EXPECT_EQ(induced_by_set(ap, 0, g.inner_ring()), Rational(6));
  const std::vector<VertexIndex> single{3};
  EXPECT_EQ(induced_by_set(ap, 0, std::span<const VertexIndex>{}), Rational(0));
  EXPECT_EQ(induced_by_set(ap, 0, single), Rational(0));
}

TEST(InducedTest, ByVertexClassicFamilies) {
  // Path x1..x6 is 0..5: x = x3, x0 = x5.
  EXPECT_EQ(induced_by_vertex(families::path(6), 2, 4), Rational(2));
  EXPECT_EQ(induced_by_vertex(families::cycle(7), 1, 0), Rational(2));
  for (VertexIndex leaf = 1; leaf < 6; ++leaf) {
    EXPECT_EQ(induced_by_vertex(families::star(6), 0, leaf), Rational(4));
  }
  EXPECT_THROW(induced_by_vertex(families::path(6), 2, 2), SameVertexError);
}

TEST(InducedTest, BetweenSetsAndSum) {
  const auto g12 = build_gp(12, 2);
  const AllPairsGeodesics<BigInt> ap12(g12);
  EXPECT_EQ(induced_between_sets(ap12, 0, g12.outer_ring(), g12.inner_ring()), Rational(6));
  EXPECT_EQ(induced_sum(ap12, 0, g12.outer_ring(), g12.inner_ring()), Rational(25, 2));
  EXPECT_EQ(induced_between_sets(ap12, 0, g12.outer_ring(), std::span<const VertexIndex>{}),
            Rational(0));
  EXPECT_EQ(induced_sum(ap12, 0, std::span<const VertexIndex>{}, std::span<const VertexIndex>{}),
            Rational(0));

  const auto g14 = build_gp(14, 2);
  EXPECT_EQ(induced_between_sets(g14, 14, g14.outer_ring(), g14.inner_ring()), Rational(21));

  const std::vector<VertexIndex> a{0, 1, 2};
  const std::vector<VertexIndex> b{2, 3};
  EXPECT_THROW(induced_between_sets(ap12, 5, a, b), OverlapError);
  EXPECT_THROW(induced_sum(ap12, 5, a, b), OverlapError);
}

TEST(SubgraphTest, Examples) {
  const auto g12 = build_gp(12, 2);
  for (VertexIndex x : g12.outer_ring()) {
    EXPECT_EQ(subgraph_betweenness(g12, g12.outer_ring(), x), Rational(25, 2));
  }
  const auto g5 = build_gp(5, 2);
  std::vector<VertexIndex> all(10);
  for (VertexIndex v = 0; v < 10; ++v) all[v] = v;
  EXPECT_EQ(subgraph_betweenness(g5, all, 7), Rational(3));

  // u0 with its three neighbors forms a star centered at u0.
  const std::vector<VertexIndex> star{0, 1, 4, 5};
  EXPECT_EQ(subgraph_betweenness(g5, star, 0), Rational(3));
  EXPECT_EQ(subgraph_betweenness(g5, star, 1), Rational(0));
  EXPECT_THROW(subgraph_betweenness(g5, star, 2), MembershipError);
}

// Brandes, the pair-table triple loop and explicit path enumeration agree.
TEST(BetweennessTest, PropertyBrandesNaiveBrute) {
  std::vector<families::NamedGraph> graphs = families::small_fixtures();
  ASSERT_EQ(graphs.size(), 20u);
  for (std::size_t n = 5; n <= 12; ++n) {
    const auto gp = build_gp(n, 2);
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (VertexIndex v = 0; v < gp.vertex_count(); ++v) {
      for (auto w : gp.neighbors(v)) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
    graphs.push_back({"gp" + std::to_string(n), AdjacencyGraph(gp.vertex_count(), edges)});
  }
  for (const auto& [name, g] : graphs) {
    const auto fast = brandes_betweenness(g);
    const auto slow = naive_betweenness(g);
    const auto oracle = brute::betweenness(brute::adjacency_of(g));
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(fast[v], slow[v]) << name << " vertex " << v;
      ASSERT_EQ(fast[v], from_frac(oracle[v])) << name << " vertex " << v;
    }
  }
}

// B(x) = B(x,U) + B(x,V) + B(x,U|V) and B(x) = 1/2 sum_{x0} B(x,x0).
TEST(BetweennessTest, PropertyPartitionAndHalfSum) {
  for (std::size_t n = 5; n <= 24; ++n) {
    const auto g = build_gp(n, 2);
    const AllPairsGeodesics<BigInt> ap(g);
    const auto b = brandes_betweenness(g);
    for (VertexIndex x : {VertexIndex{0}, VertexIndex{n}}) {
      const auto parts = induced_by_set(ap, x, g.outer_ring()) + induced_by_set(ap, x, g.inner_ring()) +
                         induced_between_sets(ap, x, g.outer_ring(), g.inner_ring());
      ASSERT_EQ(parts, b[x]) << "n=" << n;
      Rational half_sum;
      for (VertexIndex x0 = 0; x0 < g.vertex_count(); ++x0) {
        if (x0 != x) half_sum += induced_by_vertex(ap, x, x0);
      }
      ASSERT_EQ(half_sum * Rational(1, 2), b[x]) << "n=" << n;
    }
  }
}

TEST(BetweennessTest, PropertyRotationInvariance) {
  for (std::size_t n = 5; n <= 30; ++n) {
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const auto m = betweenness(build_gp(n, k));
      for (long long i = 1; i < static_cast<long long>(n); ++i) {
        ASSERT_EQ(m.at(VertexId::outer(i, n)), m.at(VertexId::outer(0, n)));
        ASSERT_EQ(m.at(VertexId::inner(i, n)), m.at(VertexId::inner(0, n)));
      }
    }
  }
}

TEST(SerializationTest, CsvAndJson) {
  const auto m = betweenness(build_gp(12, 2));
  const auto csv = to_csv(m);
  EXPECT_EQ(csv.rfind("vertex,num,den,decimal\nu0,37,2,18.5\n", 0), 0u);
  EXPECT_NE(csv.find("\nv0,51,2,25.5\n"), std::string::npos);
  const auto doc = nlohmann::json::parse(to_json(m));
  EXPECT_EQ(doc.size(), 24u);
  EXPECT_EQ(doc["u0"]["num"], 37);
  EXPECT_EQ(doc["v11"]["den"], 2);
  EXPECT_EQ(to_json(m).rfind("{\"u0\":{\"num\":37,\"den\":2}", 0), 0u);
}

}  // namespace
}  // namespace gpbc
