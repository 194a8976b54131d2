#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "netclass/error.hpp"
#include "netclass/graph/disjoint_set.hpp"
#include "netclass/graph/mst.hpp"
#include "netclass/graph/sssp.hpp"
#include "support/oracles.hpp"

namespace netclass {
namespace {

DistanceGraph triangle() { return DistanceGraph::from_edges(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}); }

TEST(KruskalMst, Triangle) {
  const auto tree = kruskal_mst(triangle());
  ASSERT_EQ(tree.edges.size(), 2u);
  EXPECT_EQ(tree.edges[0], (Edge{0, 1, 1.0}));
  EXPECT_EQ(tree.edges[1], (Edge{1, 2, 2.0}));
  EXPECT_EQ(tree.total_weight, 3.0);
}

TEST(KruskalMst, SingleNode) {
  const auto tree = kruskal_mst(build_distance_graph(Matrix{{4.0}}));
  EXPECT_TRUE(tree.edges.empty());
  EXPECT_EQ(tree.total_weight, 0.0);
}

TEST(KruskalMst, DisconnectedNamesComponents) {
  const auto g = DistanceGraph::from_edges(5, {{0, 1, 1.0}, {2, 3, 1.0}});
  try {
    kruskal_mst(g);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("3 components"), std::string::npos) << e.what();
  }
}

TEST(KruskalMst, TiesBrokenByLowerEndpoints) {
  // Square with equal sides: the first three by (u, v) order win.
  const auto g = DistanceGraph::from_edges(4, {{2, 3, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {0, 1, 1.0}});
  const auto tree = kruskal_mst(g);
  ASSERT_EQ(tree.edges.size(), 3u);
  EXPECT_EQ(tree.edges[0], (Edge{0, 1, 1.0}));
  EXPECT_EQ(tree.edges[1], (Edge{0, 3, 1.0}));
  EXPECT_EQ(tree.edges[2], (Edge{1, 2, 1.0}));
}

// n = 6 complete graph: 6^4 = 1296 spanning trees.
TEST(KruskalMst, MatchesCayleyEnumerationN6) {
  std::mt19937_64 rng(6);
  const auto g = testing::random_complete_graph(rng, 6);
  ASSERT_EQ(testing::cayley_count(6), 1296u);
  EXPECT_NEAR(kruskal_mst(g).total_weight, testing::brute_force_mst_total(testing::to_weight_matrix(g)), 1e-9);
}

TEST(KruskalMst, TreeIsAcyclicSpanningAndSumsWeights) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    const auto g = build_distance_graph(testing::random_points(rng, n, 3));
    const auto tree = kruskal_mst(g);
    ASSERT_EQ(tree.edges.size(), n - 1);
    DisjointSet ds(n);
    double sum = 0.0;
    for (const Edge& e : tree.edges) {
      EXPECT_TRUE(ds.unite(e.u, e.v)) << "cycle";
      sum += e.weight;
    }
    EXPECT_EQ(ds.set_count(), 1u);
    EXPECT_TRUE(testing::close(sum, tree.total_weight));
    EXPECT_TRUE(testing::close(tree.total_weight, testing::prim_mst_total(testing::to_weight_matrix(g))));
  }
}

TEST(KruskalMst, MergedPassEqualsFullSort) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const auto g = testing::random_complete_graph(rng, n, 0.0, 1.0);
    auto all = sorted_edges(g);
    std::vector<Edge> a, b;
    for (const Edge& e : all) (rng() % 2 ? a : b).push_back(e);
    EXPECT_EQ(kruskal_total_merged(n, a, b), kruskal_mst(g).total_weight);
    EXPECT_EQ(kruskal_total_merged(n, all, {}), kruskal_mst(g).total_weight);
  }
}

TEST(KruskalMst, PermutationAndScalingInvariance) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 25;
    const Matrix m = testing::random_points(rng, n, 2);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double base = kruskal_mst(build_distance_graph(m)).total_weight;
    EXPECT_TRUE(testing::close(base, kruskal_mst(build_distance_graph(m.select_rows(perm))).total_weight));
    const double c = 0.1 + 10.0 * std::uniform_real_distribution<double>()(rng);
    Matrix scaled = m;
    for (double& v : scaled.values()) v *= c;
    EXPECT_TRUE(testing::close(c * base, kruskal_mst(build_distance_graph(scaled)).total_weight));
  }
}

}  // namespace
}  // namespace netclass
