#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "netclass/error.hpp"
#include "netclass/graph/mst.hpp"
#include "netclass/graph/sssp.hpp"
#include "support/oracles.hpp"

namespace netclass {
namespace {

TEST(DijkstraSssp, PathGraph) {
  const auto g = DistanceGraph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto r = dijkstra_sssp(g, 0);
  EXPECT_EQ(r.dist, (std::vector<double>{0.0, 1.0, 2.0}));
  EXPECT_EQ(r.total, 3.0);
  EXPECT_FALSE(r.parent[0].has_value());
  EXPECT_EQ(*r.parent[2], 1u);
}

TEST(DijkstraSssp, DetourBeatsDirectEdge) {
  const auto g = DistanceGraph::from_edges(3, {{0, 1, 5.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  const auto r = dijkstra_sssp(g, 0);
  EXPECT_EQ(r.dist, (std::vector<double>{0.0, 2.0, 1.0}));
  EXPECT_EQ(r.total, 3.0);
  EXPECT_EQ(*r.parent[1], 2u);
}

TEST(DijkstraSssp, Errors) {
  const auto g = DistanceGraph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_THROW(dijkstra_sssp(g, 4), InputError);
  EXPECT_THROW(dijkstra_sssp(g, 0), InputError);
}

TEST(DijkstraSssp, MatchesRelaxationOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 120;
    const auto g = testing::random_complete_graph(rng, n);
    const auto source = static_cast<NodeId>(rng() % n);
    const auto r = dijkstra_sssp(g, source);
    const auto oracle = testing::relaxation_distances(testing::to_weight_matrix(g), source);
    for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(r.dist[v], oracle[v], 1e-9);
  }
}

// dist[v] <= dist[u] + w on every edge, with equality along parent links.
TEST(DijkstraSssp, OptimalityConditions) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto g = trial % 2 ? testing::random_complete_graph(rng, n)
                             : build_distance_graph(testing::random_points(rng, n, 2), GraphMode::knn(1));
    const auto r = dijkstra_sssp(g, static_cast<NodeId>(rng() % n));
    EXPECT_EQ(r.dist[r.source], 0.0);
    double total = 0.0;
    for (double d : r.dist) total += d;
    EXPECT_EQ(total, r.total);
    for (const Edge& e : g.edges()) {
      EXPECT_LE(r.dist[e.v], r.dist[e.u] + e.weight + 1e-9);
      EXPECT_LE(r.dist[e.u], r.dist[e.v] + e.weight + 1e-9);
    }
    for (NodeId v = 0; v < n; ++v) {
      if (!r.parent[v]) continue;
      EXPECT_NEAR(r.dist[v], r.dist[*r.parent[v]] + *g.weight(v, *r.parent[v]), 1e-9);
    }
  }
}

TEST(DijkstraSssp, MstTotalNeverExceedsDistanceSum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto g = build_distance_graph(testing::random_points(rng, n, 3));
    const double mst = kruskal_mst(g).total_weight;
    for (NodeId s = 0; s < n; s += 7) EXPECT_LE(mst, dijkstra_sssp(g, s).total + 1e-9);
  }
}

TEST(DijkstraSssp, PermutationAndScalingInvariance) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Matrix m = testing::random_points(rng, n, 2);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto source = static_cast<NodeId>(rng() % n);
    const NodeId moved = static_cast<NodeId>(std::find(perm.begin(), perm.end(), source) - perm.begin());
    auto a = dijkstra_sssp(build_distance_graph(m), source).dist;
    auto b = dijkstra_sssp(build_distance_graph(m.select_rows(perm)), moved).dist;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(testing::close(a[i], b[i]));

    const double c = 0.5 + 4.0 * std::uniform_real_distribution<double>()(rng);
    Matrix scaled = m;
    for (double& v : scaled.values()) v *= c;
    auto s = dijkstra_sssp(build_distance_graph(scaled), source).dist;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(testing::close(c * a[i], s[i]));
  }
}

TEST(SelectSource, TieGoesToLowestIndex) {
  // mean is (1, 5/3); nodes 0 and 1 are equidistant (~1.944), node 2 ~3.333.
  EXPECT_EQ(select_source(Matrix{{0, 0}, {2, 0}, {1, 5}}), 0u);
}

TEST(SelectSource, SingleSample) { EXPECT_EQ(select_source(Matrix{{3, 3}}), 0u); }

TEST(SelectSource, SampleAtTheMean) {
  EXPECT_EQ(select_source(Matrix{{-1, 0}, {1, 0}, {0, 0}, {0, 2}, {0, -2}}), 2u);
  EXPECT_THROW(select_source(Matrix{}), InputError);
}

}  // namespace
}  // namespace netclass
