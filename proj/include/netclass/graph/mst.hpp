#pragma once

#include <span>
#include <vector>

#include "netclass/graph/distance_graph.hpp"

namespace netclass {

struct SpanningTree {
  std::vector<Edge> edges;  // in acceptance order
  double total_weight = 0.0;
};

/// Kruskal's algorithm: sort by (weight, u, v), then grow a forest with a
/// disjoint set. Throws InputError naming the component count if the graph
/// is disconnected.
SpanningTree kruskal_mst(const DistanceGraph& graph);

/// Kruskal pass over two edge lists that are each already sorted by
/// edge_less, merged on the fly. Returns the total weight only. Used to
/// evaluate an augmented graph without re-sorting the edges it shares with
/// the base graph.
double kruskal_total_merged(std::size_t node_count, std::span<const Edge> sorted_a,
                            std::span<const Edge> sorted_b);

/// The graph's edges sorted by edge_less.
std::vector<Edge> sorted_edges(const DistanceGraph& graph);

}  // namespace netclass
