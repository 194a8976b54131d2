#pragma once

#include <cstddef>
#include <concepts>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "netclass/error.hpp"
#include "netclass/graph/distance_graph.hpp"

namespace netclass {

struct ShortestPathResult {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<std::optional<NodeId>> parent;
  double total = 0.0;  // sum of dist over all nodes
};

/// Anything with node_count() and for_each_neighbor(u, f(v, w)).
template <class G>
concept AdjacencyGraph = requires(const G& g, NodeId u) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  g.for_each_neighbor(u, [](NodeId, double) {});
};

/// Dijkstra with a binary-heap min-priority queue (lazy deletion). Entries
/// are (distance, node) so equal distances pop the lower id first.
template <AdjacencyGraph G>
ShortestPathResult dijkstra_sssp_on(const G& graph, NodeId source) {
  const std::size_t n = graph.node_count();
  if (source >= n) {
    throw InputError("dijkstra: source " + std::to_string(source) + " out of range for " +
                     std::to_string(n) + " nodes");
  }
  ShortestPathResult result;
  result.source = source;
  result.dist.assign(n, std::numeric_limits<double>::infinity());
  result.parent.assign(n, std::nullopt);
  std::vector<bool> settled(n, false);

  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  result.dist[source] = 0.0;
  queue.emplace(0.0, source);
  std::size_t reached = 0;
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = true;
    ++reached;
    graph.for_each_neighbor(u, [&](NodeId v, double w) {
      const double candidate = d + w;
      if (candidate < result.dist[v]) {
        result.dist[v] = candidate;
        result.parent[v] = u;
        queue.emplace(candidate, v);
      }
    });
  }
  if (reached != n) {
    throw InputError("dijkstra: " + std::to_string(n - reached) +
                     " node(s) unreachable from source " + std::to_string(source));
  }
  double total = 0.0;
  for (double d : result.dist) total += d;
  result.total = total;
  return result;
}

ShortestPathResult dijkstra_sssp(const DistanceGraph& graph, NodeId source);

/// Index of the sample nearest the mean of all rows (lowest index on ties).
NodeId select_source(const Matrix& samples);

}  // namespace netclass
