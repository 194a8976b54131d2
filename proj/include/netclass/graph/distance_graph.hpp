#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/graph/types.hpp"
#include "netclass/matrix.hpp"

namespace netclass {

enum class GraphTopology { complete, knn };

/// How a sample matrix is turned into a graph: every pair, or the symmetrized
/// k-nearest-neighbor union plus the complete-graph MST edges.
struct GraphMode {
  GraphTopology topology = GraphTopology::complete;
  std::size_t k = 0;

  static GraphMode complete() { return {}; }
  static GraphMode knn(std::size_t k) { return {GraphTopology::knn, k}; }

  /// Accepts "complete", "knn:K" or "knn(K)".
  static GraphMode parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const GraphMode&, const GraphMode&) = default;
};

/// Immutable symmetric weighted graph with both an edge list (canonical
/// (u, v) order, u < v) and a CSR adjacency whose neighbor lists ascend by id.
class DistanceGraph {
 public:
  DistanceGraph() = default;

  /// Validates and canonicalizes an explicit edge list. Throws InputError on
  /// self-loops, out-of-range ids, duplicate pairs or bad weights.
  static DistanceGraph from_edges(std::size_t node_count, std::vector<Edge> edges,
                                  GraphMode mode = GraphMode::complete());

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const GraphMode& mode() const noexcept { return mode_; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::span<const double> neighbor_weights(NodeId u) const noexcept {
    return {weights_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }

  template <class F>
  void for_each_neighbor(NodeId u, F&& f) const {
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) f(targets_[i], weights_[i]);
  }

  /// Weight of edge {u, v}, if present.
  std::optional<double> weight(NodeId u, NodeId v) const noexcept;

  /// Number of connected components (BFS).
  std::size_t component_count() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  GraphMode mode_;
};

/// Builds the Euclidean distance graph over the rows of `samples`.
/// complete: n(n-1)/2 edges. knn(k): union of every node's k nearest
/// neighbors (ties to the lower index), plus the complete-graph MST edges so
/// the result is connected. Requires 1 <= k < n in knn mode (ConfigError) and
/// finite samples (InputError).
DistanceGraph build_distance_graph(const Matrix& samples, GraphMode mode = GraphMode::complete());

/// All n(n-1)/2 Euclidean edges in canonical (u, v) order.
std::vector<Edge> complete_edges(const Matrix& samples);

}  // namespace netclass
