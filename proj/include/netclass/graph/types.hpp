#pragma once

#include <cstdint>
#include <span>

namespace netclass {

/// Position of a sample within one class network.
using NodeId = std::uint32_t;

/// Undirected weighted edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Deterministic total order used by Kruskal: (weight, u, v).
inline bool edge_less(const Edge& a, const Edge& b) noexcept {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

/// Plain Euclidean distance between two equally sized vectors.
double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace netclass
