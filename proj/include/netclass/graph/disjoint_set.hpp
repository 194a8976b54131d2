#pragma once

#include <cstddef>
#include <vector>

#include "netclass/graph/types.hpp"

namespace netclass {

/// Union-find with union by rank and path halving.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size);

  NodeId find(NodeId x) noexcept;

  /// Merges the sets holding a and b. Returns false if they were already one set.
  bool unite(NodeId a, NodeId b) noexcept;

  bool same(NodeId a, NodeId b) noexcept { return find(a) == find(b); }

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<unsigned char> rank_;
  std::size_t sets_;
};

}  // namespace netclass
