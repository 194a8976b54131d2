#include "netclass/graph/disjoint_set.hpp"

#include <numeric>

namespace netclass {

DisjointSet::DisjointSet(std::size_t size) : parent_(size), rank_(size, 0), sets_(size) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

NodeId DisjointSet::find(NodeId x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(NodeId a, NodeId b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

}  // namespace netclass
