#include "netclass/graph/mst.hpp"

#include <algorithm>
#include <string>

#include "netclass/error.hpp"
#include "netclass/graph/disjoint_set.hpp"

namespace netclass {

namespace {

[[noreturn]] void throw_disconnected(std::size_t components) {
  throw InputError("graph is disconnected: " + std::to_string(components) + " components");
}

}  // namespace

std::vector<Edge> sorted_edges(const DistanceGraph& graph) {
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::sort(edges.begin(), edges.end(), edge_less);
  return edges;
}

SpanningTree kruskal_mst(const DistanceGraph& graph) {
  const std::size_t n = graph.node_count();
  SpanningTree tree;
  if (n <= 1) return tree;
  const std::vector<Edge> edges = sorted_edges(graph);
  DisjointSet forest(n);
  tree.edges.reserve(n - 1);
  for (const Edge& e : edges) {
    if (forest.unite(e.u, e.v)) {
      tree.edges.push_back(e);
      tree.total_weight += e.weight;
      if (tree.edges.size() == n - 1) break;
    }
  }
  if (tree.edges.size() != n - 1) throw_disconnected(forest.set_count());
  return tree;
}

double kruskal_total_merged(std::size_t node_count, std::span<const Edge> sorted_a,
                            std::span<const Edge> sorted_b) {
  if (node_count <= 1) return 0.0;
  DisjointSet forest(node_count);
  std::size_t accepted = 0;
  double total = 0.0;
  auto a = sorted_a.begin();
  auto b = sorted_b.begin();
  while (accepted + 1 < node_count && (a != sorted_a.end() || b != sorted_b.end())) {
    const Edge* e;
    if (b == sorted_b.end() || (a != sorted_a.end() && !edge_less(*b, *a))) {
      e = &*a++;
    } else {
      e = &*b++;
    }
    if (forest.unite(e->u, e->v)) {
      total += e->weight;
      ++accepted;
    }
  }
  if (accepted + 1 != node_count) throw_disconnected(forest.set_count());
  return total;
}

}  // namespace netclass
