#include "netclass/graph/distance_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "netclass/error.hpp"
#include "netclass/graph/mst.hpp"
#include "netclass/simd/distance.hpp"

namespace netclass {

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

GraphMode GraphMode::parse(std::string_view text) {
  if (text == "complete") return complete();
  std::string_view digits;
  if (text.starts_with("knn:")) {
    digits = text.substr(4);
  } else if (text.starts_with("knn(") && text.ends_with(")")) {
    digits = text.substr(4, text.size() - 5);
  } else {
    throw ConfigError("unknown graph mode '" + std::string(text) + "' (expected complete or knn:K)");
  }
  std::size_t k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0) {
    throw ConfigError("invalid neighbor count in graph mode '" + std::string(text) + "'");
  }
  return knn(k);
}

std::string GraphMode::to_string() const {
  return topology == GraphTopology::complete ? "complete" : "knn:" + std::to_string(k);
}

DistanceGraph DistanceGraph::from_edges(std::size_t node_count, std::vector<Edge> edges,
                                        GraphMode mode) {
  if (node_count == 0) throw InputError("graph needs at least one node");
  if (node_count > std::numeric_limits<NodeId>::max()) throw InputError("graph too large");
  for (auto& e : edges) {
    if (e.u == e.v) throw InputError("self-loop on node " + std::to_string(e.u));
    if (e.u >= node_count || e.v >= node_count) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InputError("edge weight must be finite and non-negative");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InputError("duplicate edge (" + std::to_string(edges[i].u) + ", " +
                       std::to_string(edges[i].v) + ")");
    }
  }

  DistanceGraph g;
  g.node_count_ = node_count;
  g.mode_ = mode;
  g.edges_ = std::move(edges);
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(g.offsets_.back());
  g.weights_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edge order makes every neighbor list ascend by id.
  for (const auto& e : g.edges_) {
    g.targets_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
    g.targets_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  return g;
}

std::optional<double> DistanceGraph::weight(NodeId u, NodeId v) const noexcept {
  if (u >= node_count_ || v >= node_count_) return std::nullopt;
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return neighbor_weights(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::size_t DistanceGraph::component_count() const {
  std::vector<bool> seen(node_count_, false);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId s = 0; s < node_count_; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

namespace {

void check_samples(const Matrix& samples) {
  if (samples.rows() == 0) throw InputError("distance graph needs at least one sample");
  if (!samples.all_finite()) throw InputError("distance graph: non-finite feature value");
}

}  // namespace

std::vector<Edge> complete_edges(const Matrix& samples) {
  check_samples(samples);
  const std::size_t n = samples.rows();
  const simd::PointSet points(samples);
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  std::vector<double> dist(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    simd::euclidean_distances(points.block(), i + 1, n, samples.row(i), dist);
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), dist[j - i - 1]});
    }
  }
  return edges;
}

DistanceGraph build_distance_graph(const Matrix& samples, GraphMode mode) {
  check_samples(samples);
  const std::size_t n = samples.rows();
  if (mode.topology == GraphTopology::complete) {
    return DistanceGraph::from_edges(n, complete_edges(samples), mode);
  }
  if (mode.k < 1 || mode.k >= n) {
    throw ConfigError("knn graph needs 1 <= k < n (k=" + std::to_string(mode.k) +
                      ", n=" + std::to_string(n) + ")");
  }

  std::vector<Edge> all = complete_edges(samples);
  // Row-wise lookup into the canonical upper-triangle list.
  auto index_of = [n](std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  std::vector<bool> keep(all.size(), false);
  std::vector<std::pair<double, std::size_t>> row(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t slot = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::size_t idx = i < j ? index_of(i, j) : index_of(j, i);
      row[slot++] = {all[idx].weight, j};
    }
    std::partial_sort(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(mode.k), row.end());
    for (std::size_t r = 0; r < mode.k; ++r) {
      const std::size_t j = row[r].second;
      keep[i < j ? index_of(i, j) : index_of(j, i)] = true;
    }
  }

  const DistanceGraph complete = DistanceGraph::from_edges(n, all, GraphMode::complete());
  for (const Edge& e : kruskal_mst(complete).edges) keep[index_of(e.u, e.v)] = true;

  std::vector<Edge> chosen;
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    if (keep[idx]) chosen.push_back(all[idx]);
  }
  return DistanceGraph::from_edges(n, std::move(chosen), mode);
}

}  // namespace netclass
