#include "netclass/graph/sssp.hpp"

#include <vector>

#include "netclass/simd/distance.hpp"

namespace netclass {

ShortestPathResult dijkstra_sssp(const DistanceGraph& graph, NodeId source) {
  return dijkstra_sssp_on(graph, source);
}

NodeId select_source(const Matrix& samples) {
  if (samples.rows() == 0) throw InputError("select_source: no samples");
  const std::size_t n = samples.rows();
  const std::size_t d = samples.cols();
  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) mean[k] += samples(i, k);
  }
  for (double& m : mean) m /= static_cast<double>(n);

  const simd::PointSet points(samples);
  std::vector<double> dist(n);
  simd::euclidean_distances(points.block(), 0, n, mean, dist);
  NodeId best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (dist[i] < dist[best]) best = static_cast<NodeId>(i);
  }
  return best;
}

}  // namespace netclass
