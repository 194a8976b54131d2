#include <chrono>

#include "netclass/data/blobs.hpp"
#include "netclass/error.hpp"
#include "netclass/experiments/experiments.hpp"
#include "netclass/graph/mst.hpp"
#include "netclass/graph/sssp.hpp"

namespace netclass {

TimingStats timing_stats(std::span<const double> samples_ms) {
  TimingStats t;
  t.mean = mean(samples_ms);
  t.std = stddev(samples_ms);
  t.min = quantile(samples_ms, 0.0);
  t.max = quantile(samples_ms, 1.0);
  t.p25 = quantile(samples_ms, 0.25);
  t.p50 = quantile(samples_ms, 0.5);
  t.p75 = quantile(samples_ms, 0.75);
  return t;
}

TimingReport timing_benchmark(std::size_t graph_size, std::size_t repetitions, std::uint64_t seed,
                              std::size_t graph_count) {
  if (repetitions < 30) throw ConfigError("bench: repetitions must be >= 30");
  if (graph_size < 50) throw ConfigError("bench: graph size must be >= 50");
  if (graph_count == 0) throw ConfigError("bench: graph count must be positive");

  struct Instance {
    DistanceGraph graph;
    NodeId source;
  };
  std::vector<Instance> instances;
  for (std::size_t g = 0; g < graph_count; ++g) {
    const BlobSpec spec{{0.0, 0.0}, {1.0, 1.0}, graph_size, seed + g};
    const Dataset points = generate_blobs(std::span(&spec, 1));
    instances.push_back({build_distance_graph(points.features), select_source(points.features)});
  }

  using Clock = std::chrono::steady_clock;
  volatile double sink = 0.0;
  auto time_mst = [&](const Instance& in) {
    const auto t0 = Clock::now();
    sink = sink + kruskal_mst(in.graph).total_weight;
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  auto time_sssp = [&](const Instance& in) {
    const auto t0 = Clock::now();
    sink = sink + dijkstra_sssp(in.graph, in.source).total;
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  for (const auto& in : instances) {
    time_mst(in);
    time_sssp(in);
  }

  std::vector<double> mst_ms;
  std::vector<double> sssp_ms;
  mst_ms.reserve(repetitions);
  sssp_ms.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    const Instance& in = instances[r % instances.size()];
    // Alternate which kernel runs first so cache warmth favors neither.
    if (r % 2 == 0) {
      mst_ms.push_back(time_mst(in));
      sssp_ms.push_back(time_sssp(in));
    } else {
      sssp_ms.push_back(time_sssp(in));
      mst_ms.push_back(time_mst(in));
    }
  }

  TimingReport report;
  report.graph_size = graph_size;
  report.repetitions = repetitions;
  report.graph_count = graph_count;
  report.mst = timing_stats(mst_ms);
  report.sssp = timing_stats(sssp_ms);
  return report;
}

}  // namespace netclass
