#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "netclass/classifier/classifier.hpp"
#include "netclass/data/dataset.hpp"
#include "netclass/data/folds.hpp"
#include "netclass/experiments/stats.hpp"

namespace netclass {

// ---------------------------------------------------------------------------
// Insertion sensitivity

struct InsertionRecord {
  std::string network_label;  // class whose network received the sample
  std::string sample_label;   // true class of the inserted sample
  std::size_t sample_index = 0;  // row in the input dataset
  bool same_class = false;
  double delta = 0.0;
};

struct SensitivityReport {
  MeasureKind measure = MeasureKind::mst;
  std::vector<double> same_class_deltas;
  std::vector<double> different_class_deltas;
  Summary same_summary;
  Summary different_summary;
  std::vector<InsertionRecord> records;
};

/// For every class: `insertions_per_class` members are held out of that
/// class's network and re-inserted one at a time (same-class deltas), and the
/// same number of samples drawn from the other classes are inserted
/// (different-class deltas). Normalization is fitted on the whole dataset.
/// Throws ConfigError if the count is 0 or leaves a class network empty.
SensitivityReport sensitivity_experiment(const Dataset& data, const ModelConfig& config,
                                         std::size_t insertions_per_class, std::uint64_t seed);

// ---------------------------------------------------------------------------
// MST vs SSSP timing

/// Wall-clock statistics in milliseconds.
struct TimingStats {
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double max = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
};

TimingStats timing_stats(std::span<const double> samples_ms);

struct TimingReport {
  std::size_t graph_size = 0;
  std::size_t repetitions = 0;
  std::size_t graph_count = 0;
  TimingStats mst;
  TimingStats sssp;
};

/// Times kruskal_mst and dijkstra_sssp (from the centroid source) on the
/// same seeded complete Euclidean graphs, alternating the two kernels, on the
/// calling thread only. Graph construction is not timed. Repetitions cycle
/// over `graph_count` graphs. Requires repetitions >= 30, graph_size >= 50.
TimingReport timing_benchmark(std::size_t graph_size, std::size_t repetitions, std::uint64_t seed,
                              std::size_t graph_count = 3);

// ---------------------------------------------------------------------------
// Cross-validation

struct CvReport {
  std::size_t k = 0;
  std::vector<double> per_fold_accuracy;  // evaluated folds only
  std::vector<std::size_t> evaluated_folds;
  double median = 0.0;
  double mean = 0.0;
  double std = 0.0;
  std::vector<std::string> classes;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]
  std::vector<std::string> warnings;
  FoldPlan plan;
};

/// Stratified k-fold: each fold fits on the others (normalization included)
/// and predicts the held-out rows. Folds run on up to `threads` workers with
/// identical results for any worker count. A fold whose training split lacks
/// a class is skipped with a warning.
CvReport crossval_accuracy(const Dataset& data, const ModelConfig& config, std::size_t k,
                           std::uint64_t seed, unsigned threads = 0);

}  // namespace netclass
