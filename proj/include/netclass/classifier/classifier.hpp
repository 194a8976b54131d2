#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/data/dataset.hpp"
#include "netclass/data/normalization.hpp"
#include "netclass/graph/distance_graph.hpp"
#include "netclass/matrix.hpp"
#include "netclass/simd/distance.hpp"

namespace netclass {

enum class MeasureKind { mst, sssp };
enum class VariationMode { absolute, relative };

MeasureKind parse_measure(std::string_view text);
VariationMode parse_variation(std::string_view text);
std::string_view to_string(MeasureKind kind) noexcept;
std::string_view to_string(VariationMode mode) noexcept;

struct ModelConfig {
  MeasureKind measure = MeasureKind::mst;
  VariationMode variation = VariationMode::absolute;
  GraphMode graph = GraphMode::complete();
  NormalizationScheme normalization = NormalizationScheme::minmax;
};

/// One class's samples (already in model space), its distance graph, the
/// SSSP source and both baseline measures. Immutable after construction.
class ClassNetwork {
 public:
  /// Builds the graph, picks the source with select_source and computes the
  /// baselines.
  ClassNetwork(std::string label, Matrix samples, GraphMode mode);

  /// Same, with a previously chosen source (used when loading a model).
  ClassNetwork(std::string label, Matrix samples, GraphMode mode, NodeId source);

  const std::string& label() const noexcept { return label_; }
  const Matrix& samples() const noexcept { return samples_; }
  const DistanceGraph& graph() const noexcept { return graph_; }
  const GraphMode& graph_mode() const noexcept { return graph_.mode(); }
  NodeId source() const noexcept { return source_; }
  std::size_t size() const noexcept { return samples_.rows(); }
  std::size_t dimension() const noexcept { return samples_.cols(); }

  double baseline_mst() const noexcept { return baseline_mst_; }
  double baseline_sssp() const noexcept { return baseline_sssp_; }
  double baseline(MeasureKind kind) const noexcept {
    return kind == MeasureKind::mst ? baseline_mst_ : baseline_sssp_;
  }

  /// Canonically sorted edge list, shared by every insertion query.
  std::span<const Edge> sorted_edges() const noexcept { return sorted_edges_; }
  const simd::PointSet& points() const noexcept { return points_; }

 private:
  std::string label_;
  Matrix samples_;
  simd::PointSet points_;
  DistanceGraph graph_;
  std::vector<Edge> sorted_edges_;
  NodeId source_ = 0;
  double baseline_mst_ = 0.0;
  double baseline_sssp_ = 0.0;
};

/// Measure of the network's graph augmented with `x` as node n. In complete
/// mode x connects to every node; in knn mode the knn graph of the augmented
/// sample set is rebuilt. SSSP keeps the source chosen at fit time. The
/// network is not modified. Throws InputError on dimension mismatch.
double measure_with_insertion(const ClassNetwork& network, std::span<const double> x,
                              MeasureKind kind);

/// |G_before - G_after|, divided by G_before in relative mode. Relative mode
/// on a zero baseline (single-sample class) throws InputError.
double delta_g(const ClassNetwork& network, std::span<const double> x, MeasureKind kind,
               VariationMode mode);

struct Prediction {
  std::string label;
  std::size_t class_index = 0;
  std::vector<double> deltas;  // one per class, in model class order
};

class Model {
 public:
  Model(std::vector<ClassNetwork> networks, NormalizationParams normalization, ModelConfig config,
        std::vector<std::string> feature_names = {});

  const std::vector<ClassNetwork>& networks() const noexcept { return networks_; }
  const NormalizationParams& normalization() const noexcept { return normalization_; }
  const ModelConfig& config() const noexcept { return config_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
  std::size_t dimension() const noexcept { return networks_.front().dimension(); }
  std::size_t class_count() const noexcept { return networks_.size(); }
  std::vector<std::string> labels() const;

 private:
  std::vector<ClassNetwork> networks_;
  NormalizationParams normalization_;
  ModelConfig config_;
  std::vector<std::string> feature_names_;
};

/// Fits normalization on `data`, then builds one network per class in
/// lexicographic label order. Needs at least two classes.
Model fit(const Dataset& data, const ModelConfig& config);

/// Normalizes x_raw, computes every class's delta and returns the argmin
/// (lowest class index on ties).
Prediction predict(const Model& model, std::span<const double> x_raw);

/// predict() per row. Rows are evaluated on up to `threads` workers
/// (0 = hardware concurrency); results do not depend on the worker count.
/// Errors are rethrown prefixed with the row index.
std::vector<Prediction> predict_batch(const Model& model, const Matrix& rows, unsigned threads = 1);

}  // namespace netclass
