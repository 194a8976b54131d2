#include "netclass/classifier/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "netclass/error.hpp"
#include "netclass/graph/mst.hpp"
#include "netclass/graph/sssp.hpp"
#include "netclass/parallel.hpp"

namespace netclass {

MeasureKind parse_measure(std::string_view text) {
  if (text == "mst") return MeasureKind::mst;
  if (text == "sssp") return MeasureKind::sssp;
  throw ConfigError("unknown measure '" + std::string(text) + "' (expected mst or sssp)");
}

VariationMode parse_variation(std::string_view text) {
  if (text == "abs" || text == "absolute") return VariationMode::absolute;
  if (text == "rel" || text == "relative") return VariationMode::relative;
  throw ConfigError("unknown variation '" + std::string(text) + "' (expected abs or rel)");
}

std::string_view to_string(MeasureKind kind) noexcept {
  return kind == MeasureKind::mst ? "mst" : "sssp";
}

std::string_view to_string(VariationMode mode) noexcept {
  return mode == VariationMode::absolute ? "abs" : "rel";
}

namespace {

// knn needs k < n; small classes fall back to fewer neighbors, and a single
// node has no neighbors at all.
GraphMode effective_mode(GraphMode mode, std::size_t n) {
  if (mode.topology == GraphTopology::knn) {
    if (n <= 1) return GraphMode::complete();
    mode.k = std::min(mode.k, n - 1);
  }
  return mode;
}

// Base graph plus one extra node n joined to every existing node.
struct InsertionView {
  const DistanceGraph& base;
  std::span<const double> extra;

  std::size_t node_count() const noexcept { return base.node_count() + 1; }

  template <class F>
  void for_each_neighbor(NodeId u, F&& f) const {
    const auto n = static_cast<NodeId>(base.node_count());
    if (u < n) {
      base.for_each_neighbor(u, f);
      f(n, extra[u]);
    } else {
      for (NodeId i = 0; i < n; ++i) f(i, extra[i]);
    }
  }
};

void check_query(const ClassNetwork& network, std::span<const double> x) {
  if (x.size() != network.dimension()) {
    throw InputError("query has " + std::to_string(x.size()) + " features, class '" +
                     network.label() + "' expects " + std::to_string(network.dimension()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw InputError("query contains a non-finite value");
  }
}

}  // namespace

ClassNetwork::ClassNetwork(std::string label, Matrix samples, GraphMode mode)
    : ClassNetwork(std::move(label), samples, mode, select_source(samples)) {}

ClassNetwork::ClassNetwork(std::string label, Matrix samples, GraphMode mode, NodeId source)
    : label_(std::move(label)), samples_(std::move(samples)) {
  if (samples_.rows() == 0) throw InputError("class '" + label_ + "' has no samples");
  if (source >= samples_.rows()) {
    throw InputError("class '" + label_ + "': source " + std::to_string(source) +
                     " out of range");
  }
  points_ = simd::PointSet(samples_);
  graph_ = build_distance_graph(samples_, effective_mode(mode, samples_.rows()));
  sorted_edges_ = netclass::sorted_edges(graph_);
  source_ = source;
  baseline_mst_ = kruskal_total_merged(graph_.node_count(), sorted_edges_, {});
  baseline_sssp_ = dijkstra_sssp(graph_, source_).total;
}

double measure_with_insertion(const ClassNetwork& network, std::span<const double> x,
                              MeasureKind kind) {
  check_query(network, x);
  const std::size_t n = network.size();

  if (network.graph_mode().topology == GraphTopology::knn) {
    Matrix augmented = network.samples();
    augmented.append_row(x);
    const DistanceGraph graph = build_distance_graph(augmented, effective_mode(network.graph_mode(), n + 1));
    if (kind == MeasureKind::mst) {
      return kruskal_total_merged(graph.node_count(), sorted_edges(graph), {});
    }
    return dijkstra_sssp(graph, network.source()).total;
  }

  std::vector<double> extra(n);
  simd::euclidean_distances(network.points().block(), 0, n, x, extra);

  if (kind == MeasureKind::mst) {
    std::vector<Edge> fresh(n);
    for (std::size_t i = 0; i < n; ++i) {
      fresh[i] = {static_cast<NodeId>(i), static_cast<NodeId>(n), extra[i]};
    }
    std::sort(fresh.begin(), fresh.end(), edge_less);
    return kruskal_total_merged(n + 1, network.sorted_edges(), fresh);
  }
  return dijkstra_sssp_on(InsertionView{network.graph(), extra}, network.source()).total;
}

double delta_g(const ClassNetwork& network, std::span<const double> x, MeasureKind kind,
               VariationMode mode) {
  const double before = network.baseline(kind);
  const double after = measure_with_insertion(network, x, kind);
  const double change = std::abs(before - after);
  if (mode == VariationMode::absolute) return change;
  if (before == 0.0) {
    throw InputError("relative variation undefined for class '" + network.label() +
                     "': baseline measure is 0 (degenerate class)");
  }
  return change / before;
}

Model::Model(std::vector<ClassNetwork> networks, NormalizationParams normalization,
             ModelConfig config, std::vector<std::string> feature_names)
    : networks_(std::move(networks)),
      normalization_(std::move(normalization)),
      config_(config),
      feature_names_(std::move(feature_names)) {
  if (networks_.size() < 2) throw InputError("a model needs at least two classes");
  std::set<std::string> seen;
  for (const auto& net : networks_) {
    if (!seen.insert(net.label()).second) throw InputError("duplicate class label '" + net.label() + "'");
    if (net.dimension() != networks_.front().dimension()) {
      throw InputError("class '" + net.label() + "' has a different feature dimension");
    }
  }
  if (normalization_.center.size() != dimension()) {
    throw InputError("normalization parameters do not match the feature dimension");
  }
}

std::vector<std::string> Model::labels() const {
  std::vector<std::string> out;
  for (const auto& net : networks_) out.push_back(net.label());
  return out;
}

Model fit(const Dataset& data, const ModelConfig& config) {
  data.validate();
  const auto classes = data.classes();
  if (classes.size() < 2) {
    throw InputError("training needs at least two classes, found " + std::to_string(classes.size()));
  }
  NormalizationParams params = fit_normalization(data.features, config.normalization);
  const Matrix normalized = apply_normalization(params, data.features);

  std::vector<ClassNetwork> networks;
  networks.reserve(classes.size());
  for (const auto& label : classes) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data.labels[i] == label) rows.push_back(i);
    }
    networks.emplace_back(label, normalized.select_rows(rows), config.graph);
  }
  return Model(std::move(networks), std::move(params), config, data.feature_names);
}

Prediction predict(const Model& model, std::span<const double> x_raw) {
  if (x_raw.size() != model.dimension()) {
    throw InputError("query has " + std::to_string(x_raw.size()) + " features, model expects " +
                     std::to_string(model.dimension()));
  }
  const std::vector<double> x = apply_normalization(model.normalization(), x_raw);
  Prediction p;
  p.deltas.reserve(model.class_count());
  for (const auto& net : model.networks()) {
    p.deltas.push_back(delta_g(net, x, model.config().measure, model.config().variation));
  }
  p.class_index = static_cast<std::size_t>(
      std::min_element(p.deltas.begin(), p.deltas.end()) - p.deltas.begin());
  p.label = model.networks()[p.class_index].label();
  return p;
}

std::vector<Prediction> predict_batch(const Model& model, const Matrix& rows, unsigned threads) {
  if (rows.rows() == 0) throw InputError("predict_batch: empty batch");
  std::vector<Prediction> out(rows.rows());
  parallel_for(rows.rows(), threads, [&](std::size_t i) {
    try {
      out[i] = predict(model, rows.row(i));
    } catch (const InputError& e) {
      throw InputError("row " + std::to_string(i) + ": " + e.what());
    }
  });
  return out;
}

}  // namespace netclass
