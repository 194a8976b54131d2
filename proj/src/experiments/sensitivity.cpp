#include <algorithm>
#include <map>
#include <random>

#include "netclass/error.hpp"
#include "netclass/experiments/experiments.hpp"

namespace netclass {

SensitivityReport sensitivity_experiment(const Dataset& data, const ModelConfig& config,
                                         std::size_t insertions_per_class, std::uint64_t seed) {
  data.validate();
  if (insertions_per_class == 0) throw ConfigError("sensitivity: insertion count must be positive");
  const auto classes = data.classes();
  if (classes.size() < 2) throw InputError("sensitivity: dataset needs at least two classes");

  const NormalizationParams params = fit_normalization(data.features, config.normalization);
  const Matrix normalized = apply_normalization(params, data.features);

  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < data.size(); ++i) members[data.labels[i]].push_back(i);

  SensitivityReport report;
  report.measure = config.measure;
  std::mt19937_64 rng(seed);
  for (const auto& label : classes) {
    auto own = members[label];
    if (insertions_per_class >= own.size()) {
      throw ConfigError("sensitivity: " + std::to_string(insertions_per_class) +
                        " insertions would empty class '" + label + "' (" +
                        std::to_string(own.size()) + " samples)");
    }
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data.labels[i] != label) others.push_back(i);
    }
    if (insertions_per_class > others.size()) {
      throw ConfigError("sensitivity: not enough samples outside class '" + label + "'");
    }

    std::shuffle(own.begin(), own.end(), rng);
    std::shuffle(others.begin(), others.end(), rng);
    const auto held = std::span(own).first(insertions_per_class);
    std::vector<std::size_t> kept(own.begin() + static_cast<std::ptrdiff_t>(insertions_per_class),
                                  own.end());
    std::sort(kept.begin(), kept.end());
    const ClassNetwork network(label, normalized.select_rows(kept), config.graph);

    auto insert = [&](std::size_t row, bool same) {
      const double delta = delta_g(network, normalized.row(row), config.measure, config.variation);
      (same ? report.same_class_deltas : report.different_class_deltas).push_back(delta);
      report.records.push_back({label, data.labels[row], row, same, delta});
    };
    for (std::size_t row : held) insert(row, true);
    for (std::size_t r = 0; r < insertions_per_class; ++r) insert(others[r], false);
  }
  report.same_summary = summarize(report.same_class_deltas);
  report.different_summary = summarize(report.different_class_deltas);
  return report;
}

}  // namespace netclass
