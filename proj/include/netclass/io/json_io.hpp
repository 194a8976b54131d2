#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "netclass/classifier/classifier.hpp"
#include "netclass/data/dataset.hpp"
#include "netclass/experiments/experiments.hpp"

namespace netclass::io {

using nlohmann::json;

inline constexpr std::string_view kModelFormat = "netclass-model";
inline constexpr std::string_view kReportFormat = "netclass-report";
inline constexpr int kFormatVersion = 1;

json to_json(const ModelConfig& config);
ModelConfig config_from_json(const json& j);

/// Row/column counts and label histogram.
json dataset_fingerprint(const Dataset& data);

json to_json(const Summary& s);
json to_json(const TimingStats& t);
json to_json(const TimingReport& r);
json to_json(const CvReport& r);
json to_json(const SensitivityReport& r);
json to_json(const Prediction& p, const Model& model);

/// Top-level report envelope: format, version, command, config, dataset, result.
json make_report(std::string_view command, json config, json dataset, json result);

/// Flat per-insertion CSV: network,sample_label,sample_index,kind,delta.
std::string sensitivity_csv(const SensitivityReport& r);

/// Versioned model container: config, normalization, feature names, and per
/// class the normalized samples, source index and cached baselines.
json model_to_json(const Model& model);

/// Rebuilds every network and re-verifies the cached baselines (relative
/// 1e-9); a mismatch throws InvariantError, a malformed file InputError.
Model model_from_json(const json& j);

void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

/// Writes through a temporary sibling and renames, so a failed run never
/// leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace netclass::io
