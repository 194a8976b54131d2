#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/matrix.hpp"

namespace netclass {

/// Labeled samples: one feature row and one string label per sample.
struct Dataset {
  Matrix features;
  std::vector<std::string> labels;
  std::vector<std::string> feature_names;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t dimension() const noexcept { return features.cols(); }

  /// Distinct labels in lexicographic order; this is the class order used
  /// everywhere (models, tie-breaks, confusion matrices).
  std::vector<std::string> classes() const;
  std::map<std::string, std::size_t> label_histogram() const;

  Dataset subset(std::span<const std::size_t> indices) const;

  /// Throws InputError if row/label counts differ or a value is non-finite.
  void validate() const;
};

/// Reads a header-bearing CSV. Features are all columns except `label_column`
/// in header order; every feature cell must be a finite decimal number.
/// Errors name the 1-based line and the column.
Dataset load_csv(const std::filesystem::path& path, std::string_view label_column);
Dataset parse_csv(std::istream& in, std::string_view label_column,
                  std::string_view source_name = "<stream>");

/// Query rows without labels. If `label_column` is given and present in the
/// header, that column is ignored.
struct FeatureTable {
  Matrix features;
  std::vector<std::string> feature_names;
};
FeatureTable load_feature_csv(const std::filesystem::path& path,
                              std::optional<std::string_view> label_column = std::nullopt);
FeatureTable parse_feature_csv(std::istream& in, std::optional<std::string_view> label_column,
                               std::string_view source_name = "<stream>");

/// Seeded stratified subsample of `count` rows; per-class quotas by largest
/// remainder, rows kept in original order.
Dataset stratified_subsample(const Dataset& data, std::size_t count, std::uint64_t seed);

}  // namespace netclass
