#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netclass/matrix.hpp"

namespace netclass {

enum class NormalizationScheme { none, minmax, zscore };

NormalizationScheme parse_normalization(std::string_view text);
std::string_view to_string(NormalizationScheme scheme) noexcept;

/// Per-feature affine map y = (x - center) / spread. minmax: center = min,
/// spread = max - min. zscore: center = mean, spread = population std.
/// A zero spread (constant feature) maps every value to 0.
struct NormalizationParams {
  NormalizationScheme scheme = NormalizationScheme::none;
  std::vector<double> center;
  std::vector<double> spread;

  friend bool operator==(const NormalizationParams&, const NormalizationParams&) = default;
};

NormalizationParams fit_normalization(const Matrix& features, NormalizationScheme scheme);

Matrix apply_normalization(const NormalizationParams& params, const Matrix& features);
std::vector<double> apply_normalization(const NormalizationParams& params,
                                        std::span<const double> row);

/// Inverse map. Constant features come back as their center value.
Matrix invert_normalization(const NormalizationParams& params, const Matrix& features);

}  // namespace netclass
