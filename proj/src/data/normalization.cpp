#include "netclass/data/normalization.hpp"

#include <cmath>

#include "netclass/error.hpp"

namespace netclass {

NormalizationScheme parse_normalization(std::string_view text) {
  if (text == "none") return NormalizationScheme::none;
  if (text == "minmax") return NormalizationScheme::minmax;
  if (text == "zscore") return NormalizationScheme::zscore;
  throw ConfigError("unknown normalization '" + std::string(text) +
                    "' (expected none, minmax or zscore)");
}

std::string_view to_string(NormalizationScheme scheme) noexcept {
  switch (scheme) {
    case NormalizationScheme::none: return "none";
    case NormalizationScheme::minmax: return "minmax";
    case NormalizationScheme::zscore: return "zscore";
  }
  return "none";
}

NormalizationParams fit_normalization(const Matrix& features, NormalizationScheme scheme) {
  NormalizationParams params;
  params.scheme = scheme;
  const std::size_t n = features.rows();
  const std::size_t d = features.cols();
  params.center.assign(d, 0.0);
  params.spread.assign(d, 1.0);
  if (scheme == NormalizationScheme::none || n == 0) return params;

  for (std::size_t k = 0; k < d; ++k) {
    if (scheme == NormalizationScheme::minmax) {
      double lo = features(0, k);
      double hi = lo;
      for (std::size_t i = 1; i < n; ++i) {
        lo = std::min(lo, features(i, k));
        hi = std::max(hi, features(i, k));
      }
      params.center[k] = lo;
      params.spread[k] = hi - lo;
    } else {
      double mean = 0.0;
      for (std::size_t i = 0; i < n; ++i) mean += features(i, k);
      mean /= static_cast<double>(n);
      double ss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double dev = features(i, k) - mean;
        ss += dev * dev;
      }
      params.center[k] = mean;
      params.spread[k] = std::sqrt(ss / static_cast<double>(n));
    }
  }
  return params;
}

std::vector<double> apply_normalization(const NormalizationParams& params,
                                        std::span<const double> row) {
  if (row.size() != params.center.size()) {
    throw InputError("normalization expects " + std::to_string(params.center.size()) +
                     " features, got " + std::to_string(row.size()));
  }
  std::vector<double> out(row.begin(), row.end());
  if (params.scheme == NormalizationScheme::none) return out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = params.spread[k] > 0.0 ? (out[k] - params.center[k]) / params.spread[k] : 0.0;
  }
  return out;
}

Matrix apply_normalization(const NormalizationParams& params, const Matrix& features) {
  Matrix out(features.rows(), features.cols());
  for (std::size_t i = 0; i < features.rows(); ++i) {
    const auto row = apply_normalization(params, features.row(i));
    std::copy(row.begin(), row.end(), out.row(i).begin());
  }
  return out;
}

Matrix invert_normalization(const NormalizationParams& params, const Matrix& features) {
  Matrix out = features;
  if (params.scheme == NormalizationScheme::none) return out;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t k = 0; k < out.cols(); ++k) {
      out(i, k) = params.spread[k] > 0.0 ? out(i, k) * params.spread[k] + params.center[k]
                                         : params.center[k];
    }
  }
  return out;
}

}  // namespace netclass
