#include "netclass/data/blobs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "netclass/error.hpp"

namespace netclass {

double NormalSampler::uniform() {
  // 53 random bits -> (0, 1]; never zero so log() stays finite.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalSampler::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Dataset generate_blobs(std::span<const BlobSpec> specs) {
  if (specs.empty()) throw ConfigError("generate_blobs: no blob specs");
  const std::size_t d = specs.front().mu.size();
  Dataset data;
  std::vector<double> row(d);
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const BlobSpec& spec = specs[s];
    if (spec.mu.size() != d || spec.sigma.size() != d) {
      throw ConfigError("generate_blobs: spec " + std::to_string(s) + " has mismatched dimension");
    }
    for (double sigma : spec.sigma) {
      if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("generate_blobs: sigma must be positive (spec " + std::to_string(s) + ")");
      }
    }
    NormalSampler normal(spec.seed);
    for (std::size_t i = 0; i < spec.count; ++i) {
      for (std::size_t k = 0; k < d; ++k) row[k] = spec.mu[k] + spec.sigma[k] * normal();
      data.features.append_row(row);
      data.labels.push_back(std::to_string(s + 1));
    }
  }
  for (std::size_t k = 0; k < d; ++k) data.feature_names.push_back("x" + std::to_string(k));
  return data;
}

std::vector<BlobSpec> two_blob_specs(std::uint64_t seed, std::size_t per_class) {
  return {
      {{1.0, 1.0}, {0.5, 0.5}, per_class, seed},
      {{5.0, 5.0}, {0.4, 0.4}, per_class, seed + 1},
  };
}

}  // namespace netclass
