#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "netclass/data/dataset.hpp"

namespace netclass {

/// One isotropic-per-axis Gaussian cluster.
struct BlobSpec {
  std::vector<double> mu;
  std::vector<double> sigma;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Standard normal deviates by the Box-Muller transform over std::mt19937_64,
/// uniforms taken from the top 53 bits. Both pieces are fully specified, so
/// the stream is identical on every conforming platform.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}
  double operator()();

 private:
  double uniform();  // (0, 1]

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Samples every spec with its own seed; spec i gets label std::to_string(i + 1).
/// Throws ConfigError on non-positive sigma or mismatched dimensions.
Dataset generate_blobs(std::span<const BlobSpec> specs);

/// The two-class benchmark: mu [1,1] sigma [0.5,0.5] and mu [5,5]
/// sigma [0.4,0.4], 50 samples each, seeded with seed and seed + 1.
std::vector<BlobSpec> two_blob_specs(std::uint64_t seed, std::size_t per_class = 50);

}  // namespace netclass
