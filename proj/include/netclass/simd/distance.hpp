#pragma once

// Euclidean distance kernels over feature-major point blocks.
//
// Every variant vectorizes across points, never across features: each lane
// accumulates (p_k - q_k)^2 for k = 0..d-1 in the same order as the scalar
// loop, so all variants return bit-identical results.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "netclass/matrix.hpp"

namespace netclass::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Whether this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Widest available variant on this CPU.
Isa best_isa() noexcept;

/// Variant used by dispatching calls. Defaults to best_isa(); the NETCLASS_ISA
/// environment variable ("scalar" or "avx2") overrides it at first use.
Isa active_isa() noexcept;

/// Forces the dispatch target. Falls back to scalar if `isa` is unavailable.
void set_active_isa(Isa isa) noexcept;

/// Non-owning view of points stored feature-major: coordinate k of point i is
/// data[k * stride + i].
struct PointBlock {
  const double* data = nullptr;
  std::size_t stride = 0;
  std::size_t dim = 0;
};

/// Owning feature-major copy of a sample matrix.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(const Matrix& samples);

  std::size_t size() const noexcept { return count_; }
  std::size_t dim() const noexcept { return dim_; }
  PointBlock block() const noexcept { return {coords_.data(), count_, dim_}; }

 private:
  std::size_t count_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// out[i - begin] = ||point_i - query|| for i in [begin, end).
/// Requires query.size() == pts.dim and out.size() >= end - begin.
void euclidean_distances(PointBlock pts, std::size_t begin, std::size_t end,
                         std::span<const double> query, std::span<double> out);

/// Same as above with an explicit variant, for equivalence testing.
void euclidean_distances(Isa isa, PointBlock pts, std::size_t begin, std::size_t end,
                         std::span<const double> query, std::span<double> out);

namespace kernels {
void euclidean_distances_scalar(PointBlock pts, std::size_t begin, std::size_t end,
                                const double* query, double* out);
#if defined(NETCLASS_HAVE_AVX2)
void euclidean_distances_avx2(PointBlock pts, std::size_t begin, std::size_t end,
                              const double* query, double* out);
#endif
}  // namespace kernels

}  // namespace netclass::simd
