#include "netclass/simd/distance.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace netclass::simd {

namespace {

Isa isa_from_env() noexcept {
  const char* env = std::getenv("NETCLASS_ISA");
  if (env != nullptr && std::string_view(env) == "scalar") return Isa::scalar;
  return best_isa();
}

std::atomic<Isa>& active_slot() noexcept {
  static std::atomic<Isa> slot{isa_from_env()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(NETCLASS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
  active_slot().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

PointSet::PointSet(const Matrix& samples)
    : count_(samples.rows()), dim_(samples.cols()), coords_(samples.rows() * samples.cols()) {
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) coords_[k * count_ + i] = samples(i, k);
  }
}

void euclidean_distances(Isa isa, PointBlock pts, std::size_t begin, std::size_t end,
                         std::span<const double> query, std::span<double> out) {
  if (end <= begin) return;
  switch (isa) {
#if defined(NETCLASS_HAVE_AVX2)
    case Isa::avx2:
      kernels::euclidean_distances_avx2(pts, begin, end, query.data(), out.data());
      return;
#endif
    default:
      kernels::euclidean_distances_scalar(pts, begin, end, query.data(), out.data());
      return;
  }
}

void euclidean_distances(PointBlock pts, std::size_t begin, std::size_t end,
                         std::span<const double> query, std::span<double> out) {
  euclidean_distances(active_isa(), pts, begin, end, query, out);
}

namespace kernels {

void euclidean_distances_scalar(PointBlock pts, std::size_t begin, std::size_t end,
                                const double* query, double* out) {
  for (std::size_t i = begin; i < end; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < pts.dim; ++k) {
      const double diff = pts.data[k * pts.stride + i] - query[k];
      acc += diff * diff;
    }
    out[i - begin] = std::sqrt(acc);
  }
}

}  // namespace kernels

}  // namespace netclass::simd
