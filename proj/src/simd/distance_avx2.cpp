#include <immintrin.h>

#include "netclass/simd/distance.hpp"

namespace netclass::simd::kernels {

void euclidean_distances_avx2(PointBlock pts, std::size_t begin, std::size_t end,
                              const double* query, double* out) {
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < pts.dim; ++k) {
      const __m256d p = _mm256_loadu_pd(pts.data + k * pts.stride + i);
      const __m256d diff = _mm256_sub_pd(p, _mm256_set1_pd(query[k]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + (i - begin), _mm256_sqrt_pd(acc));
  }
  if (i < end) euclidean_distances_scalar(pts, i, end, query, out + (i - begin));
}

}  // namespace netclass::simd::kernels
