#include <cstring>
#include <random>

#include <gtest/gtest.h>

#include "netclass/simd/distance.hpp"
#include "support/oracles.hpp"

namespace netclass {
namespace {

using simd::Isa;

TEST(SimdDispatch, ScalarAlwaysAvailable) {
  EXPECT_TRUE(simd::isa_available(Isa::scalar));
  EXPECT_EQ(simd::isa_name(Isa::scalar), "scalar");
  EXPECT_TRUE(simd::isa_available(simd::best_isa()));
}

TEST(SimdDispatch, SetActiveFallsBackWhenUnavailable) {
  const Isa before = simd::active_isa();
  simd::set_active_isa(Isa::scalar);
  EXPECT_EQ(simd::active_isa(), Isa::scalar);
  simd::set_active_isa(Isa::avx2);
  EXPECT_EQ(simd::active_isa(), simd::isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar);
  simd::set_active_isa(before);
}

TEST(PointSet, IsFeatureMajor) {
  const Matrix m{{1, 2, 3}, {4, 5, 6}};
  const simd::PointSet pts(m);
  const auto b = pts.block();
  ASSERT_EQ(b.stride, 2u);
  ASSERT_EQ(b.dim, 3u);
  EXPECT_EQ(b.data[0 * 2 + 1], 4.0);
  EXPECT_EQ(b.data[2 * 2 + 0], 3.0);
}

TEST(DistanceKernels, ScalarMatchesPlainLoop) {
  std::mt19937_64 rng(11);
  const Matrix m = testing::random_points(rng, 9, 3);
  const simd::PointSet pts(m);
  std::vector<double> out(9);
  simd::euclidean_distances(Isa::scalar, pts.block(), 0, 9, m.row(4), out);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(out[i], euclidean_distance(m.row(i), m.row(4)));
  EXPECT_EQ(out[4], 0.0);
}

// Every variant must produce the scalar bits exactly: sizes cover full
// vectors, tails and sub-ranges with unaligned starts.
TEST(DistanceKernels, AllVariantsBitIdenticalToScalar) {
  std::mt19937_64 rng(2024);
  for (Isa isa : {Isa::scalar, Isa::avx2}) {
    if (!simd::isa_available(isa)) continue;
    for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 17u, 64u, 101u}) {
      for (std::size_t d : {1u, 2u, 4u, 7u, 13u}) {
        const Matrix m = testing::random_points(rng, n, d, 100.0);
        const simd::PointSet pts(m);
        const Matrix q = testing::random_points(rng, 1, d, 100.0);
        for (std::size_t begin = 0; begin < n; begin += 3) {
          std::vector<double> ref(n - begin), got(n - begin);
          simd::euclidean_distances(Isa::scalar, pts.block(), begin, n, q.row(0), ref);
          simd::euclidean_distances(isa, pts.block(), begin, n, q.row(0), got);
          ASSERT_EQ(0, std::memcmp(ref.data(), got.data(), ref.size() * sizeof(double)))
              << simd::isa_name(isa) << " n=" << n << " d=" << d << " begin=" << begin;
        }
      }
    }
  }
}

TEST(DistanceKernels, EmptyRangeWritesNothing) {
  const Matrix m{{0.0}};
  const simd::PointSet pts(m);
  std::vector<double> out{42.0};
  const double q = 1.0;
  simd::euclidean_distances(pts.block(), 1, 1, std::span(&q, 1), out);
  EXPECT_EQ(out[0], 42.0);
}

}  // namespace
}  // namespace netclass
