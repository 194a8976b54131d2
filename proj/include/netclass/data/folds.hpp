#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netclass {

struct FoldPlan {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // fold index per sample

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Stratified k-fold: each class's members are shuffled with a seeded
/// mt19937_64 and dealt round-robin, starting where the previous class left
/// off so overall fold sizes also stay within one of each other.
/// Throws ConfigError when k < 2 or k > n.
FoldPlan stratified_kfold(std::span<const std::string> labels, std::size_t k, std::uint64_t seed);

}  // namespace netclass
