#include "netclass/data/folds.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "netclass/error.hpp"

namespace netclass {

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan stratified_kfold(std::span<const std::string> labels, std::size_t k, std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (k < 2) throw ConfigError("k-fold needs k >= 2, got " + std::to_string(k));
  if (k > n) {
    throw ConfigError("k-fold with k=" + std::to_string(k) + " exceeds " + std::to_string(n) +
                      " samples");
  }
  std::map<std::string_view, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[labels[i]].push_back(i);

  FoldPlan plan;
  plan.k = k;
  plan.assignments.assign(n, 0);
  std::mt19937_64 rng(seed);
  std::size_t next_fold = 0;
  for (auto& [label, idx] : members) {
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i : idx) {
      plan.assignments[i] = next_fold;
      next_fold = (next_fold + 1) % k;
    }
  }
  return plan;
}

}  // namespace netclass
