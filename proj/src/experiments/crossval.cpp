#include <algorithm>
#include <optional>
#include <set>

#include "netclass/error.hpp"
#include "netclass/experiments/experiments.hpp"
#include "netclass/parallel.hpp"

namespace netclass {

namespace {

struct FoldOutcome {
  std::optional<double> accuracy;
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<std::string> warnings;
};

}  // namespace

CvReport crossval_accuracy(const Dataset& data, const ModelConfig& config, std::size_t k,
                           std::uint64_t seed, unsigned threads) {
  data.validate();
  CvReport report;
  report.k = k;
  report.classes = data.classes();
  report.plan = stratified_kfold(data.labels, k, seed);
  const std::size_t classes = report.classes.size();
  if (classes < 2) throw InputError("crossval: dataset needs at least two classes");

  auto class_index = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::lower_bound(report.classes.begin(), report.classes.end(), label) -
        report.classes.begin());
  };

  std::vector<FoldOutcome> outcomes(k);
  parallel_for(k, threads, [&](std::size_t fold) {
    FoldOutcome& out = outcomes[fold];
    const auto train_idx = report.plan.train_indices(fold);
    const auto test_idx = report.plan.test_indices(fold);
    const Dataset train = data.subset(train_idx);
    const auto train_classes = train.classes();
    if (train_classes.size() != classes) {
      out.warnings.push_back("fold " + std::to_string(fold) +
                             " skipped: a class is missing from its training split");
      return;
    }
    std::set<std::string> tested;
    for (std::size_t i : test_idx) tested.insert(data.labels[i]);
    if (tested.size() != classes) {
      out.warnings.push_back("fold " + std::to_string(fold) + " test split lacks " +
                             std::to_string(classes - tested.size()) + " class(es)");
    }

    const Model model = fit(train, config);
    out.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
    std::size_t correct = 0;
    for (std::size_t i : test_idx) {
      const Prediction p = predict(model, data.features.row(i));
      const std::size_t truth = class_index(data.labels[i]);
      ++out.confusion[truth][p.class_index];
      if (p.class_index == truth) ++correct;
    }
    out.accuracy = test_idx.empty() ? 0.0
                                    : static_cast<double>(correct) /
                                          static_cast<double>(test_idx.size());
  });

  report.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
  for (std::size_t fold = 0; fold < k; ++fold) {
    const FoldOutcome& out = outcomes[fold];
    report.warnings.insert(report.warnings.end(), out.warnings.begin(), out.warnings.end());
    if (!out.accuracy) continue;
    report.per_fold_accuracy.push_back(*out.accuracy);
    report.evaluated_folds.push_back(fold);
    for (std::size_t t = 0; t < classes; ++t) {
      for (std::size_t p = 0; p < classes; ++p) report.confusion[t][p] += out.confusion[t][p];
    }
  }
  report.median = median(report.per_fold_accuracy);
  report.mean = mean(report.per_fold_accuracy);
  report.std = stddev(report.per_fold_accuracy);
  return report;
}

}  // namespace netclass
