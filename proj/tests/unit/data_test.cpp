#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "netclass/data/blobs.hpp"
#include "netclass/data/dataset.hpp"
#include "netclass/data/folds.hpp"
#include "netclass/data/normalization.hpp"
#include "netclass/error.hpp"
#include "netclass/experiments/stats.hpp"
#include "support/oracles.hpp"

namespace netclass {
namespace {

Dataset parse(const std::string& text, std::string_view label = "species") {
  std::istringstream in(text);
  return parse_csv(in, label, "test.csv");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadCsv, ThreeRows) {
  const Dataset d = parse("a,b,species\n1,2,x\n3.5,-4,y\n0,1e3,x\n");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.dimension(), 2u);
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.features(1, 1), -4.0);
  EXPECT_EQ(d.features(2, 1), 1000.0);
  EXPECT_EQ(d.classes(), (std::vector<std::string>{"x", "y"}));
}

TEST(LoadCsv, LabelColumnAnywhereAndQuotedCells) {
  const Dataset d = parse("\"species\",w\r\n\"a, b\",2\r\nc,+3\r\n\n");
  EXPECT_EQ(d.labels, (std::vector<std::string>{"a, b", "c"}));
  EXPECT_EQ(d.features(1, 0), 3.0);
}

TEST(LoadCsv, ErrorsNameRowAndColumn) {
  EXPECT_NE(error_of("a,species\n1,x\nNaN,y\n").find("test.csv:3"), std::string::npos);
  EXPECT_NE(error_of("a,species\n1,x\nNaN,y\n").find("column 'a'"), std::string::npos);
  EXPECT_NE(error_of("a,species\n1,x\ninf,y\n").find("non-finite"), std::string::npos);
  EXPECT_NE(error_of("a,species\nfoo,x\n").find("not a number"), std::string::npos);
  EXPECT_NE(error_of("a,species\n,x\n").find("not a number"), std::string::npos);
  EXPECT_NE(error_of("a,species\n1,x\n\n2,y\n").find("empty row"), std::string::npos);
  EXPECT_NE(error_of("a,species\n1,x,3\n").find("expected 2 fields"), std::string::npos);
  EXPECT_NE(error_of("").find("missing header"), std::string::npos);
  EXPECT_NE(error_of("a,b\n1,2\n").find("label column 'species'"), std::string::npos);
  EXPECT_NE(error_of("a,species\n").find("no data rows"), std::string::npos);
  EXPECT_THROW(load_csv("/nonexistent/file.csv", "x"), InputError);
}

TEST(LoadCsv, PenguinFile) {
  const Dataset d = load_csv(NETCLASS_DATA_DIR "/penguins.csv", "species");
  EXPECT_EQ(d.classes().size(), 3u);
  EXPECT_EQ(d.dimension(), 4u);
  // two birds without measurements are dropped from the shipped file
  EXPECT_EQ(d.size(), 342u);
}

TEST(FeatureCsv, IgnoresLabelColumn) {
  std::istringstream in("a,class,b\n1,x,2\n");
  const FeatureTable t = parse_feature_csv(in, "class", "q.csv");
  EXPECT_EQ(t.features.cols(), 2u);
  EXPECT_EQ(t.features(0, 1), 2.0);
}

TEST(Normalization, MinMaxColumn) {
  const Matrix x{{0.0}, {5.0}, {10.0}};
  const auto p = fit_normalization(x, NormalizationScheme::minmax);
  EXPECT_EQ(apply_normalization(p, x), (Matrix{{0.0}, {0.5}, {1.0}}));
  const std::vector<double> twenty{20.0};
  EXPECT_EQ(apply_normalization(p, twenty)[0], 2.0);
}

TEST(Normalization, NoneIsIdentity) {
  const Matrix x{{1.5, -2.0}, {3.0, 7.0}};
  const auto p = fit_normalization(x, NormalizationScheme::none);
  EXPECT_EQ(apply_normalization(p, x), x);
}

TEST(Normalization, ConstantColumnsMapToZero) {
  const Matrix x{{3.0, 1.0}, {3.0, 2.0}};
  for (auto scheme : {NormalizationScheme::minmax, NormalizationScheme::zscore}) {
    const auto y = apply_normalization(fit_normalization(x, scheme), x);
    EXPECT_EQ(y(0, 0), 0.0);
    EXPECT_EQ(y(1, 0), 0.0);
  }
}

TEST(Normalization, ZscoreMomentsAndRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix x = testing::random_points(rng, 2 + rng() % 30, 1 + rng() % 4, 50.0);
    for (auto scheme : {NormalizationScheme::none, NormalizationScheme::minmax, NormalizationScheme::zscore}) {
      const auto p = fit_normalization(x, scheme);
      const Matrix y = apply_normalization(p, x);
      const Matrix back = invert_normalization(p, y);
      for (std::size_t i = 0; i < x.values().size(); ++i) {
        EXPECT_NEAR(back.values()[i], x.values()[i], 1e-9);
      }
      if (scheme == NormalizationScheme::zscore) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
          std::vector<double> col;
          for (std::size_t i = 0; i < y.rows(); ++i) col.push_back(y(i, k));
          EXPECT_NEAR(mean(col), 0.0, 1e-12);
          EXPECT_NEAR(stddev(col), 1.0, 1e-12);
        }
      }
    }
  }
  EXPECT_THROW(parse_normalization("l2"), ConfigError);
}

TEST(StratifiedKfold, SingleClassEvenSplit) {
  const std::vector<std::string> labels(10, "a");
  const auto plan = stratified_kfold(labels, 5, 1);
  for (std::size_t f = 0; f < 5; ++f) EXPECT_EQ(plan.test_indices(f).size(), 2u);
}

TEST(StratifiedKfold, TwoClassesTwoFolds) {
  std::vector<std::string> labels(6, "A");
  labels.insert(labels.end(), 4, "B");
  const auto plan = stratified_kfold(labels, 2, 99);
  for (std::size_t f = 0; f < 2; ++f) {
    std::size_t a = 0, b = 0;
    for (std::size_t i : plan.test_indices(f)) (labels[i] == "A" ? a : b)++;
    EXPECT_EQ(a, 3u);
    EXPECT_EQ(b, 2u);
  }
}

TEST(StratifiedKfold, IrisFivePerClassPerFold) {
  const Dataset iris = load_csv(NETCLASS_DATA_DIR "/iris.csv", "class");
  const auto plan = stratified_kfold(iris.labels, 10, 7);
  for (std::size_t f = 0; f < 10; ++f) {
    std::map<std::string, int> count;
    for (std::size_t i : plan.test_indices(f)) ++count[iris.labels[i]];
    ASSERT_EQ(count.size(), 3u);
    for (const auto& [label, c] : count) EXPECT_EQ(c, 5) << label;
  }
}

TEST(StratifiedKfold, PartitionBalanceDeterminism) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 120;
    std::vector<std::string> labels(n);
    for (auto& l : labels) l = std::string(1, static_cast<char>('a' + rng() % 4));
    const std::size_t k = 2 + rng() % (std::min<std::size_t>(n, 12) - 1);
    const std::uint64_t seed = rng();
    const auto plan = stratified_kfold(labels, k, seed);
    EXPECT_EQ(plan.assignments, stratified_kfold(labels, k, seed).assignments);
    std::vector<std::size_t> seen(n, 0);
    std::map<std::string, std::vector<std::size_t>> per_class;
    std::vector<std::size_t> fold_sizes(k, 0);
    for (std::size_t f = 0; f < k; ++f) {
      const auto test = plan.test_indices(f);
      fold_sizes[f] = test.size();
      for (std::size_t i : test) ++seen[i];
      for (std::size_t i : test) {
        auto& v = per_class[labels[i]];
        v.resize(k, 0);
        ++v[f];
      }
    }
    for (std::size_t s : seen) EXPECT_EQ(s, 1u);
    for (std::size_t s : fold_sizes) EXPECT_GT(s, 0u);
    for (auto& [label, counts] : per_class) {
      counts.resize(k, 0);
      const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
      EXPECT_LE(*hi - *lo, 1u);
    }
  }
}

TEST(StratifiedKfold, Errors) {
  const std::vector<std::string> labels(4, "a");
  EXPECT_THROW(stratified_kfold(labels, 5, 0), ConfigError);
  EXPECT_THROW(stratified_kfold(labels, 1, 0), ConfigError);
}

TEST(Blobs, TwoClassBenchmark) {
  const auto specs = two_blob_specs(3);
  const Dataset d = generate_blobs(specs);
  EXPECT_EQ(d.size(), 100u);
  EXPECT_EQ(d.dimension(), 2u);
  EXPECT_EQ(d.label_histogram(), (std::map<std::string, std::size_t>{{"1", 50}, {"2", 50}}));
  EXPECT_EQ(specs[1].mu, (std::vector<double>{5.0, 5.0}));
  EXPECT_EQ(specs[1].sigma, (std::vector<double>{0.4, 0.4}));
}

TEST(Blobs, DeterministicPerSeed) {
  const auto specs = two_blob_specs(8);
  EXPECT_EQ(generate_blobs(specs).features, generate_blobs(specs).features);
  EXPECT_NE(generate_blobs(specs).features, generate_blobs(two_blob_specs(9)).features);
}

TEST(Blobs, TinySigmaCollapsesOnMean) {
  const BlobSpec spec{{2.0, -3.0}, {1e-12, 1e-12}, 100, 1};
  const Dataset d = generate_blobs(std::span(&spec, 1));
  for (std::size_t k = 0; k < 2; ++k) {
    double m = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) m += d.features(i, k);
    EXPECT_NEAR(m / 100.0, spec.mu[k], 1e-6);
  }
}

TEST(Blobs, LargeSampleStatistics) {
  const auto specs = two_blob_specs(12, 10000);
  const Dataset d = generate_blobs(specs);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t k = 0; k < 2; ++k) {
      std::vector<double> col;
      for (std::size_t i = s * 10000; i < (s + 1) * 10000; ++i) col.push_back(d.features(i, k));
      EXPECT_NEAR(mean(col), specs[s].mu[k], 0.05);
      EXPECT_NEAR(stddev(col), specs[s].sigma[k], 0.05);
    }
  }
}

TEST(Blobs, RejectsBadSpecs) {
  const BlobSpec bad{{0.0}, {0.0}, 5, 1};
  EXPECT_THROW(generate_blobs(std::span(&bad, 1)), ConfigError);
  const std::vector<BlobSpec> mixed{{{0.0}, {1.0}, 5, 1}, {{0.0, 1.0}, {1.0, 1.0}, 5, 1}};
  EXPECT_THROW(generate_blobs(mixed), ConfigError);
}

TEST(StratifiedSubsample, KeepsProportions) {
  const Dataset iris = load_csv(NETCLASS_DATA_DIR "/iris.csv", "class");
  const Dataset sub = stratified_subsample(iris, 30, 4);
  EXPECT_EQ(sub.size(), 30u);
  for (const auto& [label, c] : sub.label_histogram()) EXPECT_EQ(c, 10u) << label;
  EXPECT_EQ(sub.features, stratified_subsample(iris, 30, 4).features);
  EXPECT_THROW(stratified_subsample(iris, 151, 0), ConfigError);
}

TEST(Stats, QuantilesInterpolate) {
  const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
  EXPECT_EQ(median(v), 2.5);
  EXPECT_EQ(quantile(v, 0.25), 1.75);
  EXPECT_EQ(quantile(v, 1.0), 4.0);
  EXPECT_TRUE(std::isnan(median(std::vector<double>{})));
}

}  // namespace
}  // namespace netclass
