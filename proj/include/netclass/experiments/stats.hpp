#pragma once

#include <span>

namespace netclass {

/// Quantile with linear interpolation between order statistics (the
/// "type 7" rule). q in [0, 1]; input need not be sorted. NaN when empty.
double quantile(std::span<const double> values, double q);
double median(std::span<const double> values);
double mean(std::span<const double> values);
/// Population standard deviation.
double stddev(std::span<const double> values);

/// Five-number summary plus mean/std.
struct Summary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
};

Summary summarize(std::span<const double> values);

}  // namespace netclass
