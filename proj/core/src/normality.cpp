#include "incrtree/normality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace incrtree {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

namespace {

double ks_discrete(const std::vector<std::pair<double, std::uint64_t>>& raw,
                   std::uint64_t n, double mean, double sd) {
  // support points closer than the merge window are one atom that the value
  // quantization happened to split; fold them together first
  constexpr double kMergeWindow = 1e-3;
  std::vector<std::pair<double, std::uint64_t>> vc;
  for (const auto& [value, count] : raw) {
    if (!vc.empty() && value - vc.back().first < kMergeWindow)
      vc.back().second += count;
    else
      vc.emplace_back(value, count);
  }
  // empirical CDF evaluated between consecutive support points
  double ks = 0;
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i + 1 < vc.size(); ++i) {
    cum += vc[i].second;
    const double mid = 0.5 * (vc[i].first + vc[i + 1].first);
    const double emp = static_cast<double>(cum) / static_cast<double>(n);
    ks = std::max(ks, std::abs(emp - normal_cdf((mid - mean) / sd)));
  }
  return ks;
}

double ks_binned(const Histogram& h, std::uint64_t n, double mean, double sd) {
  double ks = 0;
  std::uint64_t cum = h.underflow;
  const double w = (h.spec.hi - h.spec.lo) / h.spec.bins;
  for (int i = 0; i + 1 < h.spec.bins; ++i) {
    cum += h.counts[i];
    const double edge = h.spec.lo + w * (i + 1);
    const double emp = static_cast<double>(cum) / static_cast<double>(n);
    ks = std::max(ks, std::abs(emp - normal_cdf((edge - mean) / sd)));
  }
  return ks;
}

}  // namespace

NormalityReport normality_report(const SampleStats& stats,
                                 double predicted_mean,
                                 double predicted_variance,
                                 std::string truncation_note) {
  NormalityReport report;
  report.samples = stats.count();
  report.truncation_note = std::move(truncation_note);
  const double n = static_cast<double>(stats.count());
  if (stats.count() < 2) {
    report.sigma_zero = true;
    return report;
  }

  const double var = stats.variance_sample();
  report.mean_check.observed = stats.mean();
  report.mean_check.predicted = predicted_mean;
  report.variance_check.observed = var;
  report.variance_check.predicted = predicted_variance;

  if (!(var > 0)) {
    // a deterministic functional; the theorem's sigma != 0 case
    report.sigma_zero = true;
    report.mean_check.z =
        stats.mean() == predicted_mean
            ? 0
            : std::numeric_limits<double>::infinity();
    return report;
  }

  const double sd = std::sqrt(var);
  report.skewness = stats.skewness();
  report.skewness_se = std::sqrt(6.0 / n);
  report.excess_kurtosis = stats.excess_kurtosis();
  report.kurtosis_se = std::sqrt(24.0 / n);

  report.mean_check.z = (stats.mean() - predicted_mean) / (sd / std::sqrt(n));
  // SE of the sample variance from the fourth moment
  const double m2 = stats.m2() / n;
  const double m4 = stats.m4() / n;
  const double var_of_var =
      std::max(0.0, (m4 - m2 * m2 * (n - 3) / (n - 1)) / n);
  report.variance_check.z =
      (var - predicted_variance) / std::sqrt(var_of_var);

  if (stats.values_tracked()) {
    const auto vc = stats.value_counts();
    if (vc.size() >= 2) {
      report.ks_method = NormalityReport::KsMethod::discrete;
      report.ks_statistic = ks_discrete(vc, stats.count(), stats.mean(), sd);
      return report;
    }
  }
  if (stats.histogram()) {
    report.ks_method = NormalityReport::KsMethod::binned;
    report.ks_statistic =
        ks_binned(*stats.histogram(), stats.count(), stats.mean(), sd);
  }
  return report;
}

}  // namespace incrtree
