#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace incrtree {

// Fixed-bin histogram; values outside [lo, hi) land in under/overflow.
struct HistogramSpec {
  double lo = 0;
  double hi = 1;
  int bins = 201;
};

struct Histogram {
  HistogramSpec spec;
  std::vector<std::uint64_t> counts;
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;
};

// Streaming moment accumulator: count, mean and central moment sums up to
// order 4, mergeable across workers with the exact pairwise-update
// identities (one pass, no sample storage).
//
// Optionally tracks a histogram and a quantized exact value-count table
// (resolution kValueQuantum); the table drops out once it exceeds its cap,
// which signals "effectively continuous" data to the KS routine.
class SampleStats {
 public:
  static constexpr double kValueQuantum = 1e-6;

  SampleStats() = default;
  explicit SampleStats(std::optional<HistogramSpec> histogram,
                       bool track_values = true,
                       std::size_t value_cap = 1 << 16);

  void push(double x);
  void merge(const SampleStats& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double min() const { return min_; }
  double max() const { return max_; }

  // central moment sums M_k = sum (x - mean)^k
  double m2() const { return m2_; }
  double m3() const { return m3_; }
  double m4() const { return m4_; }

  double variance_sample() const;      // M2 / (n-1)
  double variance_population() const;  // M2 / n
  double stddev() const;
  double skewness() const;             // m3 / m2^(3/2), population moments
  double excess_kurtosis() const;      // m4 / m2^2 - 3

  const std::optional<Histogram>& histogram() const { return histogram_; }

  bool values_tracked() const { return track_values_ && !values_overflowed_; }
  bool values_overflowed() const { return values_overflowed_; }
  // (value, count) sorted by value; empty when not tracked or overflowed
  std::vector<std::pair<double, std::uint64_t>> value_counts() const;

  // sample context, carried into reports
  int tree_size = 0;
  std::vector<std::pair<int, std::uint64_t>> seed_manifest;  // (worker, seed)

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0, m2_ = 0, m3_ = 0, m4_ = 0;
  double min_ = 0, max_ = 0;

  std::optional<Histogram> histogram_;
  bool track_values_ = false;
  std::size_t value_cap_ = 0;
  bool values_overflowed_ = false;
  std::map<std::int64_t, std::uint64_t> value_counts_;
};

}  // namespace incrtree
