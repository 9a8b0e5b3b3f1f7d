#include "incrtree/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace incrtree {

SampleStats::SampleStats(std::optional<HistogramSpec> histogram,
                         bool track_values, std::size_t value_cap)
    : track_values_(track_values), value_cap_(value_cap) {
  if (histogram) {
    if (histogram->bins < 1 || !(histogram->lo < histogram->hi))
      throw std::invalid_argument("bad histogram spec");
    histogram_ = Histogram{*histogram,
                           std::vector<std::uint64_t>(histogram->bins, 0), 0,
                           0};
  }
}

void SampleStats::push(double x) {
  if (n_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3 * n + 3) + 6 * delta_n2 * m2_ -
         4 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2) - 3 * delta_n * m2_;
  m2_ += term1;

  if (histogram_) {
    Histogram& h = *histogram_;
    if (x < h.spec.lo) {
      ++h.underflow;
    } else if (x >= h.spec.hi) {
      ++h.overflow;
    } else {
      const double w = (h.spec.hi - h.spec.lo) / h.spec.bins;
      int b = static_cast<int>((x - h.spec.lo) / w);
      if (b >= h.spec.bins) b = h.spec.bins - 1;
      ++h.counts[b];
    }
  }
  if (track_values_ && !values_overflowed_) {
    const double scaled = x / kValueQuantum;
    if (std::abs(scaled) > 9.0e15) {
      values_overflowed_ = true;
      value_counts_.clear();
    } else {
      ++value_counts_[static_cast<std::int64_t>(std::llround(scaled))];
      if (value_counts_.size() > value_cap_) {
        values_overflowed_ = true;
        value_counts_.clear();
      }
    }
  }
}

void SampleStats::merge(const SampleStats& other) {
  if (other.n_ == 0) {
    // nothing to fold in; manifests still concatenate below
  } else if (n_ == 0) {
    min_ = other.min_;
    max_ = other.max_;
    n_ = other.n_;
    mean_ = other.mean_;
    m2_ = other.m2_;
    m3_ = other.m3_;
    m4_ = other.m4_;
  } else {
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    const double d2 = delta * delta;

    const double m2a = m2_, m2b = other.m2_;
    const double m3a = m3_, m3b = other.m3_;

    mean_ += delta * nb / n;
    m4_ += other.m4_ + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) /
                           (n * n * n) +
           6 * d2 * (na * na * m2b + nb * nb * m2a) / (n * n) +
           4 * delta * (na * m3b - nb * m3a) / n;
    m3_ += m3b + delta * d2 * na * nb * (na - nb) / (n * n) +
           3 * delta * (na * m2b - nb * m2a) / n;
    m2_ += m2b + d2 * na * nb / n;
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
    n_ += other.n_;
  }

  if (histogram_ && other.histogram_) {
    Histogram& a = *histogram_;
    const Histogram& b = *other.histogram_;
    if (a.spec.bins != b.spec.bins || a.spec.lo != b.spec.lo ||
        a.spec.hi != b.spec.hi)
      throw std::invalid_argument("cannot merge histograms with unequal specs");
    for (int i = 0; i < a.spec.bins; ++i) a.counts[i] += b.counts[i];
    a.underflow += b.underflow;
    a.overflow += b.overflow;
  } else if (other.histogram_ && !histogram_) {
    histogram_ = other.histogram_;
  }

  if (track_values_ || other.track_values_) {
    track_values_ = true;
    if (values_overflowed_ || other.values_overflowed_) {
      values_overflowed_ = true;
      value_counts_.clear();
    } else {
      for (const auto& [k, c] : other.value_counts_) value_counts_[k] += c;
      if (value_cap_ == 0) value_cap_ = other.value_cap_;
      if (value_counts_.size() > value_cap_) {
        values_overflowed_ = true;
        value_counts_.clear();
      }
    }
  }

  seed_manifest.insert(seed_manifest.end(), other.seed_manifest.begin(),
                       other.seed_manifest.end());
  if (tree_size == 0) tree_size = other.tree_size;
}

double SampleStats::variance_sample() const {
  if (n_ < 2) return std::numeric_limits<double>::quiet_NaN();
  return m2_ / static_cast<double>(n_ - 1);
}

double SampleStats::variance_population() const {
  if (n_ < 1) return std::numeric_limits<double>::quiet_NaN();
  return m2_ / static_cast<double>(n_);
}

double SampleStats::stddev() const { return std::sqrt(variance_sample()); }

double SampleStats::skewness() const {
  if (n_ < 2 || m2_ <= 0) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(n_);
  const double m2 = m2_ / n, m3 = m3_ / n;
  return m3 / std::pow(m2, 1.5);
}

double SampleStats::excess_kurtosis() const {
  if (n_ < 2 || m2_ <= 0) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(n_);
  const double m2 = m2_ / n, m4 = m4_ / n;
  return m4 / (m2 * m2) - 3.0;
}

std::vector<std::pair<double, std::uint64_t>> SampleStats::value_counts()
    const {
  std::vector<std::pair<double, std::uint64_t>> out;
  out.reserve(value_counts_.size());
  for (const auto& [k, c] : value_counts_)
    out.emplace_back(static_cast<double>(k) * kValueQuantum, c);
  return out;
}

}  // namespace incrtree
