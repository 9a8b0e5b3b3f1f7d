#pragma once

#include <optional>
#include <string>

#include "incrtree/stats.hpp"

namespace incrtree {

// Diagnostics of the sampled F(T_n) distribution against the normal limit.
//
// Skewness / excess kurtosis come from the streaming moments with the
// large-sample standard errors sqrt(6/N) and sqrt(24/N). The KS statistic
// compares the sample standardized by its own mean and standard deviation
// against the standard normal CDF:
//   - `discrete` path: when the exact value-count table is available, the
//     empirical CDF is evaluated between consecutive support points (the
//     usual half-lattice continuity correction, generalized to irregular
//     support); this measures convergence rather than the unavoidable
//     atom-size gap of lattice-valued functionals.
//   - `binned` path: otherwise the histogram's cumulative counts at interior
//     bin edges are used (approximate; adequate at the 0.01 tolerance).
// Mean/variance checks compare against the predicted mu*n + shift and
// sigma2*n with z-scores.
struct NormalityReport {
  std::uint64_t samples = 0;

  double skewness = 0, skewness_se = 0;
  double excess_kurtosis = 0, kurtosis_se = 0;

  enum class KsMethod { discrete, binned, unavailable };
  KsMethod ks_method = KsMethod::unavailable;
  double ks_statistic = 0;

  struct MomentCheck {
    double observed = 0;
    double predicted = 0;
    double z = 0;
  };
  MomentCheck mean_check;      // observed sample mean vs predicted mean
  MomentCheck variance_check;  // observed sample variance vs sigma2 * n

  bool sigma_zero = false;  // degenerate sample: the CLT does not apply
  std::string truncation_note;
};

NormalityReport normality_report(const SampleStats& stats,
                                 double predicted_mean,
                                 double predicted_variance,
                                 std::string truncation_note = {});

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace incrtree
