#include "incrtree/decay.hpp"

#include <cmath>
#include <limits>

#include "incrtree/grow.hpp"
#include "incrtree/rng.hpp"
#include "incrtree/summation.hpp"

namespace incrtree {

DecayReport estimate_toll_decay(const ModelParams& model, const Toll& toll,
                                std::span<const int> sizes,
                                std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("need samples >= 2");
  DecayReport report;
  IncreasingTree t;
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const int n = sizes[idx];
    if (n < 1) throw std::invalid_argument("sizes must be >= 1");
    Rng rng(derive_seed(seed, idx));
    NeumaierSum sum, sumsq;
    for (std::uint64_t i = 0; i < samples; ++i) {
      grow_model(t, model, n, rng);
      const double a = std::abs(toll.eval(t));
      sum.add(a);
      sumsq.add(a * a);
    }
    const double mean = sum.value() / static_cast<double>(samples);
    const double var = std::max(
        0.0, sumsq.value() / static_cast<double>(samples) - mean * mean);
    report.points.push_back(
        {n, mean, std::sqrt(var / static_cast<double>(samples - 1)), samples});
  }

  // unweighted least squares on the log-log points
  std::vector<std::pair<double, double>> pts;
  for (const DecayPoint& p : report.points)
    if (p.mean_abs_toll > 0)
      pts.emplace_back(std::log(static_cast<double>(p.size)),
                       std::log(p.mean_abs_toll));
  report.positive_points = pts.size();
  if (pts.size() < 2) {
    report.loglog_slope = std::numeric_limits<double>::quiet_NaN();
    report.loglog_slope_std_error = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  double sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / pts.size(), my = sy / pts.size();
  double sxx = 0, sxy = 0, sse = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  const double slope = sxy / sxx;
  for (auto [x, y] : pts) {
    const double r = y - my - slope * (x - mx);
    sse += r * r;
  }
  report.loglog_slope = slope;
  report.loglog_slope_std_error =
      pts.size() > 2 ? std::sqrt(sse / (pts.size() - 2) / sxx)
                     : std::numeric_limits<double>::quiet_NaN();
  return report;
}

}  // namespace incrtree
