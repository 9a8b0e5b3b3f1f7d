#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "incrtree/model.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

// Monte Carlo estimate of E|f(T_k)| on a size grid. Advisory evidence for
// condition (C2); a measurement, not a proof.
struct DecayPoint {
  int size = 0;
  double mean_abs_toll = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

struct DecayReport {
  std::vector<DecayPoint> points;
  // least-squares slope of log E|f| against log size over points with a
  // positive estimate; NaN when fewer than two such points exist
  double loglog_slope = 0;
  double loglog_slope_std_error = 0;
  std::size_t positive_points = 0;
};

DecayReport estimate_toll_decay(const ModelParams& model, const Toll& toll,
                                std::span<const int> sizes,
                                std::uint64_t samples, std::uint64_t seed);

}  // namespace incrtree
