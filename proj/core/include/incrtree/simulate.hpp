#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "incrtree/model.hpp"
#include "incrtree/stats.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

struct SimulateOptions {
  int workers = 1;
  std::optional<HistogramSpec> histogram;
  bool track_values = true;
  std::size_t value_cap = 1 << 16;
  std::size_t dump_cap = 0;  // keep up to this many raw F values
  // refuse jobs with n * samples beyond this budget
  std::uint64_t max_work = std::uint64_t{1} << 33;
};

struct SimulateResult {
  SampleStats stats;
  std::vector<double> dumped_values;
};

// samples i.i.d. trees T_n under the model, evaluates F(T_n) for the toll on
// each, and accumulates streaming moments. Deterministic for fixed
// (seed, workers): worker w draws from seed derive_seed(seed, w), handles a
// fixed sample range, and results merge in worker order.
SimulateResult simulate(const ModelParams& model, const Toll& toll, int n,
                        std::uint64_t samples, std::uint64_t seed,
                        const SimulateOptions& options = {});

}  // namespace incrtree
