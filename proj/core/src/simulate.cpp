#include "incrtree/simulate.hpp"

#include <thread>

#include "incrtree/additive.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/rng.hpp"

namespace incrtree {

SimulateResult simulate(const ModelParams& model, const Toll& toll, int n,
                        std::uint64_t samples, std::uint64_t seed,
                        const SimulateOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (options.workers < 1)
    throw std::invalid_argument("workers must be >= 1");
  if (static_cast<std::uint64_t>(n) * samples > options.max_work)
    throw resource_error(
        "n * samples exceeds the simulation budget; raise max_work to allow " +
        std::to_string(static_cast<std::uint64_t>(n) * samples));

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(options.workers, samples));
  std::vector<SampleStats> partial;
  std::vector<std::vector<double>> dumps(workers);
  partial.reserve(workers);
  for (int w = 0; w < workers; ++w)
    partial.emplace_back(options.histogram, options.track_values,
                         options.value_cap);

  const std::uint64_t base = samples / workers;
  const std::uint64_t extra = samples % workers;

  auto run_worker = [&](int w) {
    const std::uint64_t quota =
        base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    const std::uint64_t worker_seed = derive_seed(seed, w);
    Rng rng(worker_seed);
    SampleStats& stats = partial[w];
    stats.tree_size = n;
    stats.seed_manifest.emplace_back(w, worker_seed);
    IncreasingTree tree;
    std::vector<double> scratch;
    for (std::uint64_t i = 0; i < quota; ++i) {
      grow_model(tree, model, n, rng);
      const double value = additive_total(toll, tree, scratch);
      stats.push(value);
      if (dumps[w].size() < options.dump_cap) dumps[w].push_back(value);
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }

  SimulateResult result;
  result.stats = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) result.stats.merge(partial[w]);
  for (int w = 0; w < workers; ++w) {
    for (double v : dumps[w]) {
      if (result.dumped_values.size() >= options.dump_cap) break;
      result.dumped_values.push_back(v);
    }
  }
  return result;
}

}  // namespace incrtree
