#include <doctest.h>

#include <cmath>
#include <random>

#include "incrtree/constants.hpp"
#include "incrtree/normality.hpp"
#include "incrtree/profile.hpp"
#include "incrtree/simulate.hpp"
#include "incrtree/stats.hpp"

using namespace incrtree;

namespace {

SampleStats stats_of(const std::vector<double>& xs) {
  SampleStats s;
  for (double x : xs) s.push(x);
  return s;
}

}  // namespace

TEST_CASE("SampleStats matches direct moment computation") {
  const std::vector<double> xs = {1.5, -2.0, 0.25, 4.0, 4.0, -1.0, 7.5};
  const SampleStats s = stats_of(xs);
  const double n = xs.size();
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  CHECK(s.count() == xs.size());
  CHECK(s.mean() == doctest::Approx(mean).epsilon(1e-14));
  CHECK(s.m2() == doctest::Approx(m2).epsilon(1e-13));
  CHECK(s.m3() == doctest::Approx(m3).epsilon(1e-13));
  CHECK(s.m4() == doctest::Approx(m4).epsilon(1e-13));
  CHECK(s.min() == -2.0);
  CHECK(s.max() == 7.5);
  CHECK(s.variance_sample() >= 0);
}

TEST_CASE("merge equals the stats of the concatenated sample") {
  std::mt19937_64 eng(42);
  std::normal_distribution<double> dist(3.0, 2.0);
  std::vector<double> all;
  for (int i = 0; i < 4000; ++i) all.push_back(dist(eng));

  const SampleStats whole = stats_of(all);
  for (std::size_t split : {1ul, 17ul, 2000ul, 3999ul}) {
    SampleStats a = stats_of(
        std::vector<double>(all.begin(), all.begin() + split));
    const SampleStats b =
        stats_of(std::vector<double>(all.begin() + split, all.end()));
    a.merge(b);
    CHECK(a.count() == whole.count());
    CHECK(a.mean() == doctest::Approx(whole.mean()).epsilon(1e-12));
    CHECK(a.m2() == doctest::Approx(whole.m2()).epsilon(1e-12));
    CHECK(a.m3() == doctest::Approx(whole.m3()).epsilon(1e-9));
    CHECK(a.m4() == doctest::Approx(whole.m4()).epsilon(1e-11));
  }
}

TEST_CASE("merging shards in any order gives the same moments") {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> dist(-1.0, 5.0);
  std::vector<std::vector<double>> shards(8);
  for (auto& shard : shards)
    for (int i = 0; i < 257; ++i) shard.push_back(dist(eng));

  auto fold = [&](const std::vector<int>& order) {
    SampleStats acc = stats_of(shards[order[0]]);
    for (std::size_t i = 1; i < order.size(); ++i)
      acc.merge(stats_of(shards[order[i]]));
    return acc;
  };
  const SampleStats forward = fold({0, 1, 2, 3, 4, 5, 6, 7});
  const SampleStats backward = fold({7, 6, 5, 4, 3, 2, 1, 0});
  const SampleStats shuffled = fold({3, 0, 7, 1, 6, 2, 5, 4});
  for (const SampleStats* s : {&backward, &shuffled}) {
    CHECK(s->mean() == doctest::Approx(forward.mean()).epsilon(1e-9));
    CHECK(s->m2() == doctest::Approx(forward.m2()).epsilon(1e-9));
    CHECK(s->m3() == doctest::Approx(forward.m3()).epsilon(1e-6));
    CHECK(s->m4() == doctest::Approx(forward.m4()).epsilon(1e-9));
  }
}

TEST_CASE("histogram and value tracking") {
  SampleStats s(HistogramSpec{0.0, 10.0, 10});
  for (int i = 0; i < 100; ++i) s.push(i % 12);  // 10, 11 overflow
  const Histogram& h = *s.histogram();
  std::uint64_t total = h.underflow + h.overflow;
  for (auto c : h.counts) total += c;
  CHECK(total == s.count());
  CHECK(h.overflow > 0);
  CHECK(s.values_tracked());
  const auto vc = s.value_counts();
  CHECK(vc.size() == 12);
  CHECK(vc.front().first == 0.0);

  SampleStats tiny(std::nullopt, true, 4);
  for (int i = 0; i < 100; ++i) tiny.push(i * 0.37);
  CHECK_FALSE(tiny.values_tracked());
  CHECK(tiny.values_overflowed());
}

TEST_CASE("simulate: constant toll is deterministic with zero variance") {
  const auto result = simulate(ModelParams::make_dary(2),
                               *make_constant_toll(1.0), 100, 500, 9);
  CHECK(result.stats.count() == 500);
  CHECK(result.stats.mean() == 100.0);
  CHECK(result.stats.variance_sample() == 0.0);
  CHECK(result.stats.min() == 100.0);
  CHECK(result.stats.max() == 100.0);
  const auto report = normality_report(result.stats, 100.0 * 1, 0.0);
  CHECK(report.sigma_zero);
}

TEST_CASE("simulate: identical seed and workers reproduce bit-identical stats") {
  SimulateOptions opt;
  opt.workers = 3;
  opt.histogram = HistogramSpec{0.0, 10.0, 21};
  const auto a = simulate(ModelParams::make_gport(1), *make_leaf_toll(), 50,
                          4000, 1234, opt);
  const auto b = simulate(ModelParams::make_gport(1), *make_leaf_toll(), 50,
                          4000, 1234, opt);
  CHECK(a.stats.mean() == b.stats.mean());
  CHECK(a.stats.m2() == b.stats.m2());
  CHECK(a.stats.m3() == b.stats.m3());
  CHECK(a.stats.m4() == b.stats.m4());
  CHECK(a.stats.seed_manifest == b.stats.seed_manifest);
  CHECK(a.stats.seed_manifest.size() == 3);
  // a different seed moves the result
  const auto c = simulate(ModelParams::make_gport(1), *make_leaf_toll(), 50,
                          4000, 99, opt);
  CHECK(a.stats.mean() != c.stats.mean());
}

TEST_CASE("simulate: leaf mean at n=5 matches the exact value (n+1)/3") {
  const auto result =
      simulate(ModelParams::make_dary(2), *make_leaf_toll(), 5, 100000, 77);
  const double se = result.stats.stddev() / std::sqrt(100000.0);
  CHECK(std::abs(result.stats.mean() - 2.0) < 5 * se);
}

TEST_CASE("simulate guards its work budget") {
  SimulateOptions opt;
  opt.max_work = 1000;
  CHECK_THROWS_AS(simulate(ModelParams::make_dary(2), *make_leaf_toll(), 100,
                           100, 1, opt),
                  resource_error);
}

TEST_CASE("normality_report calibration on a true normal sample") {
  SampleStats s(HistogramSpec{-5, 5, 201});
  std::mt19937_64 eng(2024);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) s.push(dist(eng));
  const auto report = normality_report(s, 0.0, 1.0);
  CHECK_FALSE(report.sigma_zero);
  CHECK(std::abs(report.skewness) < 4 * report.skewness_se);
  CHECK(std::abs(report.excess_kurtosis) < 4 * report.kurtosis_se);
  CHECK(std::abs(report.mean_check.z) < 4);
  CHECK(std::abs(report.variance_check.z) < 4);
  // continuous data overflows the value table; the binned path applies
  CHECK(report.ks_method == NormalityReport::KsMethod::binned);
  CHECK(report.ks_statistic < 0.01);
}

TEST_CASE("discrete KS path engages for lattice-valued functionals") {
  const auto result =
      simulate(ModelParams::make_dary(2), *make_leaf_toll(), 100, 20000, 5);
  CHECK(result.stats.values_tracked());
  const auto constants = fringe_constants(2, FringeMode::size, 1);
  const auto report =
      normality_report(result.stats, constants.mu * 100 + constants.mu,
                       constants.sigma2 * 100);
  CHECK(report.ks_method == NormalityReport::KsMethod::discrete);
  CHECK(report.ks_statistic < 0.05);
  CHECK(std::abs(report.mean_check.z) < 5);
  CHECK(std::abs(report.variance_check.z) < 5);
}

TEST_CASE("mc_profile: exact entries below the cutoff, MC above") {
  const auto profile = mc_profile(ModelParams::make_dary(2), *make_leaf_toll(),
                                  4, 2000, 11, 2);
  CHECK(profile.entries[0].exact);
  CHECK(profile.entries[0].value == 1.0);
  CHECK(profile.entries[1].exact);
  CHECK(profile.entries[1].value == 0.0);
  CHECK_FALSE(profile.entries[2].exact);
  CHECK(profile.entries[2].value == 0.0);  // leaf toll vanishes beyond size 1
  CHECK(profile.exact_through(2));
  CHECK_FALSE(profile.exact_through(3));
}

TEST_CASE("mc_profile estimates match the oracle within 4 standard errors") {
  const TollPtr toll = make_log_root_subtrees_toll();
  const ModelParams model = ModelParams::make_dary(2);
  const auto exact = exact_profile(model, *toll, 6);
  const auto mc = mc_profile(model, *toll, 6, 4000, 31, 0);
  for (int m = 2; m <= 6; ++m) {
    const auto& e = mc.at_size(m);
    REQUIRE_FALSE(e.exact);
    // size 2 is deterministic (every 2-vertex tree has s = 2)
    if (m >= 3) REQUIRE(e.std_error > 0);
    CHECK(std::abs(e.value - exact.at_size(m).value) <
          std::max(4 * e.std_error, 1e-12));
  }
  // m = 1 is deterministic: log 2 with zero spread
  CHECK(mc.at_size(1).value == doctest::Approx(std::log(2.0)));
}
