#include "incrtree/oracle.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "incrtree/additive.hpp"
#include "incrtree/constants.hpp"
#include "incrtree/counting.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/profile.hpp"
#include "incrtree/summation.hpp"
#include "incrtree/textform.hpp"

namespace incrtree {

namespace {

// raw per-tree outcomes of one enumeration pass
struct Outcomes {
  std::vector<double> values;
  std::vector<double> probs;   // double view of the exact probabilities
  std::vector<Rational> exact_probs;
};

Outcomes collect_outcomes(const ModelParams& model, const Toll& toll, int n,
                          const EnumLimits& limits) {
  Outcomes out;
  std::vector<double> scratch;
  enumerate_model(model, n, [&](const IncreasingTree& t) {
    out.values.push_back(additive_total(toll, t, scratch));
    Rational p = tree_probability(model, t);
    out.probs.push_back(to_double(p));
    out.exact_probs.push_back(std::move(p));
  }, limits);
  return out;
}

}  // namespace

ExactDistribution exact_distribution(const ModelParams& model,
                                     const Toll& toll, int n,
                                     const EnumLimits& limits) {
  const Outcomes outcomes = collect_outcomes(model, toll, n, limits);
  ExactDistribution dist;
  dist.model = model;
  dist.toll = toll.meta().display_name();
  dist.n = n;
  // bucket support keys at 1e-12 resolution
  std::map<std::int64_t, std::pair<double, Rational>> buckets;
  for (std::size_t i = 0; i < outcomes.values.size(); ++i) {
    const double v = outcomes.values[i];
    const auto key = static_cast<std::int64_t>(std::llround(v * 1e12));
    auto [it, inserted] =
        buckets.try_emplace(key, v, outcomes.exact_probs[i]);
    if (!inserted) it->second.second += outcomes.exact_probs[i];
  }
  dist.total_probability = 0;
  for (auto& [key, vp] : buckets) {
    dist.support.emplace_back(vp.first, vp.second);
    dist.total_probability += vp.second;
  }
  return dist;
}

double exact_moment(const ModelParams& model, const Toll& toll, int n, int r,
                    bool central, const EnumLimits& limits) {
  if (r < 0) throw std::invalid_argument("moment order must be >= 0");
  const Outcomes outcomes = collect_outcomes(model, toll, n, limits);
  double shift = 0;
  if (central) {
    NeumaierSum mean;
    for (std::size_t i = 0; i < outcomes.values.size(); ++i)
      mean.add(outcomes.probs[i] * outcomes.values[i]);
    shift = mean.value();
  }
  NeumaierSum moment;
  for (std::size_t i = 0; i < outcomes.values.size(); ++i)
    moment.add(outcomes.probs[i] *
               std::pow(outcomes.values[i] - shift, r));
  return moment.value();
}

ChiSquareReport chi_square_vs_model(const ModelParams& model, int n,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const TreeGenerator* generator,
                                    const EnumLimits& limits) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  // index the support by exact textual identity
  std::unordered_map<std::string, std::size_t> index;
  std::vector<double> expected;
  enumerate_model(model, n, [&](const IncreasingTree& t) {
    index.emplace(to_text(t), expected.size());
    expected.push_back(to_double(tree_probability(model, t)));
  }, limits);

  std::vector<std::uint64_t> observed(expected.size(), 0);
  Rng rng(seed);
  IncreasingTree t;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (generator)
      (*generator)(t, n, rng);
    else
      grow_model(t, model, n, rng);
    const auto it = index.find(to_text(t));
    if (it == index.end())
      throw std::logic_error("sampled a tree outside the enumerated support");
    ++observed[it->second];
  }

  ChiSquareReport report;
  report.samples = samples;
  report.cells = expected.size();
  report.min_expected = samples;
  double stat = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double e = expected[i] * static_cast<double>(samples);
    report.min_expected = std::min(report.min_expected, e);
    const double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
  }
  report.statistic = stat;
  report.degrees_of_freedom = expected.size() - 1;
  if (report.degrees_of_freedom > 0) {
    boost::math::chi_squared dist(
        static_cast<double>(report.degrees_of_freedom));
    report.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  } else {
    report.p_value = 1.0;
  }
  return report;
}

ChiSquareReport verify_uniformity(int d, int n, std::uint64_t samples,
                                  std::uint64_t seed,
                                  const EnumLimits& limits) {
  return chi_square_vs_model(ModelParams::make_dary(d), n, samples, seed,
                             nullptr, limits);
}

void grow_dary_biased(IncreasingTree& t, int d, int n, Rng& rng) {
  // min of two uniform draws tilts the slot choice toward older vertices
  t.reset_dary(d);
  std::vector<std::uint64_t> free_slots;
  for (int s = 0; s < d; ++s) free_slots.push_back(s);
  for (int v = 1; v < n; ++v) {
    const std::size_t pick = static_cast<std::size_t>(
        std::min(rng.below(free_slots.size()), rng.below(free_slots.size())));
    const std::uint64_t code = free_slots[pick];
    t.attach_dary(static_cast<int>(code / d), static_cast<int>(code % d));
    free_slots.erase(free_slots.begin() + pick);
    const std::uint64_t base = static_cast<std::uint64_t>(v) * d;
    for (int s = 0; s < d; ++s) free_slots.push_back(base + s);
  }
}

ModelProbabilityReport verify_model_probability(const Rational& alpha, int n,
                                                const EnumLimits& limits) {
  ModelProbabilityReport report;
  report.n = n;
  report.pass = true;
  report.total_probability = 0;
  const ModelParams model = ModelParams::make_gport(alpha);
  const Rational total_weight = gport_total_weight(alpha, n);
  enumerate_plane(n, [&](const IncreasingTree& t) {
    ++report.trees;
    const Rational p = tree_probability(model, t);
    report.total_probability += p;
    if (p * total_weight != weight_port(alpha, t) && report.pass) {
      report.pass = false;
      report.first_mismatch = to_text(t);
    }
  }, limits);
  if (report.total_probability != 1) {
    report.pass = false;
    if (report.first_mismatch.empty())
      report.first_mismatch = "probabilities sum to " +
                              incrtree::to_string(report.total_probability);
  }
  return report;
}

MeanFormulaReport verify_mean_formula(int d, const Toll& toll, int n,
                                      double tolerance,
                                      const EnumLimits& limits) {
  const ModelParams model = ModelParams::make_dary(d);
  const ExpectedTollProfile profile = exact_profile(model, toll, n, limits);
  MeanFormulaReport report;
  report.tolerance = tolerance;
  report.formula_mean = exact_mean(d, toll, n, profile);
  report.enumeration_mean =
      exact_moment(model, toll, n, 1, /*central=*/false, limits);
  report.abs_diff = std::abs(report.formula_mean - report.enumeration_mean);
  report.pass = report.abs_diff <= tolerance;
  return report;
}

namespace {

// all root-fixing adjacency-preserving vertex permutations, by backtracking
// over per-vertex images
void for_each_automorphism(const IncreasingTree& t,
                           const std::function<void(const std::vector<int>&)>& fn) {
  const int n = t.size();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  image[0] = 0;
  used[0] = 1;
  // map vertices in index order; parents precede children, so the parent's
  // image is always known
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      fn(image);
      return;
    }
    const int p_img = image[t.parent(v)];
    for (std::int32_t cand : t.children(p_img)) {
      if (used[cand]) continue;
      image[v] = cand;
      used[cand] = 1;
      rec(v + 1);
      used[cand] = 0;
      image[v] = -1;
    }
  };
  rec(1);
}

}  // namespace

BigInt automorphism_count_brute(const IncreasingTree& t) {
  BigInt count = 0;
  for_each_automorphism(t, [&](const std::vector<int>&) { ++count; });
  return count;
}

int orbit_count_brute(const IncreasingTree& t) {
  const int n = t.size();
  std::vector<int> parent_set(n);
  std::iota(parent_set.begin(), parent_set.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent_set[x] != x) x = parent_set[x] = parent_set[parent_set[x]];
    return x;
  };
  for_each_automorphism(t, [&](const std::vector<int>& image) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v), b = find(image[v]);
      if (a != b) parent_set[a] = b;
    }
  });
  int orbits = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++orbits;
  return orbits;
}

BigInt subtree_count_brute(const IncreasingTree& t) {
  const int n = t.size();
  if (n > 20) throw std::invalid_argument("subtree_count_brute caps at 20");
  BigInt count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the root
    bool connected = true;
    for (int v = 1; v < n && connected; ++v)
      if ((mask >> v) & 1) connected = (mask >> t.parent(v)) & 1;
    if (connected) ++count;
  }
  return count;
}

}  // namespace incrtree
