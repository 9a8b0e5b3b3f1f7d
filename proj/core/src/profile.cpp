#include "incrtree/profile.hpp"

#include <cmath>

#include "incrtree/counting.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/rng.hpp"
#include "incrtree/summation.hpp"

namespace incrtree {

bool ExpectedTollProfile::exact_through(int n) const {
  if (n > max_size()) return false;
  for (int m = 1; m <= n; ++m)
    if (!entries[m - 1].exact) return false;
  return true;
}

const ProfileEntry& ExpectedTollProfile::at_size(int m) const {
  if (m < 1 || m > max_size())
    throw std::invalid_argument("profile has no entry for size " +
                                std::to_string(m));
  return entries[m - 1];
}

ExpectedTollProfile exact_profile(const ModelParams& model, const Toll& toll,
                                  int max_size, const EnumLimits& limits) {
  ExpectedTollProfile profile;
  profile.entries.resize(max_size);
  const bool weighted = model.variant == ModelParams::Variant::gport;
  for (int m = 1; m <= max_size; ++m) {
    NeumaierSum weighted_toll;
    enumerate_model(model, m, [&](const IncreasingTree& t) {
      const double f = toll.eval(t);
      weighted_toll.add(weighted ? to_double(weight_port(model.alpha, t)) * f
                                 : f);
    }, limits);
    double norm;
    if (weighted)
      norm = to_double(gport_total_weight(model.alpha, m));
    else
      norm = to_double(enumeration_count(model, m));
    profile.entries[m - 1] = {weighted_toll.value() / norm, true, 0, 0};
  }
  return profile;
}

ExpectedTollProfile size_only_profile(const Toll& toll, int max_size) {
  if (!toll.meta().size_only)
    throw std::invalid_argument("toll '" + toll.meta().name +
                                "' is not size-only");
  ExpectedTollProfile profile;
  profile.entries.resize(max_size);
  IncreasingTree path = IncreasingTree::plane();
  for (int m = 1; m <= max_size; ++m) {
    if (m > 1) path.attach_rightmost(m - 2);
    profile.entries[m - 1] = {toll.eval(path), true, 0, 0};
  }
  return profile;
}

ExpectedTollProfile mc_profile(const ModelParams& model, const Toll& toll,
                               int max_size, std::uint64_t samples,
                               std::uint64_t seed, int exact_upto,
                               const EnumLimits& limits) {
  if (samples < 2) throw std::invalid_argument("mc_profile needs samples >= 2");
  const int cut = std::min(exact_upto, max_size);
  ExpectedTollProfile profile =
      cut > 0 ? exact_profile(model, toll, cut, limits) : ExpectedTollProfile{};
  profile.entries.resize(max_size);
  IncreasingTree t;
  for (int m = cut + 1; m <= max_size; ++m) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(m)));
    NeumaierSum sum, sumsq;
    for (std::uint64_t i = 0; i < samples; ++i) {
      grow_model(t, model, m, rng);
      const double f = toll.eval(t);
      sum.add(f);
      sumsq.add(f * f);
    }
    const double mean = sum.value() / static_cast<double>(samples);
    const double var =
        std::max(0.0, sumsq.value() / static_cast<double>(samples) -
                          mean * mean);
    profile.entries[m - 1] = {
        mean, false, samples,
        std::sqrt(var / static_cast<double>(samples - 1))};
  }
  return profile;
}

}  // namespace incrtree
