#pragma once

#include <cstdint>
#include <vector>

#include "incrtree/enumerate.hpp"
#include "incrtree/model.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

// E f(T_m) for m = 1..M, with per-entry provenance.
struct ProfileEntry {
  double value = 0;
  bool exact = true;        // enumeration (or size-only evaluation) vs MC
  std::uint64_t samples = 0;
  double std_error = 0;     // MC only
};

struct ExpectedTollProfile {
  std::vector<ProfileEntry> entries;  // entries[m-1] describes size m

  int max_size() const { return static_cast<int>(entries.size()); }
  bool exact_through(int n) const;
  const ProfileEntry& at_size(int m) const;
};

// Exact expected tolls by full enumeration (model-weighted).
ExpectedTollProfile exact_profile(const ModelParams& model, const Toll& toll,
                                  int max_size, const EnumLimits& limits = {});

// For size-only tolls: E f(T_m) = f(any tree of size m); evaluated on a path.
ExpectedTollProfile size_only_profile(const Toll& toll, int max_size);

// Exact entries up to exact_upto (enumeration), Monte Carlo with standard
// errors beyond.
ExpectedTollProfile mc_profile(const ModelParams& model, const Toll& toll,
                               int max_size, std::uint64_t samples,
                               std::uint64_t seed, int exact_upto,
                               const EnumLimits& limits = {});

}  // namespace incrtree
