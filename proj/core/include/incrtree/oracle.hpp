#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "incrtree/enumerate.hpp"
#include "incrtree/model.hpp"
#include "incrtree/rational.hpp"
#include "incrtree/rng.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

// Brute-force ground truth at small sizes. Everything here prefers
// independence from the formula-based routes over speed.

// Exact law of F(T_n): enumerate the model's support, weight each tree by
// its exact process probability, aggregate equal F values (real-valued tolls
// are bucketed at 1e-12 resolution for the support keys; moments use the
// unbucketed values).
struct ExactDistribution {
  ModelParams model;
  std::string toll;
  int n = 0;
  std::vector<std::pair<double, Rational>> support;  // sorted by value
  Rational total_probability;                        // exact; must be 1
};

ExactDistribution exact_distribution(const ModelParams& model,
                                     const Toll& toll, int n,
                                     const EnumLimits& limits = {});

// r-th moment of F(T_n); central moments are about the exact mean.
double exact_moment(const ModelParams& model, const Toll& toll, int n, int r,
                    bool central, const EnumLimits& limits = {});

// ---- growth-process distribution checks ----

struct ChiSquareReport {
  double statistic = 0;
  std::uint64_t degrees_of_freedom = 0;
  double p_value = 0;
  std::uint64_t samples = 0;
  std::size_t cells = 0;
  double min_expected = 0;
};

// Generator override hook (negative controls); grows a size-n tree into t.
using TreeGenerator =
    std::function<void(IncreasingTree& t, int n, Rng& rng)>;

// Chi-square of sampled trees against the exact model distribution over all
// trees of size n (uniform for d-ary / recursive, weighted for gport).
ChiSquareReport chi_square_vs_model(const ModelParams& model, int n,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const TreeGenerator* generator = nullptr,
                                    const EnumLimits& limits = {});

// Uniformity of the d-ary growth process.
ChiSquareReport verify_uniformity(int d, int n, std::uint64_t samples,
                                  std::uint64_t seed,
                                  const EnumLimits& limits = {});

// Deliberately skewed d-ary grower (prefers low slot indices); used to prove
// the chi-square harness rejects.
void grow_dary_biased(IncreasingTree& t, int d, int n, Rng& rng);

// ---- exact identities ----

// Checks P(T) * total_weight == w(T) as exact rationals for every PORT of
// size n, plus that the probabilities sum to 1.
struct ModelProbabilityReport {
  bool pass = false;
  int n = 0;
  std::size_t trees = 0;
  Rational total_probability;
  std::string first_mismatch;  // textual tree, empty when pass
};

ModelProbabilityReport verify_model_probability(const Rational& alpha, int n,
                                                const EnumLimits& limits = {});

// Compares the explicit finite-n mean formula against the enumeration mean.
struct MeanFormulaReport {
  bool pass = false;
  double formula_mean = 0;
  double enumeration_mean = 0;
  double abs_diff = 0;
  double tolerance = 0;
};

MeanFormulaReport verify_mean_formula(int d, const Toll& toll, int n,
                                      double tolerance = 1e-12,
                                      const EnumLimits& limits = {});

// ---- brute-force structure oracles (test ground truth) ----

// Order of the shape automorphism group by explicit enumeration of all
// root-fixing, adjacency-preserving vertex permutations.
BigInt automorphism_count_brute(const IncreasingTree& t);

// Number of vertex orbits from the same permutation enumeration.
int orbit_count_brute(const IncreasingTree& t);

// Number of subtrees containing the root by subset enumeration (|T| <= 20).
BigInt subtree_count_brute(const IncreasingTree& t);

}  // namespace incrtree
