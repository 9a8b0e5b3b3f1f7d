#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "incrtree/enumerate.hpp"
#include "incrtree/phi.hpp"
#include "incrtree/profile.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

// Limit constants of the additive-functional central limit law for a
// (model, toll) pair, with their truncation parameters. The mean of the
// functional grows like mu*n and the variance like sigma2*n.
struct TheoremConstants {
  enum class Method { enumeration, size_series, closed_form };

  double mu = 0;
  double sigma2 = std::numeric_limits<double>::quiet_NaN();
  Method method = Method::enumeration;
  int tree_size_cutoff = 0;              // K: tree sums truncated at |T| <= K
  int series_length = 0;                 // N: size series truncated at m <= N
  std::optional<double> tail_bound;      // bound on the discarded mu tail
  std::optional<double> mu_std_error;    // MC-backed profiles only
  std::vector<double> sigma2_sequence;   // sigma2_1 .. sigma2_K
  std::vector<std::string> warnings;
};

// mu truncation via Theorem-style tree sums:
//   mu_K = (d-1) sum_{|T| <= K} f(T) prod_{j=1}^{|T|} 1/((d-1)j + d).
TheoremConstants mu_enumeration(int d, const Toll& toll, int K,
                                const EnumLimits& limits = {});

// mu truncation via the size-grouped series
//   d(d-1) sum_{m <= N} E f(T_m) / (((d-1)m+1)((d-1)m+d));
// a regrouping of the tree sum. Bounded tolls get a tail bound
// sup|f| * d/((d-1)N + d); MC entries propagate their standard errors.
TheoremConstants mu_size_series(int d, const Toll& toll,
                                const ExpectedTollProfile& profile, int N);

// The exact finite-n mean
//   E F(T_n) = (d(d-1)n + d) sum_{m<n} E f(T_m)/(((d-1)m+1)((d-1)m+d))
//              + E f(T_n),
// valid for every toll (no growth conditions); profile must be exact
// through n.
double exact_mean(int d, const Toll& toll, int n,
                  const ExpectedTollProfile& profile);

// sigma2 truncation: the three-part variance expression with both tree sums
// truncated at |T| <= K (the double sum collapses to a size-indexed sum).
// The full sequence sigma2_1..sigma2_K is exposed since no truncation-error
// bound is available; a warning is attached when the last increment exceeds
// convergence_warn_tol.
TheoremConstants sigma2_enumeration(int d, const Toll& toll, int K,
                                    const EnumLimits& limits = {},
                                    double convergence_warn_tol = 1e-3);

// Closed forms for fringe counts: occurrences of a fixed tree of size k on
// the fringe, and the number of fringe subtrees of size k.
enum class FringeMode { occurrence, size };
TheoremConstants fringe_constants(int d, FringeMode mode, int k);

// GPORT mirror of the pipeline. Theorem 2's leading variance term is printed
// with the opposite sign of Theorem 1's and its varphi lacks phi's
// (1-x)^{-1} prefactor, so all four (sign, normalization) combinations are
// computed; `recommended` selects the variant validated by the
// constant-toll consistency check (sigma2 -> 0) and by simulation.
struct GportConstants {
  enum Variant {
    printed_sign_plain = 0,    // +mu^2/(alpha+1), bare-integral varphi
    flipped_sign_plain = 1,
    printed_sign_prefactor = 2,
    flipped_sign_prefactor = 3,
  };

  double mu = 0;
  int tree_size_cutoff = 0;
  std::array<std::vector<double>, 4> sigma2_sequences;
  Variant recommended = printed_sign_prefactor;
  std::vector<std::string> warnings;

  double sigma2(Variant v) const { return sigma2_sequences[v].back(); }
  double sigma2_recommended() const { return sigma2(recommended); }
};

GportConstants gport_constants(const Rational& alpha, const Toll& toll, int K,
                               const EnumLimits& limits = {});

}  // namespace incrtree
