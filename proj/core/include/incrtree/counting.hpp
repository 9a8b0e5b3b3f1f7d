#pragma once

#include "incrtree/model.hpp"
#include "incrtree/rational.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// Number of d-ary increasing trees with n vertices: prod_{j<n} ((d-1)j + 1).
BigInt count_dary(int d, unsigned n);

// Number of (canonical) recursive trees with n vertices: (n-1)!.
BigInt count_recursive(unsigned n);

// Total weight of all PORTs of size n under the alpha-weighting:
// prod_{j<n} ((alpha+1)j - 1). For alpha = 1 this is (2n-3)!!.
Rational gport_total_weight(const Rational& alpha, unsigned n);

// w(T) = prod_j binom(alpha+j-1, j)^{N_j(T)} over outdegrees j >= 1.
Rational weight_port(const Rational& alpha, const IncreasingTree& t);

// Exact probability that the model's growth process produces exactly T,
// replaying the insertion history (which the labels determine uniquely).
// Zero for plane trees that a recursive-model history cannot produce.
Rational tree_probability(const ModelParams& model, const IncreasingTree& t);

}  // namespace incrtree
