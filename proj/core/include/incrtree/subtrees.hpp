#pragma once

#include "incrtree/rational.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// Number of subtrees containing the root: s(T) = prod_j (1 + s(B_j)).
// Exact; s(T) >= |T| always.
BigInt subtree_count_root(const IncreasingTree& t);

// Toll of the log-subtree-count functional: f(T) = log(1 + 1/s(T)).
// Exact s below an internal size threshold, a log-space recursion above it;
// value lies in (0, log(1 + 1/|T|)].
double log_subtree_toll(const IncreasingTree& t);

}  // namespace incrtree
