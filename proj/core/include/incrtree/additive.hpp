#pragma once

#include <optional>
#include <span>
#include <vector>

#include "incrtree/toll.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// F(T) = sum of f over all fringe subtrees; equivalently the additive
// recursion F(T) = sum_j F(B_j) + f(T).
struct FunctionalValue {
  double value = 0;
  std::optional<std::vector<double>> per_vertex;  // toll contribution per vertex
};

// Single post-order pass; per-vertex toll breakdown on request.
FunctionalValue evaluate_additive(const Toll& toll, const IncreasingTree& t,
                                  bool want_per_vertex = false);

// Hot-path variant: reuses `scratch` for the per-node tolls, returns F(T)
// with compensated summation.
double additive_total(const Toll& toll, const IncreasingTree& t,
                      std::vector<double>& scratch);

// F restricted to each fringe subtree: out[v] = F(fringe at v), given the
// per-node tolls. One reverse sweep.
void functional_per_subtree(const IncreasingTree& t,
                            std::span<const double> node_tolls,
                            std::span<double> out);

// Fringe subtree at v as a standalone tree, labels reinterpreted by relative
// order (the canonical 1..k values).
IncreasingTree fringe_subtree(const IncreasingTree& t, int v);

// All |T| fringe subtrees, in root-vertex order.
std::vector<IncreasingTree> fringe_subtrees(const IncreasingTree& t);

}  // namespace incrtree
