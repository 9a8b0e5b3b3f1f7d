#pragma once

#include <cstdint>
#include <vector>

#include "incrtree/model.hpp"
#include "incrtree/rng.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// Uniform d-ary increasing tree of size n: each step attaches the next
// vertex to a free slot chosen uniformly among the (d-1)(m-1)+1 available.
// Reusable grower; O(1) amortized per step via a flat free-slot array.
class DaryGrower {
 public:
  void grow(IncreasingTree& t, int d, int n, Rng& rng);

 private:
  std::vector<std::uint64_t> free_slots_;  // parent * d + slot
};

// GPORT(alpha): the parent of the next vertex is chosen with probability
// proportional to alpha + outdegree, realized as a two-urn mixture (uniform
// vertex vs. uniform edge-parent); the plane position is uniform among the
// outdeg+1 gaps. alpha = 1 gives uniform PORTs.
class GportGrower {
 public:
  void grow(IncreasingTree& t, double alpha, int n, Rng& rng);

 private:
  std::vector<std::int32_t> edge_parents_;
};

// Uniform recursive tree in its canonical plane embedding (new vertex becomes
// the rightmost child of a uniformly chosen parent).
void grow_recursive(IncreasingTree& t, int n, Rng& rng);

void grow_model(IncreasingTree& t, const ModelParams& model, int n, Rng& rng);

// One-shot conveniences.
IncreasingTree grow_dary(int d, int n, Rng& rng);
IncreasingTree grow_gport(double alpha, int n, Rng& rng);
IncreasingTree grow_recursive(int n, Rng& rng);

}  // namespace incrtree
