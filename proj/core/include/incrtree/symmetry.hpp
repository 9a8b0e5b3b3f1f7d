#pragma once

#include "incrtree/rational.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// R(T): order of the symmetry group of the collection of root branches,
// i.e. prod over shape classes c of (multiplicity of c)!. Branch isomorphism
// is shape equivalence (unlabeled, slot/order-insensitive).
BigInt branch_symmetry(const IncreasingTree& t);

// Order of the shape automorphism group: prod over vertices of R(fringe(v)).
BigInt automorphism_group_order(const IncreasingTree& t);

// Number of vertex orbits under shape automorphisms:
// orbits(T) = 1 + sum over distinct branch shape classes of orbits(rep).
int orbit_count(const IncreasingTree& t);

}  // namespace incrtree
