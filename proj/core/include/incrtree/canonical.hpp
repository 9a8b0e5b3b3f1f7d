#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "incrtree/tree.hpp"

namespace incrtree {

enum class Equivalence { labeled, shape };

// Canonical byte serialization under an equivalence:
//   labeled -- the exact tree: kind, slots/plane order and the relative order
//              of the labels (labels are first normalized to 1..n by rank).
//   shape   -- unlabeled and slot/order-insensitive: a vertex is "(" followed
//              by its children's forms sorted lexicographically, then ")".
// Equal bytes iff equivalent.
struct CanonicalForm {
  std::string bytes;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const IncreasingTree& t, Equivalence eq);

// Rebuilds a tree whose canonical form equals `form`. Shape forms come back
// as plane trees labeled in depth-first preorder.
IncreasingTree from_canonical(const CanonicalForm& form, Equivalence eq);

// 128-bit order-insensitive shape fingerprint. Collisions are possible in
// principle but need ~2^64 distinct shapes; exhaustive cross-checks against
// canonical bytes cover the enumeration range.
struct ShapeFp {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(const ShapeFp&, const ShapeFp&) = default;
  friend auto operator<=>(const ShapeFp&, const ShapeFp&) = default;
};

// Per-vertex shape fingerprints of every fringe subtree, one reverse sweep.
// scratch is resized internally; out must have t.size() entries.
void shape_fingerprints(const IncreasingTree& t, std::span<ShapeFp> out);

ShapeFp shape_fingerprint(const IncreasingTree& t);

}  // namespace incrtree
