#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "incrtree/tree.hpp"

namespace incrtree {

// One-line textual tree formats (UTF-8, one tree per line, bit-exact):
//
//   d-ary:  label "[" entry "," ... "]" with exactly arity() entries, where
//           entry i is "s<i>:" followed by the child subtree occupying slot
//           i, or "_" if the slot is free.  Example: 1[s0:2[_,_],_]
//   plane:  label, followed by "(" child child ... ")" when the vertex has
//           children (space separated, plane order).  Example: 1(2(4) 3)
//
// Labels are the canonical 1..n values; parse_tree rejects anything else.
std::string to_text(const IncreasingTree& t);

// Inverse of to_text. The kind is detected from the first bracket; for d-ary
// input the arity is the entry count of the root's bracket (validated to be
// consistent across all vertices).
IncreasingTree parse_tree(std::string_view text);

std::ostream& write_tree_line(std::ostream& os, const IncreasingTree& t);

}  // namespace incrtree
