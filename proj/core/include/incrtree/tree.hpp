#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace incrtree {

enum class TreeKind : std::uint8_t { dary, plane };

// Rooted labeled tree whose labels strictly increase along every root path.
//
// Vertices are stored in label order: vertex v carries label v+1 (or a
// caller-supplied strictly order-isomorphic relabeling), so parent(v) < v
// holds for every non-root vertex and a reverse index sweep visits children
// before parents. Two kinds share the representation:
//   - dary:  every vertex has arity() labeled child slots; children are kept
//            in ascending slot order and two trees differing only in slot
//            assignment are distinct.
//   - plane: children are kept in left-to-right plane order.
class IncreasingTree {
 public:
  IncreasingTree() = default;

  static IncreasingTree dary(int arity);
  static IncreasingTree plane();

  // Re-initializes to a single root, keeping buffer capacity.
  void reset_dary(int arity);
  void reset_plane();

  TreeKind kind() const { return kind_; }
  int arity() const { return arity_; }
  int size() const { return static_cast<int>(parent_.size()); }
  bool empty() const { return parent_.empty(); }

  // Attaches the next vertex (label size()+1); returns its index.
  int attach_dary(int parent, int slot);
  int attach_plane(int parent, int gap);
  int attach_rightmost(int parent);
  // Removes the highest-labeled vertex (always a leaf).
  void pop_last();

  int parent(int v) const { return parent_[v]; }
  int slot(int v) const { return slot_[v]; }
  std::span<const std::int32_t> children(int v) const {
    return children_[v];
  }
  int outdeg(int v) const { return static_cast<int>(children_[v].size()); }
  bool slot_occupied(int v, int s) const;
  // Child of v in slot s, or -1.
  int child_in_slot(int v, int s) const;

  std::uint64_t label(int v) const {
    return custom_labels_.empty() ? static_cast<std::uint64_t>(v) + 1
                                  : custom_labels_[v];
  }
  bool has_custom_labels() const { return !custom_labels_.empty(); }
  // Labels must be strictly increasing in vertex index (order-isomorphic to
  // the canonical 1..n labeling).
  void set_custom_labels(std::vector<std::uint64_t> labels);
  void clear_custom_labels() { custom_labels_.clear(); }

  int subtree_size(int v) const;

  // Checks all structural invariants; throws std::logic_error on violation.
  void validate() const;

  // Structural equality (kind, arity, slots/order, custom labels).
  friend bool operator==(const IncreasingTree& a, const IncreasingTree& b);

 private:
  void check_vertex(int v) const;

  TreeKind kind_ = TreeKind::plane;
  int arity_ = 0;  // 0 for plane trees
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> slot_;
  std::vector<std::vector<std::int32_t>> children_;
  std::vector<std::uint64_t> custom_labels_;
};

// Post-order independent subtree sizes: sizes[v] = |fringe subtree at v|.
// One reverse sweep, O(n).
void subtree_sizes(const IncreasingTree& t, std::span<std::int32_t> sizes);

}  // namespace incrtree
