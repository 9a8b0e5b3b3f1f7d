#include "incrtree/tree.hpp"

#include <algorithm>
#include <string>

namespace incrtree {

IncreasingTree IncreasingTree::dary(int arity) {
  IncreasingTree t;
  t.reset_dary(arity);
  return t;
}

IncreasingTree IncreasingTree::plane() {
  IncreasingTree t;
  t.reset_plane();
  return t;
}

void IncreasingTree::reset_dary(int arity) {
  if (arity < 2) throw std::invalid_argument("d-ary tree requires arity >= 2");
  kind_ = TreeKind::dary;
  arity_ = arity;
  parent_.assign(1, -1);
  slot_.assign(1, -1);
  if (children_.empty()) children_.resize(1);
  children_[0].clear();
  custom_labels_.clear();
}

void IncreasingTree::reset_plane() {
  kind_ = TreeKind::plane;
  arity_ = 0;
  parent_.assign(1, -1);
  slot_.assign(1, -1);
  if (children_.empty()) children_.resize(1);
  children_[0].clear();
  custom_labels_.clear();
}

void IncreasingTree::check_vertex(int v) const {
  if (v < 0 || v >= size())
    throw std::invalid_argument("vertex index out of range: " +
                                std::to_string(v));
}

bool IncreasingTree::slot_occupied(int v, int s) const {
  return child_in_slot(v, s) >= 0;
}

int IncreasingTree::child_in_slot(int v, int s) const {
  check_vertex(v);
  for (std::int32_t c : children_[v])
    if (slot_[c] == s) return c;
  return -1;
}

int IncreasingTree::attach_dary(int parent, int slot) {
  if (kind_ != TreeKind::dary)
    throw std::logic_error("attach_dary on a plane tree");
  if (!custom_labels_.empty())
    throw std::logic_error("cannot grow a tree with custom labels");
  check_vertex(parent);
  if (slot < 0 || slot >= arity_)
    throw std::invalid_argument("slot out of range");
  if (slot_occupied(parent, slot))
    throw std::invalid_argument("slot already occupied");
  const int v = size();
  parent_.push_back(parent);
  slot_.push_back(slot);
  if (static_cast<int>(children_.size()) <= v) children_.emplace_back();
  children_[v].clear();
  auto& sibs = children_[parent];
  auto pos = std::find_if(sibs.begin(), sibs.end(),
                          [&](std::int32_t c) { return slot_[c] > slot; });
  sibs.insert(pos, v);
  return v;
}

int IncreasingTree::attach_plane(int parent, int gap) {
  if (kind_ != TreeKind::plane)
    throw std::logic_error("attach_plane on a d-ary tree");
  if (!custom_labels_.empty())
    throw std::logic_error("cannot grow a tree with custom labels");
  check_vertex(parent);
  if (gap < 0 || gap > static_cast<int>(children_[parent].size()))
    throw std::invalid_argument("gap out of range");
  const int v = size();
  parent_.push_back(parent);
  slot_.push_back(-1);
  // emplace first: growing children_ may reallocate
  if (static_cast<int>(children_.size()) <= v) children_.emplace_back();
  children_[v].clear();
  auto& sibs = children_[parent];
  sibs.insert(sibs.begin() + gap, v);
  return v;
}

int IncreasingTree::attach_rightmost(int parent) {
  if (kind_ == TreeKind::plane)
    return attach_plane(parent, outdeg(parent));
  throw std::logic_error("attach_rightmost is a plane-tree operation");
}

void IncreasingTree::pop_last() {
  const int v = size() - 1;
  if (v <= 0) throw std::logic_error("cannot remove the root");
  if (!children_[v].empty())
    throw std::logic_error("highest-labeled vertex must be a leaf");
  auto& sibs = children_[parent_[v]];
  sibs.erase(std::find(sibs.begin(), sibs.end(), v));
  parent_.pop_back();
  slot_.pop_back();
  children_[v].clear();
}

void IncreasingTree::set_custom_labels(std::vector<std::uint64_t> labels) {
  if (static_cast<int>(labels.size()) != size())
    throw std::invalid_argument("label count mismatch");
  for (int v = 1; v < size(); ++v)
    if (labels[v] <= labels[v - 1])
      throw std::invalid_argument(
          "custom labels must be strictly increasing in vertex index");
  custom_labels_ = std::move(labels);
}

int IncreasingTree::subtree_size(int v) const {
  check_vertex(v);
  int total = 1;
  for (std::int32_t c : children_[v]) total += subtree_size(c);
  return total;
}

void IncreasingTree::validate() const {
  if (empty()) throw std::logic_error("empty tree");
  if (parent_[0] != -1) throw std::logic_error("root must have no parent");
  for (int v = 1; v < size(); ++v) {
    // labels increase along root paths <=> every parent index is smaller
    if (parent_[v] < 0 || parent_[v] >= v)
      throw std::logic_error("parent label must precede child label");
    if (kind_ == TreeKind::dary && (slot_[v] < 0 || slot_[v] >= arity_))
      throw std::logic_error("slot out of range");
  }
  std::vector<int> seen(size(), 0);
  for (int v = 0; v < size(); ++v) {
    int prev_slot = -1;
    if (kind_ == TreeKind::dary &&
        static_cast<int>(children_[v].size()) > arity_)
      throw std::logic_error("outdegree exceeds arity");
    for (std::int32_t c : children_[v]) {
      if (parent_[c] != v) throw std::logic_error("child/parent mismatch");
      if (kind_ == TreeKind::dary) {
        if (slot_[c] <= prev_slot)
          throw std::logic_error("children must occupy distinct ascending slots");
        prev_slot = slot_[c];
      }
      ++seen[c];
    }
  }
  for (int v = 1; v < size(); ++v)
    if (seen[v] != 1) throw std::logic_error("broken adjacency");
  if (!custom_labels_.empty() &&
      static_cast<int>(custom_labels_.size()) != size())
    throw std::logic_error("label count mismatch");
}

bool operator==(const IncreasingTree& a, const IncreasingTree& b) {
  if (a.kind_ != b.kind_ || a.arity_ != b.arity_ || a.parent_ != b.parent_ ||
      a.slot_ != b.slot_ || a.custom_labels_ != b.custom_labels_)
    return false;
  // plane order is carried by the children lists
  for (int v = 0; v < a.size(); ++v)
    if (a.children_[v] != b.children_[v]) return false;
  return true;
}

void subtree_sizes(const IncreasingTree& t, std::span<std::int32_t> sizes) {
  const int n = t.size();
  for (int v = n - 1; v >= 0; --v) {
    std::int32_t s = 1;
    for (std::int32_t c : t.children(v)) s += sizes[c];
    sizes[v] = s;
  }
}

}  // namespace incrtree
