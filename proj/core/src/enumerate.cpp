#include "incrtree/enumerate.hpp"

#include "incrtree/counting.hpp"

namespace incrtree {

namespace {

void check_budget(const BigInt& predicted, const EnumLimits& limits) {
  if (predicted > limits.max_trees)
    throw resource_error("enumeration of " + predicted.str() +
                         " trees exceeds the configured limit of " +
                         BigInt(limits.max_trees).str());
}

void enumerate_dary_rec(IncreasingTree& t, int n, const TreeVisitor& visit) {
  if (t.size() == n) {
    visit(t);
    return;
  }
  const int m = t.size();
  for (int v = 0; v < m; ++v) {
    if (t.outdeg(v) == t.arity()) continue;
    for (int s = 0; s < t.arity(); ++s) {
      if (t.slot_occupied(v, s)) continue;
      t.attach_dary(v, s);
      enumerate_dary_rec(t, n, visit);
      t.pop_last();
    }
  }
}

void enumerate_plane_rec(IncreasingTree& t, int n, const TreeVisitor& visit) {
  if (t.size() == n) {
    visit(t);
    return;
  }
  const int m = t.size();
  for (int v = 0; v < m; ++v) {
    for (int gap = 0; gap <= t.outdeg(v); ++gap) {
      t.attach_plane(v, gap);
      enumerate_plane_rec(t, n, visit);
      t.pop_last();
    }
  }
}

void enumerate_recursive_rec(IncreasingTree& t, int n,
                             const TreeVisitor& visit) {
  if (t.size() == n) {
    visit(t);
    return;
  }
  const int m = t.size();
  for (int v = 0; v < m; ++v) {
    t.attach_rightmost(v);
    enumerate_recursive_rec(t, n, visit);
    t.pop_last();
  }
}

}  // namespace

void enumerate_dary(int d, int n, const TreeVisitor& visit,
                    const EnumLimits& limits) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  check_budget(count_dary(d, n), limits);
  IncreasingTree t = IncreasingTree::dary(d);
  enumerate_dary_rec(t, n, visit);
}

void enumerate_plane(int n, const TreeVisitor& visit,
                     const EnumLimits& limits) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  check_budget(numerator(gport_total_weight(1, n)), limits);
  IncreasingTree t = IncreasingTree::plane();
  enumerate_plane_rec(t, n, visit);
}

void enumerate_recursive(int n, const TreeVisitor& visit,
                         const EnumLimits& limits) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  check_budget(count_recursive(n), limits);
  IncreasingTree t = IncreasingTree::plane();
  enumerate_recursive_rec(t, n, visit);
}

void enumerate_model(const ModelParams& model, int n, const TreeVisitor& visit,
                     const EnumLimits& limits) {
  switch (model.variant) {
    case ModelParams::Variant::dary:
      return enumerate_dary(model.d, n, visit, limits);
    case ModelParams::Variant::gport:
      return enumerate_plane(n, visit, limits);
    case ModelParams::Variant::recursive:
      return enumerate_recursive(n, visit, limits);
  }
}

BigInt enumeration_count(const ModelParams& model, unsigned n) {
  switch (model.variant) {
    case ModelParams::Variant::dary:
      return count_dary(model.d, n);
    case ModelParams::Variant::gport:
      return numerator(gport_total_weight(1, n));
    case ModelParams::Variant::recursive:
      return count_recursive(n);
  }
  throw std::logic_error("unreachable");
}

std::vector<IncreasingTree> enumerate_dary_all(int d, int n,
                                               const EnumLimits& limits) {
  std::vector<IncreasingTree> out;
  enumerate_dary(d, n, [&](const IncreasingTree& t) { out.push_back(t); },
                 limits);
  return out;
}

std::vector<IncreasingTree> enumerate_plane_all(int n,
                                                const EnumLimits& limits) {
  std::vector<IncreasingTree> out;
  enumerate_plane(n, [&](const IncreasingTree& t) { out.push_back(t); },
                  limits);
  return out;
}

}  // namespace incrtree
