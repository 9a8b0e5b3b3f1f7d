#include "incrtree/additive.hpp"

#include <algorithm>

#include "incrtree/summation.hpp"

namespace incrtree {

FunctionalValue evaluate_additive(const Toll& toll, const IncreasingTree& t,
                                  bool want_per_vertex) {
  std::vector<double> tolls(t.size());
  toll.eval_nodes(t, tolls);
  NeumaierSum sum;
  for (double x : tolls) sum.add(x);
  FunctionalValue out;
  out.value = sum.value();
  if (want_per_vertex) out.per_vertex = std::move(tolls);
  return out;
}

double additive_total(const Toll& toll, const IncreasingTree& t,
                      std::vector<double>& scratch) {
  scratch.resize(t.size());
  toll.eval_nodes(t, scratch);
  NeumaierSum sum;
  for (double x : scratch) sum.add(x);
  return sum.value();
}

void functional_per_subtree(const IncreasingTree& t,
                            std::span<const double> node_tolls,
                            std::span<double> out) {
  for (int v = t.size() - 1; v >= 0; --v) {
    double f = node_tolls[v];
    for (std::int32_t c : t.children(v)) f += out[c];
    out[v] = f;
  }
}

IncreasingTree fringe_subtree(const IncreasingTree& t, int v) {
  // descendants of v in index order == relative label order
  std::vector<int> verts{v};
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (std::int32_t c : t.children(u)) {
      verts.push_back(c);
      stack.push_back(c);
    }
  }
  std::sort(verts.begin(), verts.end());
  std::vector<int> rank(t.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) rank[verts[i]] = static_cast<int>(i);

  IncreasingTree out = t.kind() == TreeKind::dary
                           ? IncreasingTree::dary(t.arity())
                           : IncreasingTree::plane();
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const int u = verts[i];
    const int p = rank[t.parent(u)];
    if (t.kind() == TreeKind::dary) {
      out.attach_dary(p, t.slot(u));
    } else {
      int gap = 0;
      for (std::int32_t c : t.children(t.parent(u))) {
        if (c == u) break;
        if (c < u) ++gap;
      }
      out.attach_plane(p, gap);
    }
  }
  return out;
}

std::vector<IncreasingTree> fringe_subtrees(const IncreasingTree& t) {
  std::vector<IncreasingTree> out;
  out.reserve(t.size());
  for (int v = 0; v < t.size(); ++v) out.push_back(fringe_subtree(t, v));
  return out;
}

}  // namespace incrtree
