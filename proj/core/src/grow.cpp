#include "incrtree/grow.hpp"

namespace incrtree {

void DaryGrower::grow(IncreasingTree& t, int d, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  t.reset_dary(d);
  free_slots_.clear();
  for (int s = 0; s < d; ++s) free_slots_.push_back(s);
  for (int v = 1; v < n; ++v) {
    const std::size_t pick = rng.below(free_slots_.size());
    const std::uint64_t code = free_slots_[pick];
    const int parent = static_cast<int>(code / d);
    const int slot = static_cast<int>(code % d);
    t.attach_dary(parent, slot);
    // swap-pop the used slot, then add the new vertex's d slots
    free_slots_[pick] = free_slots_.back();
    free_slots_.pop_back();
    const std::uint64_t base = static_cast<std::uint64_t>(v) * d;
    for (int s = 0; s < d; ++s) free_slots_.push_back(base + s);
  }
}

void GportGrower::grow(IncreasingTree& t, double alpha, int n, Rng& rng) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  t.reset_plane();
  edge_parents_.clear();
  for (int v = 1; v < n; ++v) {
    const int m = v;  // current size
    int parent;
    if (m == 1) {
      parent = 0;
    } else {
      // P(parent = u) = (alpha + outdeg(u)) / (alpha m + m - 1):
      // with prob alpha*m / (alpha*m + m - 1) a uniform vertex,
      // otherwise the parent endpoint of a uniform edge.
      const double p_uniform = alpha * m / (alpha * m + (m - 1));
      if (rng.unit() < p_uniform)
        parent = static_cast<int>(rng.below(m));
      else
        parent = edge_parents_[rng.below(edge_parents_.size())];
    }
    const int gap = static_cast<int>(rng.below(t.outdeg(parent) + 1));
    t.attach_plane(parent, gap);
    edge_parents_.push_back(parent);
  }
}

void grow_recursive(IncreasingTree& t, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  t.reset_plane();
  for (int v = 1; v < n; ++v)
    t.attach_rightmost(static_cast<int>(rng.below(v)));
}

void grow_model(IncreasingTree& t, const ModelParams& model, int n, Rng& rng) {
  switch (model.variant) {
    case ModelParams::Variant::dary: {
      DaryGrower g;
      g.grow(t, model.d, n, rng);
      return;
    }
    case ModelParams::Variant::gport: {
      GportGrower g;
      g.grow(t, model.alpha_double(), n, rng);
      return;
    }
    case ModelParams::Variant::recursive:
      grow_recursive(t, n, rng);
      return;
  }
}

IncreasingTree grow_dary(int d, int n, Rng& rng) {
  IncreasingTree t;
  DaryGrower g;
  g.grow(t, d, n, rng);
  return t;
}

IncreasingTree grow_gport(double alpha, int n, Rng& rng) {
  IncreasingTree t;
  GportGrower g;
  g.grow(t, alpha, n, rng);
  return t;
}

IncreasingTree grow_recursive(int n, Rng& rng) {
  IncreasingTree t;
  grow_recursive(t, n, rng);
  return t;
}

}  // namespace incrtree
