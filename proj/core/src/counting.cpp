#include "incrtree/counting.hpp"

#include <map>

namespace incrtree {

BigInt count_dary(int d, unsigned n) {
  if (d < 2) throw std::invalid_argument("count_dary requires d >= 2");
  if (n == 0) throw std::invalid_argument("count_dary requires n >= 1");
  BigInt r = 1;
  for (unsigned j = 1; j < n; ++j) r *= BigInt(d - 1) * j + 1;
  return r;
}

BigInt count_recursive(unsigned n) {
  if (n == 0) throw std::invalid_argument("count_recursive requires n >= 1");
  return factorial(n - 1);
}

Rational gport_total_weight(const Rational& alpha, unsigned n) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  Rational r = 1;
  for (unsigned j = 1; j < n; ++j) r *= (alpha + 1) * static_cast<int>(j) - 1;
  return r;
}

Rational weight_port(const Rational& alpha, const IncreasingTree& t) {
  if (t.kind() != TreeKind::plane)
    throw std::invalid_argument("weight_port expects a plane tree");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  // group by outdegree so each binomial is computed once
  std::map<int, int> outdeg_counts;
  for (int v = 0; v < t.size(); ++v)
    if (t.outdeg(v) > 0) ++outdeg_counts[t.outdeg(v)];
  Rational w = 1;
  for (const auto& [j, count] : outdeg_counts) {
    const Rational b = binomial_rational(alpha + j - 1, j);
    for (int i = 0; i < count; ++i) w *= b;
  }
  return w;
}

Rational tree_probability(const ModelParams& model, const IncreasingTree& t) {
  const int n = t.size();
  switch (model.variant) {
    case ModelParams::Variant::dary: {
      if (t.kind() != TreeKind::dary || t.arity() != model.d)
        throw std::invalid_argument("tree kind/arity does not match model");
      // every step is uniform over the free slots, so P = 1 / count
      return Rational(1) / Rational(count_dary(model.d, n));
    }
    case ModelParams::Variant::recursive: {
      if (t.kind() != TreeKind::plane)
        throw std::invalid_argument("recursive model expects a plane tree");
      // the canonical embedding keeps children in insertion order
      for (int v = 0; v < n; ++v) {
        const auto kids = t.children(v);
        for (std::size_t i = 1; i < kids.size(); ++i)
          if (kids[i] < kids[i - 1]) return 0;
      }
      return Rational(1) / Rational(count_recursive(n));
    }
    case ModelParams::Variant::gport: {
      if (t.kind() != TreeKind::plane)
        throw std::invalid_argument("gport model expects a plane tree");
      const Rational& alpha = model.alpha;
      Rational p = 1;
      for (int v = 1; v < n; ++v) {
        const int parent = t.parent(v);
        int prior_children = 0;  // children of parent older than v
        for (std::int32_t c : t.children(parent))
          if (c < v) ++prior_children;
        const int k = v + 1;  // insertion step
        // parent choice proportional to alpha + outdegree; the plane
        // position among the prior_children+1 gaps is uniform
        const Rational denom = alpha * (k - 1) + (k - 2);
        p *= (alpha + prior_children) / denom;
        p /= prior_children + 1;
      }
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace incrtree
