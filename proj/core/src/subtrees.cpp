#include "incrtree/subtrees.hpp"

#include <cmath>
#include <vector>

namespace incrtree {

namespace {

// Subtree size up to which s(T) fits comfortably in uint64 (worst case is
// the star: s = 2^(n-1), so 64 vertices -> s <= 2^63).
constexpr int kExactSizeLimit = 64;

}  // namespace

BigInt subtree_count_root(const IncreasingTree& t) {
  const int n = t.size();
  std::vector<BigInt> s(n);
  for (int v = n - 1; v >= 0; --v) {
    BigInt prod = 1;
    for (std::int32_t c : t.children(v)) prod *= s[c] + 1;
    s[v] = std::move(prod);
  }
  return s[0];
}

double log_subtree_toll(const IncreasingTree& t) {
  const int n = t.size();
  std::vector<std::int32_t> sizes(n);
  subtree_sizes(t, sizes);
  // log1p_s[v] = log(1 + s(fringe at v)); exact s while it fits
  std::vector<double> log1p_s(n);
  std::vector<std::uint64_t> s_exact(n, 0);
  double root_toll = 0;
  for (int v = n - 1; v >= 0; --v) {
    if (sizes[v] <= kExactSizeLimit) {
      std::uint64_t s = 1;
      for (std::int32_t c : t.children(v)) s *= s_exact[c] + 1;
      s_exact[v] = s;
      log1p_s[v] = std::log1p(static_cast<double>(s));
      if (v == 0) root_toll = std::log1p(1.0 / static_cast<double>(s));
    } else {
      double log_s = 0;
      for (std::int32_t c : t.children(v)) log_s += log1p_s[c];
      const double f = std::log1p(std::exp(-log_s));
      log1p_s[v] = log_s + f;
      if (v == 0) root_toll = f;
    }
  }
  return root_toll;
}

}  // namespace incrtree
