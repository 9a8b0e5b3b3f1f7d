#include "incrtree/symmetry.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "incrtree/canonical.hpp"

namespace incrtree {

namespace {

std::string shape_key(const IncreasingTree& t, int v,
                      std::vector<std::string>& memo) {
  if (!memo[v].empty()) return memo[v];
  std::vector<std::string> parts;
  for (std::int32_t c : t.children(v)) parts.push_back(shape_key(t, c, memo));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ')';
  memo[v] = out;
  return out;
}

BigInt branch_symmetry_at(const IncreasingTree& t, int v,
                          std::vector<std::string>& memo) {
  std::map<std::string, int> classes;
  for (std::int32_t c : t.children(v)) ++classes[shape_key(t, c, memo)];
  BigInt r = 1;
  for (const auto& [key, mult] : classes) r *= factorial(mult);
  return r;
}

}  // namespace

BigInt branch_symmetry(const IncreasingTree& t) {
  std::vector<std::string> memo(t.size());
  return branch_symmetry_at(t, 0, memo);
}

BigInt automorphism_group_order(const IncreasingTree& t) {
  std::vector<std::string> memo(t.size());
  BigInt order = 1;
  for (int v = 0; v < t.size(); ++v) order *= branch_symmetry_at(t, v, memo);
  return order;
}

int orbit_count(const IncreasingTree& t) {
  const int n = t.size();
  std::vector<std::string> memo(n);
  std::vector<int> orbits(n);
  for (int v = n - 1; v >= 0; --v) {
    std::map<std::string, int> reps;  // shape class -> representative child
    for (std::int32_t c : t.children(v)) reps.emplace(shape_key(t, c, memo), c);
    int total = 1;
    for (const auto& [key, c] : reps) total += orbits[c];
    orbits[v] = total;
  }
  return orbits[0];
}

}  // namespace incrtree
