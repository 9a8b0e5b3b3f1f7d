#include "incrtree/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "incrtree/textform.hpp"

namespace incrtree {

namespace {

std::string shape_bytes(const IncreasingTree& t, int v) {
  std::vector<std::string> parts;
  parts.reserve(t.children(v).size());
  for (std::int32_t c : t.children(v)) parts.push_back(shape_bytes(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ')';
  return out;
}

// wyhash-style mixer
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  a ^= 0x2545f4914f6cdd1dULL;
  b ^= 0x9e3779b97f4a7c15ULL;
  __uint128_t m = static_cast<__uint128_t>(a) * (b | 1);
  return static_cast<std::uint64_t>(m) ^ static_cast<std::uint64_t>(m >> 64);
}

}  // namespace

CanonicalForm canonical_form(const IncreasingTree& t, Equivalence eq) {
  if (eq == Equivalence::shape) return {shape_bytes(t, 0)};
  if (!t.has_custom_labels()) return {to_text(t)};
  // normalize labels to ranks 1..n; vertex order already is rank order
  IncreasingTree copy = t;
  copy.clear_custom_labels();
  return {to_text(copy)};
}

IncreasingTree from_canonical(const CanonicalForm& form, Equivalence eq) {
  if (eq == Equivalence::labeled) return parse_tree(form.bytes);
  // shape: nested parentheses, preorder labels
  IncreasingTree t = IncreasingTree::plane();
  std::vector<int> stack{0};
  const std::string& s = form.bytes;
  if (s.empty() || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("malformed shape form");
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') {
      stack.push_back(t.attach_rightmost(stack.back()));
    } else if (s[i] == ')') {
      if (stack.size() <= 1)
        throw std::invalid_argument("malformed shape form");
      stack.pop_back();
    } else {
      throw std::invalid_argument("malformed shape form");
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("malformed shape form");
  return t;
}

void shape_fingerprints(const IncreasingTree& t, std::span<ShapeFp> out) {
  const int n = t.size();
  std::vector<ShapeFp> kids;
  for (int v = n - 1; v >= 0; --v) {
    kids.clear();
    for (std::int32_t c : t.children(v)) kids.push_back(out[c]);
    std::sort(kids.begin(), kids.end());
    std::uint64_t hi = 0x243f6a8885a308d3ULL;  // leaf constants
    std::uint64_t lo = 0x13198a2e03707344ULL;
    for (const ShapeFp& k : kids) {
      hi = mix64(hi, k.hi);
      lo = mix64(lo ^ k.lo, k.hi + 0xa4093822299f31d0ULL);
    }
    out[v] = {mix64(hi, lo ^ static_cast<std::uint64_t>(kids.size())),
              mix64(lo, hi ^ 0x082efa98ec4e6c89ULL)};
  }
}

ShapeFp shape_fingerprint(const IncreasingTree& t) {
  std::vector<ShapeFp> fps(t.size());
  shape_fingerprints(t, fps);
  return fps[0];
}

}  // namespace incrtree
