#include <algorithm>
#include <cmath>
#include <utility>

#include "incrtree/additive.hpp"
#include "incrtree/canonical.hpp"
#include "incrtree/textform.hpp"
#include "incrtree/toll.hpp"

namespace incrtree {

namespace {

thread_local std::vector<std::int32_t> tl_sizes;
thread_local std::vector<ShapeFp> tl_fps;
thread_local std::vector<std::int32_t> tl_ints;

double log_factorial(int m) {
  static const auto table = [] {
    std::array<double, 65> t{};
    double acc = 0;
    for (int i = 1; i <= 64; ++i) {
      acc += std::log(static_cast<double>(i));
      t[i] = acc;
    }
    return t;
  }();
  if (m <= 64) return table[m];
  return std::lgamma(static_cast<double>(m) + 1);
}

class LeafToll final : public Toll {
 public:
  LeafToll()
      : Toll({.name = "leaf",
              .params = {},
              .bounded = true,
              .bound = 1.0,
              .size_only = true,
              .support_cutoff = 1}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    for (int v = 0; v < t.size(); ++v) out[v] = t.outdeg(v) == 0 ? 1.0 : 0.0;
  }
  double eval(const IncreasingTree& t) const override {
    return t.size() == 1 ? 1.0 : 0.0;
  }
};

class OutdegreeToll final : public Toll {
 public:
  explicit OutdegreeToll(int k)
      : Toll({.name = "outdegree",
              .params = {{"k", std::to_string(k)}},
              .bounded = true,
              .bound = 1.0,
              .size_only = k == 0,
              .support_cutoff = std::nullopt}),
        k_(k) {
    if (k < 0) throw std::invalid_argument("outdegree toll requires k >= 0");
  }
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    for (int v = 0; v < t.size(); ++v) out[v] = t.outdeg(v) == k_ ? 1.0 : 0.0;
  }
  double eval(const IncreasingTree& t) const override {
    return t.outdeg(0) == k_ ? 1.0 : 0.0;
  }

 private:
  int k_;
};

class PathLengthToll final : public Toll {
 public:
  PathLengthToll()
      : Toll({.name = "path-length",
              .params = {},
              .bounded = false,
              .bound = std::nullopt,
              .size_only = true,
              .support_cutoff = std::nullopt}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    tl_sizes.resize(t.size());
    subtree_sizes(t, tl_sizes);
    for (int v = 0; v < t.size(); ++v) out[v] = tl_sizes[v] - 1;
  }
  double eval(const IncreasingTree& t) const override { return t.size() - 1; }
};

class ShapeToll final : public Toll {
 public:
  ShapeToll()
      : Toll({.name = "shape",
              .params = {},
              .bounded = false,
              .bound = std::nullopt,
              .size_only = true,
              .support_cutoff = std::nullopt}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    tl_sizes.resize(t.size());
    subtree_sizes(t, tl_sizes);
    for (int v = 0; v < t.size(); ++v)
      out[v] = std::log(static_cast<double>(tl_sizes[v]));
  }
  double eval(const IncreasingTree& t) const override {
    return std::log(static_cast<double>(t.size()));
  }
};

class FringeSizeToll final : public Toll {
 public:
  explicit FringeSizeToll(int k)
      : Toll({.name = "fringe-size",
              .params = {{"k", std::to_string(k)}},
              .bounded = true,
              .bound = 1.0,
              .size_only = true,
              .support_cutoff = k}),
        k_(k) {
    if (k < 1) throw std::invalid_argument("fringe-size toll requires k >= 1");
  }
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    tl_sizes.resize(t.size());
    subtree_sizes(t, tl_sizes);
    for (int v = 0; v < t.size(); ++v) out[v] = tl_sizes[v] == k_ ? 1.0 : 0.0;
  }
  double eval(const IncreasingTree& t) const override {
    return t.size() == k_ ? 1.0 : 0.0;
  }

 private:
  int k_;
};

class FringeOccurrenceToll final : public Toll {
 public:
  explicit FringeOccurrenceToll(IncreasingTree reference)
      : Toll({.name = "fringe-occurrence",
              .params = {{"tree", to_text(reference)}},
              .bounded = true,
              .bound = 1.0,
              .size_only = reference.size() == 1,
              .support_cutoff = reference.size()}),
        ref_(std::move(reference)) {
    ref_.validate();
  }
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    tl_sizes.resize(t.size());
    subtree_sizes(t, tl_sizes);
    const bool kind_ok =
        t.kind() == ref_.kind() &&
        (t.kind() != TreeKind::dary || t.arity() == ref_.arity());
    for (int v = 0; v < t.size(); ++v) {
      out[v] = 0.0;
      if (kind_ok && tl_sizes[v] == ref_.size())
        out[v] = fringe_subtree(t, v) == ref_ ? 1.0 : 0.0;
    }
  }

 private:
  IncreasingTree ref_;
};

class LogRootSubtreesToll final : public Toll {
 public:
  LogRootSubtreesToll()
      : Toll({.name = "log-root-subtrees",
              .params = {},
              .bounded = true,
              .bound = std::log(2.0),
              .size_only = false,
              .support_cutoff = std::nullopt}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    const int n = t.size();
    tl_sizes.resize(n);
    subtree_sizes(t, tl_sizes);
    // log1p_s[v] = log(1 + s(fringe at v)); exact uint64 s while the
    // subtree has <= 64 vertices (star worst case s = 2^63), log-space above
    thread_local std::vector<double> log1p_s;
    thread_local std::vector<std::uint64_t> s_exact;
    log1p_s.resize(n);
    s_exact.resize(n);
    for (int v = n - 1; v >= 0; --v) {
      if (tl_sizes[v] <= 64) {
        std::uint64_t s = 1;
        for (std::int32_t c : t.children(v)) s *= s_exact[c] + 1;
        s_exact[v] = s;
        out[v] = std::log1p(1.0 / static_cast<double>(s));
        log1p_s[v] = std::log1p(static_cast<double>(s));
      } else {
        double log_s = 0;
        for (std::int32_t c : t.children(v)) log_s += log1p_s[c];
        const double f = std::log1p(std::exp(-log_s));
        out[v] = f;
        log1p_s[v] = log_s + f;
      }
    }
  }
};

class LogBranchSymmetryToll final : public Toll {
 public:
  // log R <= log(arity!) on d-ary trees; there is no uniform bound over
  // plane trees, so no numeric bound is declared.
  LogBranchSymmetryToll()
      : Toll({.name = "log-branch-symmetry",
              .params = {},
              .bounded = true,
              .bound = std::nullopt,
              .size_only = false,
              .support_cutoff = std::nullopt}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    const int n = t.size();
    tl_fps.resize(n);
    shape_fingerprints(t, tl_fps);
    thread_local std::vector<ShapeFp> kids;
    for (int v = 0; v < n; ++v) {
      const auto children = t.children(v);
      if (children.size() < 2) {
        out[v] = 0.0;
        continue;
      }
      kids.clear();
      for (std::int32_t c : children) kids.push_back(tl_fps[c]);
      std::sort(kids.begin(), kids.end());
      double f = 0;
      std::size_t run = 1;
      for (std::size_t i = 1; i <= kids.size(); ++i) {
        if (i < kids.size() && kids[i] == kids[i - 1]) {
          ++run;
        } else {
          if (run > 1) f += log_factorial(static_cast<int>(run));
          run = 1;
        }
      }
      out[v] = f;
    }
  }
};

class OrbitsToll final : public Toll {
 public:
  OrbitsToll()
      : Toll({.name = "orbits",
              .params = {},
              .bounded = false,
              .bound = std::nullopt,
              .size_only = false,
              .support_cutoff = std::nullopt}) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    const int n = t.size();
    tl_fps.resize(n);
    shape_fingerprints(t, tl_fps);
    tl_ints.resize(n);  // orbit counts
    thread_local std::vector<std::pair<ShapeFp, std::int32_t>> kids;
    for (int v = n - 1; v >= 0; --v) {
      kids.clear();
      std::int64_t all = 0;
      for (std::int32_t c : t.children(v)) {
        kids.emplace_back(tl_fps[c], tl_ints[c]);
        all += tl_ints[c];
      }
      std::sort(kids.begin(), kids.end());
      std::int64_t distinct = 0;
      for (std::size_t i = 0; i < kids.size(); ++i)
        if (i == 0 || !(kids[i].first == kids[i - 1].first))
          distinct += kids[i].second;
      tl_ints[v] = static_cast<std::int32_t>(1 + distinct);
      out[v] = static_cast<double>(1 + distinct - all);
    }
  }
};

class ConstantToll final : public Toll {
 public:
  explicit ConstantToll(double c)
      : Toll({.name = "constant",
              .params = {{"c", std::to_string(c)}},
              .bounded = true,
              .bound = std::abs(c),
              .size_only = true,
              .support_cutoff = std::nullopt}),
        c_(c) {}
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    std::fill(out.begin(), out.begin() + t.size(), c_);
  }
  double eval(const IncreasingTree&) const override { return c_; }

 private:
  double c_;
};

class CustomToll final : public Toll {
 public:
  CustomToll(std::string name,
             std::function<double(const IncreasingTree&)> evaluator,
             TollMeta meta)
      : Toll(std::move(meta)), fn_(std::move(evaluator)) {
    meta_.name = std::move(name);
  }
  void eval_nodes(const IncreasingTree& t, std::span<double> out) const override {
    for (int v = 0; v < t.size(); ++v) out[v] = call(fringe_subtree(t, v), t.label(v));
  }
  double eval(const IncreasingTree& t) const override {
    return call(t, t.label(0));
  }

 private:
  double call(const IncreasingTree& t, std::uint64_t at_label) const {
    try {
      return fn_(t);
    } catch (const toll_error&) {
      throw;
    } catch (const std::exception& e) {
      throw toll_error(std::string("custom toll failed: ") + e.what(),
                       at_label);
    }
  }
  std::function<double(const IncreasingTree&)> fn_;
};

}  // namespace

TollPtr make_leaf_toll() { return std::make_shared<LeafToll>(); }
TollPtr make_outdegree_toll(int k) { return std::make_shared<OutdegreeToll>(k); }
TollPtr make_path_length_toll() { return std::make_shared<PathLengthToll>(); }
TollPtr make_shape_toll() { return std::make_shared<ShapeToll>(); }
TollPtr make_fringe_size_toll(int k) {
  return std::make_shared<FringeSizeToll>(k);
}
TollPtr make_fringe_occurrence_toll(IncreasingTree reference) {
  return std::make_shared<FringeOccurrenceToll>(std::move(reference));
}
TollPtr make_log_root_subtrees_toll() {
  return std::make_shared<LogRootSubtreesToll>();
}
TollPtr make_log_branch_symmetry_toll() {
  return std::make_shared<LogBranchSymmetryToll>();
}
TollPtr make_orbits_toll() { return std::make_shared<OrbitsToll>(); }
TollPtr make_constant_toll(double c) {
  return std::make_shared<ConstantToll>(c);
}
TollPtr make_custom_toll(std::string name,
                         std::function<double(const IncreasingTree&)> evaluator,
                         TollMeta meta) {
  return std::make_shared<CustomToll>(std::move(name), std::move(evaluator),
                                      std::move(meta));
}

}  // namespace incrtree
