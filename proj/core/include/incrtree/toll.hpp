#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incrtree/tree.hpp"

namespace incrtree {

// Declared toll properties. `bounded`/`size_only`/`support_cutoff` feed the
// limit-constant routines (tail bounds, series shortcuts, condition checks);
// audit_toll_metadata cross-checks them against the evaluator by brute force.
struct TollMeta {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool bounded = false;
  std::optional<double> bound;        // sup |f| when known
  bool size_only = false;             // f(T) depends only on |T|
  std::optional<int> support_cutoff;  // f(T) == 0 whenever |T| > cutoff

  std::string display_name() const;
};

// Raised when a toll evaluator fails; identifies the offending vertex.
class toll_error : public std::runtime_error {
 public:
  toll_error(const std::string& what, std::uint64_t vertex_label)
      : std::runtime_error(what + " (at vertex " +
                           std::to_string(vertex_label) + ")"),
        vertex_label_(vertex_label) {}
  std::uint64_t vertex_label() const { return vertex_label_; }

 private:
  std::uint64_t vertex_label_;
};

// A toll function f: tree -> real, evaluated per fringe subtree. Evaluators
// depend only on the structure and the relative order of labels, never on
// label values; they must be pure and shareable across threads.
class Toll {
 public:
  virtual ~Toll() = default;

  const TollMeta& meta() const { return meta_; }

  // out[v] = f(fringe subtree rooted at v) for every vertex; out.size()
  // must equal t.size(). Built-ins run in (near-)linear time.
  virtual void eval_nodes(const IncreasingTree& t,
                          std::span<double> out) const = 0;

  // f on the whole tree.
  virtual double eval(const IncreasingTree& t) const;

 protected:
  explicit Toll(TollMeta meta) : meta_(std::move(meta)) {}
  TollMeta meta_;
};

using TollPtr = std::shared_ptr<const Toll>;

// ---- built-in catalog ----

TollPtr make_leaf_toll();                       // 1 iff |T| == 1
TollPtr make_outdegree_toll(int k);             // 1 iff root outdegree == k
TollPtr make_path_length_toll();                // |T| - 1   (unbounded)
TollPtr make_shape_toll();                      // log |T|   (unbounded)
TollPtr make_fringe_size_toll(int k);           // 1 iff |T| == k
TollPtr make_fringe_occurrence_toll(IncreasingTree reference);
TollPtr make_log_root_subtrees_toll();          // log(1 + 1/s(T))
TollPtr make_log_branch_symmetry_toll();        // log R(T)
TollPtr make_orbits_toll();                     // orbit-count toll (unbounded)
TollPtr make_constant_toll(double c);

// User-supplied toll. The closure sees the whole fringe subtree (with labels
// reinterpreted by relative order); per-node evaluation extracts each fringe
// subtree, so it costs O(n^2) where built-ins cost O(n).
TollPtr make_custom_toll(
    std::string name, std::function<double(const IncreasingTree&)> evaluator,
    TollMeta meta = {});

// ---- registry (CLI-facing) ----

struct TollInfo {
  std::string name;
  std::string summary;
  std::string params_help;  // e.g. "k=<int>"
};

const std::vector<TollInfo>& toll_registry();

// "leaf", "fringe-size:k=2", "constant:c=0.5",
// "fringe-occurrence:tree=1[s0:2[_,_],_]" -- parameters are key=value pairs
// separated by commas after the first ':'.
TollPtr make_toll(std::string_view spec);
TollPtr make_toll(std::string_view name,
                  const std::map<std::string, std::string>& params);
// name plus a JSON object of parameters, e.g. ("fringe-size", R"({"k": 2})").
TollPtr make_toll_json(std::string_view name, std::string_view json_params);

// ---- audits ----

struct AuditMismatch {
  std::string tree_text;
  std::string detail;
};

struct AuditReport {
  bool passed = true;
  std::size_t trees_checked = 0;
  std::vector<AuditMismatch> mismatches;  // capped at 16
};

// Evaluates the toll on every tree up to size_cutoff (d-ary d in {2,3} and
// plane) and on a copy with labels shifted by +10; reports any difference.
AuditReport relabel_invariance_audit(const Toll& toll, int size_cutoff);

// Brute-force check of the declared metadata flags over the same tree range.
AuditReport audit_toll_metadata(const Toll& toll, int size_cutoff);

}  // namespace incrtree
