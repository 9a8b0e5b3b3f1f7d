#include "incrtree/toll.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

#include "incrtree/additive.hpp"
#include "incrtree/enumerate.hpp"
#include "incrtree/textform.hpp"

namespace incrtree {

std::string TollMeta::display_name() const {
  if (params.empty()) return name;
  std::string out = name + ":";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ',';
    first = false;
    out += k + "=" + v;
  }
  return out;
}

double Toll::eval(const IncreasingTree& t) const {
  std::vector<double> tolls(t.size());
  eval_nodes(t, tolls);
  return tolls[0];
}

TollPtr make_toll(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  std::map<std::string, std::string> params;
  if (colon != std::string_view::npos) {
    const std::string rest(spec.substr(colon + 1));
    // split on commas outside brackets (textual tree forms contain commas)
    std::vector<std::string> items;
    std::string current;
    int depth = 0;
    for (char c : rest) {
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    items.push_back(current);
    for (const std::string& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("toll parameter '" + item +
                                    "' is not key=value");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return make_toll(name, params);
}

namespace {

int require_int(const std::map<std::string, std::string>& params,
                const std::string& key, const std::string& toll) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("toll '" + toll + "' requires parameter " +
                                key);
  return std::stoi(it->second);
}

void reject_unknown(const std::map<std::string, std::string>& params,
                    std::initializer_list<const char*> known,
                    const std::string& toll) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* known_key : known) ok = ok || k == known_key;
    if (!ok)
      throw std::invalid_argument("toll '" + toll + "': unknown parameter '" +
                                  k + "'");
  }
}

}  // namespace

TollPtr make_toll(std::string_view name_view,
                  const std::map<std::string, std::string>& params) {
  const std::string name(name_view);
  if (name == "leaf") {
    reject_unknown(params, {}, name);
    return make_leaf_toll();
  }
  if (name == "outdegree") {
    reject_unknown(params, {"k"}, name);
    return make_outdegree_toll(require_int(params, "k", name));
  }
  if (name == "path-length") {
    reject_unknown(params, {}, name);
    return make_path_length_toll();
  }
  if (name == "shape") {
    reject_unknown(params, {}, name);
    return make_shape_toll();
  }
  if (name == "fringe-size") {
    reject_unknown(params, {"k"}, name);
    return make_fringe_size_toll(require_int(params, "k", name));
  }
  if (name == "fringe-occurrence") {
    reject_unknown(params, {"tree"}, name);
    auto it = params.find("tree");
    if (it == params.end())
      throw std::invalid_argument(
          "toll 'fringe-occurrence' requires parameter tree=<textual form>");
    return make_fringe_occurrence_toll(parse_tree(it->second));
  }
  if (name == "log-root-subtrees") {
    reject_unknown(params, {}, name);
    return make_log_root_subtrees_toll();
  }
  if (name == "log-branch-symmetry") {
    reject_unknown(params, {}, name);
    return make_log_branch_symmetry_toll();
  }
  if (name == "orbits") {
    reject_unknown(params, {}, name);
    return make_orbits_toll();
  }
  if (name == "constant") {
    reject_unknown(params, {"c"}, name);
    auto it = params.find("c");
    if (it == params.end())
      throw std::invalid_argument("toll 'constant' requires parameter c");
    return make_constant_toll(std::stod(it->second));
  }
  std::string msg = "unknown toll '" + name + "'; registered tolls:";
  for (const TollInfo& info : toll_registry()) {
    msg += "\n  " + info.name;
    if (!info.params_help.empty()) msg += ":" + info.params_help;
    msg += " -- " + info.summary;
  }
  throw std::invalid_argument(msg);
}

TollPtr make_toll_json(std::string_view name, std::string_view json_params) {
  std::map<std::string, std::string> params;
  if (!json_params.empty()) {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(json_params);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad toll params JSON: ") +
                                  e.what());
    }
    if (!parsed.is_object())
      throw std::invalid_argument("toll params must be a JSON object");
    for (const auto& [key, value] : parsed.items())
      params[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return make_toll(name, params);
}

const std::vector<TollInfo>& toll_registry() {
  static const std::vector<TollInfo> registry = {
      {"leaf", "1 iff the tree is a single vertex (counts leaves)", ""},
      {"outdegree", "1 iff the root has outdegree k", "k=<int>"},
      {"path-length", "|T|-1 (internal path length; unbounded)", ""},
      {"shape", "log|T| (shape functional; unbounded)", ""},
      {"fringe-size", "1 iff |T| == k (counts fringe subtrees of size k)",
       "k=<int>"},
      {"fringe-occurrence",
       "1 iff T equals the reference tree up to relative label order",
       "tree=<textual form>"},
      {"log-root-subtrees", "log(1 + 1/s(T)), s = subtrees containing the root",
       ""},
      {"log-branch-symmetry",
       "log R(T), R = symmetry group order of the root branches", ""},
      {"orbits", "vertex-orbit toll: orbits(T) - sum orbits(branches)", ""},
      {"constant", "the constant c (F = c|T|)", "c=<real>"},
  };
  return registry;
}

namespace {

void audit_trees(int size_cutoff, const TreeVisitor& visit) {
  for (int n = 1; n <= size_cutoff; ++n) {
    enumerate_dary(2, n, visit);
    enumerate_dary(3, n, visit);
    enumerate_plane(n, visit);
  }
}

void record(AuditReport& report, const IncreasingTree& t, std::string detail) {
  report.passed = false;
  if (report.mismatches.size() < 16)
    report.mismatches.push_back({to_text(t), std::move(detail)});
}

}  // namespace

AuditReport relabel_invariance_audit(const Toll& toll, int size_cutoff) {
  AuditReport report;
  audit_trees(size_cutoff, [&](const IncreasingTree& t) {
    ++report.trees_checked;
    const double base = toll.eval(t);
    IncreasingTree shifted = t;
    std::vector<std::uint64_t> labels(t.size());
    for (int v = 0; v < t.size(); ++v) labels[v] = t.label(v) + 10;
    shifted.set_custom_labels(std::move(labels));
    const double moved = toll.eval(shifted);
    if (!(base == moved) && !(std::isnan(base) && std::isnan(moved)))
      record(report, t,
             "toll changed under label shift: " + std::to_string(base) +
                 " vs " + std::to_string(moved));
  });
  return report;
}

AuditReport audit_toll_metadata(const Toll& toll, int size_cutoff) {
  AuditReport report;
  const TollMeta& meta = toll.meta();
  std::map<int, double> value_by_size;
  audit_trees(size_cutoff, [&](const IncreasingTree& t) {
    ++report.trees_checked;
    const double f = toll.eval(t);
    if (meta.bound && std::abs(f) > *meta.bound + 1e-12)
      record(report, t, "|f| exceeds declared bound");
    if (meta.support_cutoff && t.size() > *meta.support_cutoff && f != 0)
      record(report, t, "nonzero toll beyond declared support cutoff");
    if (meta.size_only) {
      auto [it, inserted] = value_by_size.emplace(t.size(), f);
      if (!inserted && std::abs(it->second - f) > 1e-12)
        record(report, t, "size_only toll varies within a size class");
    }
  });
  return report;
}

}  // namespace incrtree
