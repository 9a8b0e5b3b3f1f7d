#include "incrtree/report.hpp"

#include <cmath>
#include <json.hpp>

namespace incrtree {

namespace {

using Json = nlohmann::ordered_json;

Json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

const char* method_name(TheoremConstants::Method m) {
  switch (m) {
    case TheoremConstants::Method::enumeration:
      return "enumeration";
    case TheoremConstants::Method::size_series:
      return "size_series";
    case TheoremConstants::Method::closed_form:
      return "closed_form";
  }
  return "?";
}

Json moment_check(const NormalityReport::MomentCheck& c) {
  return Json{{"observed", c.observed},
              {"predicted", c.predicted},
              {"z", finite_or_null(c.z)}};
}

}  // namespace

std::string to_json_string(const TheoremConstants& c) {
  Json j{{"method", method_name(c.method)},
         {"mu", c.mu},
         {"sigma2", finite_or_null(c.sigma2)},
         {"tree_size_cutoff", c.tree_size_cutoff},
         {"series_length", c.series_length}};
  j["tail_bound"] = c.tail_bound ? Json(*c.tail_bound) : Json(nullptr);
  j["mu_std_error"] = c.mu_std_error ? Json(*c.mu_std_error) : Json(nullptr);
  j["sigma2_sequence"] = c.sigma2_sequence;
  j["warnings"] = c.warnings;
  return j.dump();
}

std::string to_json_string(const GportConstants& c) {
  static const char* variant_names[4] = {
      "printed_sign_plain", "flipped_sign_plain", "printed_sign_prefactor",
      "flipped_sign_prefactor"};
  Json variants;
  for (int v = 0; v < 4; ++v) {
    variants[variant_names[v]] =
        Json{{"sigma2", c.sigma2_sequences[v].back()},
             {"sequence", c.sigma2_sequences[v]}};
  }
  Json j{{"mu", c.mu},
         {"tree_size_cutoff", c.tree_size_cutoff},
         {"sigma2_recommended", c.sigma2_recommended()},
         {"recommended_variant", variant_names[c.recommended]},
         {"variants", variants},
         {"warnings", c.warnings}};
  return j.dump();
}

std::string to_json_string(const SampleStats& s) {
  Json j{{"tree_size", s.tree_size},
         {"count", s.count()},
         {"mean", s.mean()},
         {"variance", finite_or_null(s.variance_sample())},
         {"m2", s.m2()},
         {"m3", s.m3()},
         {"m4", s.m4()},
         {"min", s.min()},
         {"max", s.max()}};
  Json manifest = Json::array();
  for (const auto& [worker, seed] : s.seed_manifest)
    manifest.push_back(Json{{"worker", worker}, {"seed", seed}});
  j["seed_manifest"] = manifest;
  if (s.histogram()) {
    const Histogram& h = *s.histogram();
    j["histogram"] = Json{{"lo", h.spec.lo},
                          {"hi", h.spec.hi},
                          {"bins", h.spec.bins},
                          {"underflow", h.underflow},
                          {"overflow", h.overflow},
                          {"counts", h.counts}};
  }
  j["distinct_values"] =
      s.values_tracked() ? Json(s.value_counts().size()) : Json(nullptr);
  return j.dump();
}

std::string to_json_string(const NormalityReport& r) {
  const char* method = r.ks_method == NormalityReport::KsMethod::discrete
                           ? "discrete"
                           : r.ks_method == NormalityReport::KsMethod::binned
                                 ? "binned"
                                 : "unavailable";
  Json j{{"samples", r.samples},
         {"sigma_zero", r.sigma_zero},
         {"skewness", finite_or_null(r.skewness)},
         {"skewness_se", r.skewness_se},
         {"excess_kurtosis", finite_or_null(r.excess_kurtosis)},
         {"kurtosis_se", r.kurtosis_se},
         {"ks_statistic", r.ks_statistic},
         {"ks_method", method},
         {"mean_check", moment_check(r.mean_check)},
         {"variance_check", moment_check(r.variance_check)},
         {"truncation_note", r.truncation_note}};
  return j.dump();
}

std::string to_json_string(const ChiSquareReport& r) {
  Json j{{"statistic", r.statistic},
         {"degrees_of_freedom", r.degrees_of_freedom},
         {"p_value", r.p_value},
         {"samples", r.samples},
         {"cells", r.cells},
         {"min_expected", r.min_expected}};
  return j.dump();
}

std::string to_json_string(const ModelProbabilityReport& r) {
  Json j{{"pass", r.pass},
         {"n", r.n},
         {"trees", r.trees},
         {"total_probability", to_string(r.total_probability)},
         {"first_mismatch", r.first_mismatch}};
  return j.dump();
}

std::string to_json_string(const MeanFormulaReport& r) {
  Json j{{"pass", r.pass},
         {"formula_mean", r.formula_mean},
         {"enumeration_mean", r.enumeration_mean},
         {"abs_diff", r.abs_diff},
         {"tolerance", r.tolerance}};
  return j.dump();
}

std::string to_json_string(const DecayReport& r) {
  Json points = Json::array();
  for (const DecayPoint& p : r.points)
    points.push_back(Json{{"size", p.size},
                          {"mean_abs_toll", p.mean_abs_toll},
                          {"std_error", p.std_error},
                          {"samples", p.samples}});
  Json j{{"points", points},
         {"loglog_slope", finite_or_null(r.loglog_slope)},
         {"loglog_slope_std_error", finite_or_null(r.loglog_slope_std_error)},
         {"positive_points", r.positive_points}};
  return j.dump();
}

std::string to_json_string(const ExactDistribution& d) {
  Json support = Json::array();
  for (const auto& [value, prob] : d.support)
    support.push_back(Json{{"value", value},
                           {"num", numerator(prob).str()},
                           {"den", denominator(prob).str()}});
  Json j{{"model", d.model.to_string()},
         {"toll", d.toll},
         {"n", d.n},
         {"total_probability", to_string(d.total_probability)},
         {"support", support}};
  return j.dump();
}

std::string to_csv(const ExactDistribution& d) {
  std::string out = "value,probability_num,probability_den\n";
  char buf[64];
  for (const auto& [value, prob] : d.support) {
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out += buf;
    out += ',';
    out += numerator(prob).str();
    out += ',';
    out += denominator(prob).str();
    out += '\n';
  }
  return out;
}

}  // namespace incrtree
