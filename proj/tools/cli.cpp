#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "incrtree/additive.hpp"
#include "incrtree/constants.hpp"
#include "incrtree/counting.hpp"
#include "incrtree/decay.hpp"
#include "incrtree/enumerate.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/normality.hpp"
#include "incrtree/oracle.hpp"
#include "incrtree/report.hpp"
#include "incrtree/simulate.hpp"
#include "incrtree/textform.hpp"

namespace incrtree::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string describe_models() {
  return "dary:<d>  (uniform d-ary increasing trees, d >= 2)\n"
         "  recursive (uniform recursive trees, canonical plane embedding)\n"
         "  gport:<alpha> (plane trees, attachment weight alpha + outdegree;"
         " alpha rational like 1/2; 'port' = gport:1)";
}

std::string describe_tolls() {
  std::string out;
  for (const TollInfo& info : toll_registry()) {
    out += "  " + info.name;
    if (!info.params_help.empty()) out += ":" + info.params_help;
    out += "\n      " + info.summary + "\n";
  }
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("INCRTREE_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json envelope(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

void emit(const OutputOptions& output, const std::string& content,
          std::ostream& out) {
  if (output.path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(output.path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + output.path);
  file << content;
}

int default_sigma_cutoff(const ModelParams& model) {
  if (model.variant == ModelParams::Variant::dary)
    return model.d == 2 ? 7 : 6;
  return 7;
}

// merges config-file values for flags the user did not pass; the --config
// tokens themselves are consumed here so subcommand parsing never sees them
std::vector<std::string> apply_config(const std::vector<std::string>& raw) {
  std::string config_path;
  std::vector<std::string> args;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == "--config" && i + 1 < raw.size()) {
      config_path = raw[i + 1];
      ++i;
    } else if (raw[i].rfind("--config=", 0) == 0) {
      config_path = raw[i].substr(9);
    } else {
      args.push_back(raw[i]);
    }
  }
  if (config_path.empty()) return args;
  std::ifstream file(config_path);
  if (!file)
    throw std::invalid_argument("cannot read config file " + config_path);
  Json config = Json::parse(file);
  if (!config.is_object())
    throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    bool present = false;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    if (present) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(value.dump());
    }
  }
  return args;
}

TollPtr resolve_toll(const std::string& name, const std::string& params) {
  if (params.empty()) return make_toll(name);
  if (name.find(':') != std::string::npos)
    throw std::invalid_argument(
        "--toll-params cannot be combined with inline toll parameters");
  return make_toll_json(name, params);
}

struct CheckGate {
  bool requested = false;
  bool failed = false;
  void gate(bool enabled, bool ok) {
    if (!enabled) return;
    requested = true;
    if (!ok) failed = true;
  }
};

// --model compact syntax or the long-form equivalents --d / --alpha
struct ModelFlags {
  std::string compact;
  int d = 0;
  std::string alpha;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", compact,
                    "model (dary:<d> | recursive | gport:<alpha>)");
    cmd->add_option("--d", d, "long form of --model dary:<d>");
    cmd->add_option("--alpha", alpha, "long form of --model gport:<alpha>");
  }

  ModelParams resolve() const {
    const int given = !compact.empty() + (d > 0) + !alpha.empty();
    if (given != 1)
      throw std::invalid_argument(
          "specify the model exactly once: --model, --d or --alpha");
    if (!compact.empty()) return ModelParams::parse(compact);
    if (d > 0) return ModelParams::make_dary(d);
    return ModelParams::make_gport(parse_rational(alpha));
  }
};

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "incrtree: random increasing trees, additive functionals and their "
      "central limit constants.\n\nModels:\n  " +
      describe_models() + "\n\nTolls (--toll name:key=value,...):\n" +
      describe_tolls()};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON file with default flag values; explicit flags win")
      ->expected(1);

  // shared state bound into each subcommand
  ModelFlags model_flags;
  std::string toll_text, toll_params;
  OutputOptions output;
  int n = 1;
  std::uint64_t samples = 0, seed = 0;
  int workers = default_workers();
  std::uint64_t max_trees = EnumLimits{}.max_trees;

  auto add_output = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", output.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--out", output.path, "write primary output to this file");
  };

  int exit_code = 0;

  // ---- generate ----
  auto* generate = app.add_subcommand(
      "generate", "sample random trees and emit them one per line");
  std::uint64_t gen_count = 1;
  model_flags.attach(generate);
  generate->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  generate->add_option("--count", gen_count, "number of trees");
  generate->add_option("--seed", seed, "RNG seed (mandatory)")->required();
  add_output(generate, {"text"});
  generate->callback([&] {
    const ModelParams model = model_flags.resolve();
    std::string lines;
    IncreasingTree t;
    Rng rng(seed);
    for (std::uint64_t i = 0; i < gen_count; ++i) {
      grow_model(t, model, n, rng);
      lines += to_text(t);
      lines += '\n';
    }
    emit(output, lines, out);
  });

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand(
      "enumerate", "emit every tree of the given size, one per line");
  model_flags.attach(enumerate);
  enumerate->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  enumerate->add_option("--max-trees", max_trees, "enumeration budget");
  add_output(enumerate, {"text"});
  enumerate->callback([&] {
    const ModelParams model = model_flags.resolve();
    EnumLimits limits;
    limits.max_trees = max_trees;
    std::string lines;
    enumerate_model(model, n, [&](const IncreasingTree& t) {
      lines += to_text(t);
      lines += '\n';
    }, limits);
    emit(output, lines, out);
  });

  // ---- count ----
  auto* count = app.add_subcommand(
      "count", "count trees of a size (gport: total weight)");
  model_flags.attach(count);
  count->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  add_output(count, {"text", "json"});
  count->callback([&] {
    const ModelParams model = model_flags.resolve();
    std::string value;
    switch (model.variant) {
      case ModelParams::Variant::dary:
        value = count_dary(model.d, n).str();
        break;
      case ModelParams::Variant::recursive:
        value = count_recursive(n).str();
        break;
      case ModelParams::Variant::gport:
        value = to_string(gport_total_weight(model.alpha, n));
        break;
    }
    if (output.format == "json") {
      Json j = envelope("count");
      j["model"] = model.to_string();
      j["n"] = n;
      j["count"] = value;
      emit(output, j.dump() + "\n", out);
    } else {
      emit(output, value + "\n", out);
    }
  });

  // ---- constants ----
  auto* constants = app.add_subcommand(
      "constants", "limit constants mu and sigma2 with truncation sequence");
  int cutoff_k = 0;
  int series_n = 0;
  std::uint64_t mc_samples = 0;
  int exact_upto = 6;
  model_flags.attach(constants);
  constants->add_option("--toll", toll_text, "toll name (see --help)")->required();
  constants->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  constants->add_option("--K", cutoff_k,
                        "tree-size cutoff for the sigma2 sums (default 7 for "
                        "dary:2, 6 otherwise)");
  constants->add_option("--series-N", series_n,
                        "also evaluate the size-grouped mu series to N terms");
  constants->add_option("--mc-samples", mc_samples,
                        "Monte Carlo samples per size for series entries "
                        "beyond --exact-upto (0 = exact only)");
  constants->add_option("--exact-upto", exact_upto,
                        "largest size with enumerated series entries");
  constants->add_option("--seed", seed, "seed for --mc-samples");
  add_output(constants, {"text", "json"});
  constants->callback([&] {
    const ModelParams model = model_flags.resolve();
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    const int K = cutoff_k > 0 ? cutoff_k : default_sigma_cutoff(model);
    Json j = envelope("constants");
    j["model"] = model.to_string();
    j["toll"] = toll->meta().display_name();
    std::string text;
    if (model.variant == ModelParams::Variant::dary) {
      const TheoremConstants c = sigma2_enumeration(model.d, *toll, K);
      j["constants"] = Json::parse(to_json_string(c));
      text += "mu = " + format_double(c.mu) + "\n";
      text += "sigma2 = " + format_double(c.sigma2) + "\n";
      for (const std::string& w : c.warnings) text += "warning: " + w + "\n";
      if (series_n > 0) {
        ExpectedTollProfile profile;
        if (mc_samples > 0) {
          if (!constants->count("--seed"))
            throw CLI::RequiredError("--seed (required with --mc-samples)");
          profile = mc_profile(model, *toll, series_n, mc_samples, seed,
                               std::min(series_n, exact_upto));
        } else if (toll->meta().size_only) {
          profile = size_only_profile(*toll, series_n);
        } else {
          profile = exact_profile(model, *toll, series_n);
        }
        const TheoremConstants s =
            mu_size_series(model.d, *toll, profile, series_n);
        j["mu_series"] = Json::parse(to_json_string(s));
        text += "mu_series = " + format_double(s.mu) + "\n";
        if (s.tail_bound)
          text += "tail_bound = " + format_double(*s.tail_bound) + "\n";
      }
    } else if (model.variant == ModelParams::Variant::gport) {
      const GportConstants c = gport_constants(model.alpha, *toll, K);
      j["constants"] = Json::parse(to_json_string(c));
      text += "mu = " + format_double(c.mu) + "\n";
      text += "sigma2 (printed-sign, prefactor varphi) = " +
              format_double(c.sigma2(GportConstants::printed_sign_prefactor)) +
              "\n";
      text += "sigma2 (printed-sign, plain varphi) = " +
              format_double(c.sigma2(GportConstants::printed_sign_plain)) +
              "\n";
      for (const std::string& w : c.warnings) text += "warning: " + w + "\n";
    } else {
      throw std::invalid_argument(
          "constants supports dary and gport models only");
    }
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
  });

  // ---- mean-exact ----
  auto* mean_exact = app.add_subcommand(
      "mean-exact", "exact E F(T_n) from the finite-n mean identity");
  model_flags.attach(mean_exact);
  mean_exact->add_option("--toll", toll_text, "toll")->required();
  mean_exact->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  mean_exact->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  add_output(mean_exact, {"text", "json"});
  mean_exact->callback([&] {
    const ModelParams model = model_flags.resolve();
    if (model.variant != ModelParams::Variant::dary)
      throw std::invalid_argument("mean-exact requires a dary model");
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    const auto profile = exact_profile(model, *toll, n);
    const double mean = exact_mean(model.d, *toll, n, profile);
    if (output.format == "json") {
      Json j = envelope("mean-exact");
      j["model"] = model.to_string();
      j["toll"] = toll->meta().display_name();
      j["n"] = n;
      j["mean"] = mean;
      emit(output, j.dump() + "\n", out);
    } else {
      emit(output, format_double(mean) + "\n", out);
    }
  });

  // ---- simulate ----
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "sample F(T_n) and report moments plus normality");
  bool no_histogram = false;
  std::string dump_path;
  std::uint64_t dump_cap = 10000;
  double max_skew = 0, max_kurt = 0, max_ks = 0;
  model_flags.attach(simulate_cmd);
  simulate_cmd->add_option("--toll", toll_text, "toll")->required();
  simulate_cmd->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  simulate_cmd->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  simulate_cmd->add_option("--samples", samples, "sample count")
      ->check(CLI::PositiveNumber)
      ->required();
  simulate_cmd->add_option("--seed", seed, "RNG seed (mandatory)")->required();
  simulate_cmd->add_option("--workers", workers, "worker threads")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--K", cutoff_k, "constants truncation cutoff");
  simulate_cmd->add_flag("--no-histogram", no_histogram,
                         "skip the KS histogram");
  simulate_cmd->add_option("--dump-csv", dump_path,
                           "write up to --dump-cap raw F values as CSV");
  simulate_cmd->add_option("--dump-cap", dump_cap, "raw value cap");
  simulate_cmd->add_option("--max-skew", max_skew,
                           "fail (exit 1) when |skewness| exceeds this");
  simulate_cmd->add_option("--max-kurtosis", max_kurt,
                           "fail when |excess kurtosis| exceeds this");
  simulate_cmd->add_option("--max-ks", max_ks,
                           "fail when the KS statistic exceeds this");
  add_output(simulate_cmd, {"text", "json"});
  simulate_cmd->callback([&] {
    const ModelParams model = model_flags.resolve();
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    const int K = cutoff_k > 0 ? cutoff_k : default_sigma_cutoff(model);

    double predicted_mean = std::numeric_limits<double>::quiet_NaN();
    double predicted_var = std::numeric_limits<double>::quiet_NaN();
    std::string note;
    Json constants_json;
    if (model.variant == ModelParams::Variant::dary) {
      const TheoremConstants c = sigma2_enumeration(model.d, *toll, K);
      predicted_mean = c.mu * n + c.mu / (model.d - 1);
      predicted_var = c.sigma2 * n;
      note = "tree sums truncated at K=" + std::to_string(K);
      constants_json = Json::parse(to_json_string(c));
    } else if (model.variant == ModelParams::Variant::gport) {
      const GportConstants c = gport_constants(model.alpha, *toll, K);
      predicted_mean = c.mu * n - c.mu / to_double(model.alpha + 1);
      predicted_var = c.sigma2_recommended() * n;
      note = "gport constants at K=" + std::to_string(K) +
             ", printed-sign prefactor variant";
      constants_json = Json::parse(to_json_string(c));
    }

    SimulateOptions opt;
    opt.workers = workers;
    opt.dump_cap = dump_path.empty() ? 0 : dump_cap;
    if (!no_histogram && std::isfinite(predicted_var) && predicted_var > 0) {
      const double center = predicted_mean;
      const double half = 6 * std::sqrt(predicted_var);
      opt.histogram = HistogramSpec{center - half, center + half, 201};
    }
    const SimulateResult result =
        incrtree::simulate(model, *toll, n, samples, seed, opt);
    const NormalityReport report =
        normality_report(result.stats, predicted_mean, predicted_var, note);

    if (!dump_path.empty()) {
      std::ofstream f(dump_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open " + dump_path);
      f << "F\n";
      for (double v : result.dumped_values) f << format_double(v) << "\n";
    }

    Json j = envelope("simulate");
    j["model"] = model.to_string();
    j["toll"] = toll->meta().display_name();
    j["n"] = n;
    j["samples"] = samples;
    j["seed"] = seed;
    j["workers"] = workers;
    if (!constants_json.is_null()) j["constants"] = constants_json;
    j["stats"] = Json::parse(to_json_string(result.stats));
    j["normality"] = Json::parse(to_json_string(report));

    CheckGate gate;
    gate.gate(simulate_cmd->count("--max-skew") > 0,
              std::abs(report.skewness) <= max_skew);
    gate.gate(simulate_cmd->count("--max-kurtosis") > 0,
              std::abs(report.excess_kurtosis) <= max_kurt);
    gate.gate(simulate_cmd->count("--max-ks") > 0,
              report.ks_statistic <= max_ks);
    j["checks_failed"] = gate.failed;
    if (gate.failed) exit_code = 1;

    std::string text;
    text += "n = " + std::to_string(n) +
            ", samples = " + std::to_string(samples) + "\n";
    text += "mean = " + format_double(result.stats.mean()) +
            " (predicted " + format_double(predicted_mean) + ")\n";
    text += "variance = " + format_double(result.stats.variance_sample()) +
            " (predicted " + format_double(predicted_var) + ")\n";
    text += "skewness = " + format_double(report.skewness) +
            ", excess_kurtosis = " + format_double(report.excess_kurtosis) +
            ", ks = " + format_double(report.ks_statistic) + "\n";
    if (report.sigma_zero) text += "sigma = 0 (degenerate sample)\n";
    if (gate.failed) text += "CHECKS FAILED\n";
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "oracle verification suites");
  verify->require_subcommand(1);

  auto* v_uniform = verify->add_subcommand(
      "uniformity", "chi-square of the d-ary grower against enumeration");
  int uniform_d = 2;
  double p_threshold = 0.001;
  v_uniform->add_option("--d", uniform_d, "arity")->check(CLI::Range(2, 16));
  v_uniform->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  v_uniform->add_option("--samples", samples, "sample count")->required();
  v_uniform->add_option("--seed", seed, "RNG seed (mandatory)")->required();
  v_uniform->add_option("--p-threshold", p_threshold, "rejection level");
  add_output(v_uniform, {"text", "json"});
  v_uniform->callback([&] {
    const ChiSquareReport report = verify_uniformity(uniform_d, n, samples, seed);
    const bool pass = report.p_value > p_threshold;
    Json j = envelope("verify uniformity");
    j["d"] = uniform_d;
    j["n"] = n;
    j["pass"] = pass;
    j["report"] = Json::parse(to_json_string(report));
    std::string text = std::string(pass ? "PASS" : "FAIL") +
                       " uniformity: chi2 = " + format_double(report.statistic) +
                       ", df = " + std::to_string(report.degrees_of_freedom) +
                       ", p = " + format_double(report.p_value) + "\n";
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
    if (!pass) exit_code = 1;
  });

  auto* v_weights = verify->add_subcommand(
      "gport-weights", "exact rational identity P(T) * W_n == w(T)");
  std::string alpha_text = "1";
  v_weights->add_option("--alpha", alpha_text, "gport alpha (rational)");
  v_weights->add_option("--n", n, "check all sizes up to n")
      ->check(CLI::PositiveNumber)
      ->required();
  add_output(v_weights, {"text", "json"});
  v_weights->callback([&] {
    const Rational alpha = parse_rational(alpha_text);
    bool pass = true;
    Json reports = Json::array();
    std::string text;
    for (int size = 1; size <= n; ++size) {
      const ModelProbabilityReport report = verify_model_probability(alpha, size);
      pass = pass && report.pass;
      reports.push_back(Json::parse(to_json_string(report)));
      text += std::string(report.pass ? "PASS" : "FAIL") + " gport-weights n=" +
              std::to_string(size) + " (" + std::to_string(report.trees) +
              " trees)\n";
    }
    Json j = envelope("verify gport-weights");
    j["alpha"] = to_string(alpha);
    j["pass"] = pass;
    j["reports"] = reports;
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
    if (!pass) exit_code = 1;
  });

  auto* v_mean = verify->add_subcommand(
      "mean", "finite-n mean identity vs enumeration");
  double tolerance = 1e-12;
  model_flags.attach(v_mean);
  v_mean->add_option("--toll", toll_text, "toll")->required();
  v_mean->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  v_mean->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  v_mean->add_option("--tolerance", tolerance, "absolute tolerance");
  add_output(v_mean, {"text", "json"});
  v_mean->callback([&] {
    const ModelParams model = model_flags.resolve();
    if (model.variant != ModelParams::Variant::dary)
      throw std::invalid_argument("verify mean requires a dary model");
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    const MeanFormulaReport report =
        verify_mean_formula(model.d, *toll, n, tolerance);
    Json j = envelope("verify mean");
    j["model"] = model.to_string();
    j["toll"] = toll->meta().display_name();
    j["n"] = n;
    j["report"] = Json::parse(to_json_string(report));
    std::string text = std::string(report.pass ? "PASS" : "FAIL") +
                       " mean: formula = " + format_double(report.formula_mean) +
                       ", enumeration = " +
                       format_double(report.enumeration_mean) + ", diff = " +
                       format_double(report.abs_diff) + "\n";
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
    if (!report.pass) exit_code = 1;
  });

  // ---- decay ----
  auto* decay = app.add_subcommand(
      "decay", "Monte Carlo decay profile of E|f(T_k)| (advisory for (C2))");
  std::string sizes_text = "10,20,40,80,160";
  model_flags.attach(decay);
  decay->add_option("--toll", toll_text, "toll")->required();
  decay->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  decay->add_option("--sizes", sizes_text, "comma separated size grid");
  decay->add_option("--samples", samples, "samples per size")->required();
  decay->add_option("--seed", seed, "RNG seed (mandatory)")->required();
  add_output(decay, {"text", "json", "csv"});
  decay->callback([&] {
    const ModelParams model = model_flags.resolve();
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    std::vector<int> sizes;
    std::istringstream in(sizes_text);
    std::string item;
    while (std::getline(in, item, ',')) sizes.push_back(std::stoi(item));
    const DecayReport report =
        estimate_toll_decay(model, *toll, sizes, samples, seed);
    if (output.format == "csv") {
      std::string csv = "size,mean_abs_toll,std_error,samples\n";
      for (const DecayPoint& p : report.points)
        csv += std::to_string(p.size) + "," + format_double(p.mean_abs_toll) +
               "," + format_double(p.std_error) + "," +
               std::to_string(p.samples) + "\n";
      emit(output, csv, out);
      return;
    }
    Json j = envelope("decay");
    j["model"] = model.to_string();
    j["toll"] = toll->meta().display_name();
    j["samples"] = samples;
    j["seed"] = seed;
    j["report"] = Json::parse(to_json_string(report));
    std::string text;
    for (const DecayPoint& p : report.points)
      text += "size " + std::to_string(p.size) + ": E|f| = " +
              format_double(p.mean_abs_toll) + " +- " +
              format_double(p.std_error) + "\n";
    text += "log-log slope = " + format_double(report.loglog_slope) + "\n";
    emit(output, output.format == "json" ? j.dump() + "\n" : text, out);
  });

  // ---- distribution ----
  auto* distribution = app.add_subcommand(
      "distribution", "exact law of F(T_n) by enumeration");
  model_flags.attach(distribution);
  distribution->add_option("--toll", toll_text, "toll")->required();
  distribution->add_option("--toll-params", toll_params,
                  "JSON object of toll parameters (alternative to name:k=v)");
  distribution->add_option("--n", n, "tree size")->check(CLI::PositiveNumber)
      ->required();
  add_output(distribution, {"text", "json", "csv"});
  distribution->callback([&] {
    const ModelParams model = model_flags.resolve();
    const TollPtr toll = resolve_toll(toll_text, toll_params);
    const ExactDistribution dist = exact_distribution(model, *toll, n);
    if (output.format == "csv") {
      emit(output, to_csv(dist), out);
    } else if (output.format == "json") {
      Json j = envelope("distribution");
      j["distribution"] = Json::parse(to_json_string(dist));
      emit(output, j.dump() + "\n", out);
    } else {
      std::string text;
      for (const auto& [value, prob] : dist.support)
        text += format_double(value) + "  " + to_string(prob) + "\n";
      emit(output, text, out);
    }
  });

  // ---- parse and dispatch ----
  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace incrtree::cli
