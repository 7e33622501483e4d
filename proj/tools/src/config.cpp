#include "config.hpp"

#include <set>

#include "frechet/error.hpp"

namespace frechet::cli {

namespace {

const std::set<std::string> kCommands = {"mean",           "regress",  "predict",
                                         "mean-converge",  "regress-converge",
                                         "verify-loss",    "hoeffding"};

[[noreturn]] void bad_config(const std::string& message) {
  throw Error(errc::config_error, message);
}

double require_number(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number()) {
    bad_config(std::string(where) + " needs a \"" + key + "\" number");
  }
  return j[key].get<double>();
}

std::string require_string(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_string()) {
    bad_config(std::string(where) + " needs a \"" + key + "\" string");
  }
  return j[key].get<std::string>();
}

std::vector<double> require_numbers(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_array()) {
    bad_config(std::string(where) + " needs a \"" + key + "\" array");
  }
  std::vector<double> values;
  for (const json& v : j[key]) {
    if (!v.is_number()) bad_config(std::string(where) + " \"" + key + "\" holds a non-number");
    values.push_back(v.get<double>());
  }
  return values;
}

void reject_unknown(const json& j, const std::set<std::string>& known, const char* where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) bad_config(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

}  // namespace

SpaceDescriptor build_space(const json& j) {
  if (!j.is_object()) bad_config("space must be an object");
  reject_unknown(j, {"kind", "dimension", "bins", "width", "metric"}, "space");
  std::string kind = require_string(j, "kind", "space");
  if (kind == "euclidean") {
    return SpaceDescriptor::euclidean(
        static_cast<std::size_t>(require_number(j, "dimension", "euclidean space")));
  }
  if (kind == "density-grid") {
    auto bins = static_cast<std::size_t>(require_number(j, "bins", "density grid"));
    double width = require_number(j, "width", "density grid");
    MetricId metric = MetricId::l1;
    if (j.contains("metric")) {
      std::string m = require_string(j, "metric", "density grid");
      if (m == "l1") {
        metric = MetricId::l1;
      } else if (m == "total-variation") {
        metric = MetricId::total_variation;
      } else {
        bad_config("density grid metric must be l1 or total-variation, got \"" + m + "\"");
      }
    }
    return SpaceDescriptor::density_grid(bins, width, metric);
  }
  if (kind == "spd-matrix") {
    return SpaceDescriptor::spd_matrix(
        static_cast<std::size_t>(require_number(j, "dimension", "spd space")));
  }
  bad_config("unknown space kind \"" + kind + "\"");
}

LossSpec build_loss(const json& j, const SpaceDescriptor& space) {
  if (!j.is_object()) bad_config("loss must be an object");
  reject_unknown(j, {"kind", "bounded_space", "bound", "inner"}, "loss");
  std::string kind = require_string(j, "kind", "loss");
  if (kind == "squared-norm") {
    bool bounded = j.value("bounded_space", false);
    return LossSpec::squared_norm(space, bounded);
  }
  if (kind == "norm") return LossSpec::norm(space);
  if (kind == "l1-density") return LossSpec::l1_density(space);
  if (kind == "total-variation") return LossSpec::total_variation(space);
  if (kind == "frobenius") return LossSpec::frobenius(space);
  if (kind == "truncated") {
    if (!j.contains("inner")) bad_config("truncated loss needs an \"inner\" loss");
    double bound = require_number(j, "bound", "truncated loss");
    return LossSpec::truncated(build_loss(j["inner"], space), bound);
  }
  bad_config("unknown loss kind \"" + kind + "\"");
}

namespace {

LinkSpec build_link(const json& j) {
  if (!j.is_object()) bad_config("link must be an object");
  reject_unknown(j, {"kind", "threshold", "below", "above", "value"}, "link");
  std::string kind = require_string(j, "kind", "link");
  if (kind == "identity") return LinkSpec::identity();
  if (kind == "step") {
    if (!j.contains("below") || !j.contains("above")) {
      bad_config("step link needs \"below\" and \"above\" points");
    }
    return LinkSpec::step(require_number(j, "threshold", "step link"),
                          point_from_json(j["below"]), point_from_json(j["above"]));
  }
  if (kind == "constant") {
    if (!j.contains("value")) bad_config("constant link needs a \"value\" point");
    return LinkSpec::constant(point_from_json(j["value"]));
  }
  bad_config("unknown link kind \"" + kind + "\"");
}

NoiseSpec build_noise(const json& j) {
  if (!j.is_object()) bad_config("noise must be an object");
  reject_unknown(j, {"kind", "half_width", "sigma"}, "noise");
  std::string kind = require_string(j, "kind", "noise");
  if (kind == "none") return NoiseSpec::none();
  if (kind == "uniform") return NoiseSpec::uniform(require_number(j, "half_width", "noise"));
  if (kind == "gaussian") return NoiseSpec::gaussian(require_number(j, "sigma", "noise"));
  bad_config("unknown noise kind \"" + kind + "\"");
}

}  // namespace

SamplerSpec build_sampler_spec(const json& j) {
  if (!j.is_object()) bad_config("sampler must be an object");
  std::string kind = require_string(j, "kind", "sampler");
  if (kind == "uniform-scalar") {
    reject_unknown(j, {"kind", "lo", "hi", "seed"}, "sampler");
    return SamplerSpec::uniform_scalar(require_number(j, "lo", "uniform-scalar"),
                                       require_number(j, "hi", "uniform-scalar"));
  }
  if (kind == "gaussian-vector") {
    reject_unknown(j, {"kind", "mean", "sigma", "seed"}, "sampler");
    return SamplerSpec::gaussian_vector(require_numbers(j, "mean", "gaussian-vector"),
                                        require_number(j, "sigma", "gaussian-vector"));
  }
  if (kind == "histogram-mixture") {
    reject_unknown(j, {"kind", "components", "weights", "seed"}, "sampler");
    if (!j.contains("components") || !j["components"].is_array()) {
      bad_config("histogram-mixture needs a \"components\" array");
    }
    std::vector<Point> components;
    for (const json& c : j["components"]) components.push_back(point_from_json(c));
    return SamplerSpec::histogram_mixture(std::move(components),
                                          require_numbers(j, "weights", "histogram-mixture"));
  }
  if (kind == "er-graph-laplacian") {
    reject_unknown(j, {"kind", "nodes", "edge_prob", "seed"}, "sampler");
    return SamplerSpec::er_graph_laplacian(
        static_cast<std::size_t>(require_number(j, "nodes", "er-graph-laplacian")),
        require_number(j, "edge_prob", "er-graph-laplacian"));
  }
  if (kind == "finite-scalar") {
    reject_unknown(j, {"kind", "atoms", "weights", "seed"}, "sampler");
    return SamplerSpec::finite_scalar(require_numbers(j, "atoms", "finite-scalar"),
                                      require_numbers(j, "weights", "finite-scalar"));
  }
  if (kind == "point-mass") {
    reject_unknown(j, {"kind", "point", "seed"}, "sampler");
    if (!j.contains("point")) bad_config("point-mass needs a \"point\"");
    return SamplerSpec::point_mass(point_from_json(j["point"]));
  }
  if (kind == "regression-pair") {
    reject_unknown(j, {"kind", "x", "link", "noise", "seed"}, "sampler");
    if (!j.contains("x")) bad_config("regression-pair needs an \"x\" sampler");
    LinkSpec link = j.contains("link") ? build_link(j["link"]) : LinkSpec::identity();
    NoiseSpec noise = j.contains("noise") ? build_noise(j["noise"]) : NoiseSpec::none();
    return SamplerSpec::regression_pair(build_sampler_spec(j["x"]), std::move(link), noise);
  }
  bad_config("unknown sampler kind \"" + kind + "\"");
}

KRule build_k_rule(const json& j) {
  if (!j.is_object()) bad_config("k_rule must be an object");
  reject_unknown(j, {"kind", "k"}, "k_rule");
  std::string kind = require_string(j, "kind", "k_rule");
  if (kind == "schedule") return KRule::schedule();
  if (kind == "fixed") {
    return KRule::fixed(static_cast<std::size_t>(require_number(j, "k", "fixed k_rule")));
  }
  bad_config("unknown k_rule kind \"" + kind + "\"");
}

Sampler build_sampler(const ExperimentConfig& config) {
  if (!config.sampler) bad_config("command \"" + config.command + "\" needs a sampler");
  SamplerSpec spec = build_sampler_spec(*config.sampler);
  std::uint64_t seed = 0;
  if (config.sampler->contains("seed")) seed = (*config.sampler)["seed"].get<std::uint64_t>();
  if (config.seed_override) seed = *config.seed_override;
  return Sampler(std::move(spec), seed);
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) bad_config("config must be a JSON object");
  reject_unknown(j,
                 {"command", "space", "loss", "sampler", "k_rule", "input_file", "prototype_file",
                  "nuclei_file", "estimator_file", "n", "k", "n_grid", "seeds", "mc_m",
                  "prototype_n", "epsilon", "trials", "jobs", "timings", "out", "svg"},
                 "config");
  ExperimentConfig config;
  config.command = require_string(j, "command", "config");
  if (!kCommands.count(config.command)) {
    bad_config("unknown command \"" + config.command + "\"");
  }

  if (j.contains("space")) {
    config.space = j["space"];
    build_space(*config.space);  // validate now, fail fast
  }
  if (j.contains("loss")) {
    config.loss = j["loss"];
    if (config.space) build_loss(*config.loss, build_space(*config.space));
  }
  if (j.contains("sampler")) {
    config.sampler = j["sampler"];
    build_sampler_spec(*config.sampler);
  }
  if (j.contains("k_rule")) {
    config.k_rule = j["k_rule"];
    build_k_rule(*config.k_rule);
  }

  auto opt_string = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) bad_config(std::string("\"") + key + "\" must be a string");
    return j[key].get<std::string>();
  };
  config.input_file = opt_string("input_file");
  config.prototype_file = opt_string("prototype_file");
  config.nuclei_file = opt_string("nuclei_file");
  config.estimator_file = opt_string("estimator_file");
  config.out = opt_string("out");
  config.svg = opt_string("svg");

  auto opt_size = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_unsigned()) {
      bad_config(std::string("\"") + key + "\" must be a non-negative integer");
    }
    return j[key].get<std::size_t>();
  };
  config.n = opt_size("n");
  config.k = opt_size("k");
  config.trials = opt_size("trials");
  config.prototype_n = opt_size("prototype_n");
  if (auto m = opt_size("mc_m")) config.mc_m = *m;

  if (j.contains("epsilon")) config.epsilon = require_number(j, "epsilon", "config");
  if (j.contains("jobs")) {
    if (!j["jobs"].is_number_integer()) bad_config("\"jobs\" must be an integer");
    config.jobs = j["jobs"].get<int>();
    if (config.jobs < 1) bad_config("\"jobs\" must be >= 1");
  }
  if (j.contains("timings")) {
    if (!j["timings"].is_boolean()) bad_config("\"timings\" must be a boolean");
    config.timings = j["timings"].get<bool>();
  }

  if (j.contains("n_grid")) {
    for (double v : require_numbers(j, "n_grid", "config")) {
      if (v < 1) bad_config("n_grid entries must be positive");
      config.n_grid.push_back(static_cast<std::size_t>(v));
    }
  }
  if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) bad_config("\"seeds\" must be an array");
    for (const json& v : j["seeds"]) {
      if (!v.is_number_unsigned()) bad_config("seeds must be non-negative integers");
      config.seeds.push_back(v.get<std::uint64_t>());
    }
  }

  // Exactly one source per data role.
  bool has_sampler = config.sampler.has_value();
  bool has_input = config.input_file.has_value();
  if (config.command != "predict" && has_sampler == has_input) {
    bad_config("exactly one of \"sampler\" and \"input_file\" must be set");
  }
  return config;
}

json to_json(const ExperimentConfig& config) {
  json j;
  j["command"] = config.command;
  if (config.space) j["space"] = *config.space;
  if (config.loss) j["loss"] = *config.loss;
  if (config.sampler) j["sampler"] = *config.sampler;
  if (config.k_rule) j["k_rule"] = *config.k_rule;
  if (config.input_file) j["input_file"] = *config.input_file;
  if (config.prototype_file) j["prototype_file"] = *config.prototype_file;
  if (config.nuclei_file) j["nuclei_file"] = *config.nuclei_file;
  if (config.estimator_file) j["estimator_file"] = *config.estimator_file;
  if (config.n) j["n"] = *config.n;
  if (config.k) j["k"] = *config.k;
  if (!config.n_grid.empty()) j["n_grid"] = config.n_grid;
  if (!config.seeds.empty()) j["seeds"] = config.seeds;
  j["mc_m"] = config.mc_m;
  if (config.prototype_n) j["prototype_n"] = *config.prototype_n;
  if (config.epsilon) j["epsilon"] = *config.epsilon;
  if (config.trials) j["trials"] = *config.trials;
  j["jobs"] = config.jobs;
  j["timings"] = config.timings;
  if (config.out) j["out"] = *config.out;
  if (config.svg) j["svg"] = *config.svg;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(errc::parse_error, path + ": line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": malformed JSON");
  }
  return config_from_json(j);
}

}  // namespace frechet::cli
