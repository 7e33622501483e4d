#include "commands.hpp"

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "frechet/error.hpp"
#include "frechet/log.hpp"
#include "frechet/mean.hpp"
#include "frechet/piecewise.hpp"
#include "frechet/report.hpp"
#include "frechet/risk.hpp"
#include "frechet/svg.hpp"
#include "frechet/voronoi.hpp"

namespace frechet::cli {

namespace {

[[noreturn]] void missing(const std::string& command, const char* what) {
  throw Error(errc::config_error, "command \"" + command + "\" needs " + what);
}

SpaceDescriptor require_space(const ExperimentConfig& config) {
  if (!config.space) missing(config.command, "a \"space\"");
  return build_space(*config.space);
}

LossSpec require_loss(const ExperimentConfig& config, const SpaceDescriptor& space) {
  if (!config.loss) missing(config.command, "a \"loss\"");
  return build_loss(*config.loss, space);
}

void emit(const ExperimentConfig& config, const std::string& text) {
  std::fputs(text.c_str(), stdout);
  if (config.out) write_file_atomic(*config.out, text);
}

std::vector<Point> load_points(const ExperimentConfig& config) {
  if (config.input_file) return read_points_jsonl(*config.input_file);
  if (!config.n) missing(config.command, "\"n\" (sample size) with a sampler source");
  return build_sampler(config).draw(*config.n);
}

int run_mean(const ExperimentConfig& config) {
  SpaceDescriptor space = require_space(config);
  LossSpec spec = require_loss(config, space);
  std::vector<Point> prototypes;
  bool quantized = config.prototype_file.has_value();
  if (quantized) prototypes = read_points_jsonl(*config.prototype_file);
  std::vector<Point> sample = load_points(config);

  MeanEstimate estimate = quantized ? quantized_frechet_mean(spec, sample, prototypes)
                                    : restricted_frechet_mean(spec, sample);
  emit(config, to_json(estimate).dump() + "\n");
  return 0;
}

int run_regress(const ExperimentConfig& config) {
  SpaceDescriptor y_space = require_space(config);
  LossSpec spec = require_loss(config, y_space);

  // load phase: every referenced source is read before any fitting starts
  std::vector<LabeledPoint> data;
  std::optional<Sampler> sampler;
  if (config.input_file) {
    data = read_labeled_jsonl(*config.input_file);
  } else {
    if (!config.n) missing(config.command, "\"n\" (sample size) with a sampler source");
    sampler.emplace(build_sampler(config));
    if (!sampler->spec().is_pair()) missing(config.command, "a regression-pair sampler");
    data = sampler->draw_pairs(*config.n);
  }
  if (data.empty()) throw Error(errc::empty_input, "no labeled records");

  std::vector<Point> nuclei;
  if (config.nuclei_file) {
    nuclei = read_points_jsonl(*config.nuclei_file);
  } else {
    if (!config.k) missing(config.command, "\"nuclei_file\" or a nucleus count \"k\"");
    if (sampler) {
      Sampler stream(*sampler->spec().x, mix_seed(sampler->seed(), 0, 0, SeedRole::nuclei));
      nuclei = stream.draw(*config.k);
    } else {
      log_warn("nuclei subsampled from the labeled covariates; independence is violated");
      for (std::size_t i = 0; i < *config.k && i < data.size(); ++i) {
        nuclei.push_back(data[i].x);
      }
    }
  }
  if (nuclei.empty()) throw Error(errc::empty_input, "no nuclei");

  std::vector<Point> prototypes;
  if (config.prototype_file) {
    prototypes = read_points_jsonl(*config.prototype_file);
  } else {
    for (const LabeledPoint& p : data) prototypes.push_back(p.y);
  }

  SpaceDescriptor x_space = space_of(nuclei[0]);
  VoronoiPartition partition = make_partition(x_space, std::move(nuclei));
  PiecewiseEstimator fitted = fit_piecewise(spec, partition, data, prototypes);
  emit(config, to_json(fitted).dump() + "\n");
  return 0;
}

int run_predict(const ExperimentConfig& config) {
  if (!config.estimator_file) missing(config.command, "an \"estimator_file\"");
  if (!config.input_file) missing(config.command, "an \"input_file\" of covariate points");
  json doc;
  try {
    doc = json::parse(read_file(*config.estimator_file));
  } catch (const nlohmann::json::parse_error&) {
    throw Error(errc::parse_error, *config.estimator_file + ": malformed JSON");
  }
  PiecewiseEstimator estimator = piecewise_from_json(doc);
  std::vector<Point> xs = read_points_jsonl(*config.input_file);

  std::string out;
  for (const Point& x : xs) out += to_json(estimator.predict(x)).dump() + "\n";
  emit(config, out);
  return 0;
}

ConvergenceOptions options_of(const ExperimentConfig& config) {
  ConvergenceOptions options;
  options.mc_m = config.mc_m;
  options.jobs = config.jobs;
  options.prototype_n = config.prototype_n;
  return options;
}

int run_converge(const ExperimentConfig& config, bool regression) {
  SpaceDescriptor space = require_space(config);
  LossSpec spec = require_loss(config, space);
  Sampler sampler = build_sampler(config);
  if (config.n_grid.empty()) missing(config.command, "a non-empty \"n_grid\"");
  if (config.seeds.empty()) missing(config.command, "a non-empty \"seeds\" list");

  RiskReport report;
  if (regression) {
    KRule k_rule = config.k_rule ? build_k_rule(*config.k_rule) : KRule::schedule();
    report = run_regression_convergence(spec, sampler, config.n_grid, config.seeds, k_rule,
                                        options_of(config));
  } else {
    report = run_mean_convergence(spec, sampler, config.n_grid, config.seeds, options_of(config));
  }

  std::string csv = report.to_csv(config.timings);
  if (config.out) {
    write_file_atomic(*config.out, csv);
  } else {
    std::fputs(csv.c_str(), stdout);
  }
  if (config.svg) emit_convergence_svg(report, *config.svg);
  return 0;
}

int run_verify_loss(const ExperimentConfig& config) {
  SpaceDescriptor space = require_space(config);
  LossSpec spec = require_loss(config, space);
  std::vector<Point> sample = load_points(config);
  ConditionReport report = verify_loss_conditions(spec, sample);

  json j;
  j["max_loss"] = report.max_loss;
  j["boundedness"] = to_string(report.boundedness);
  j["max_tr_ratio"] = report.max_tr_ratio;
  j["tr"] = to_string(report.tr);
  j["max_lr_ratio"] = report.max_lr_ratio;
  j["lr"] = to_string(report.lr);
  std::string text = j.dump() + "\n";
  std::fputs(text.c_str(), stdout);
  if (config.out) write_file_atomic(*config.out, text);
  return report.all_claimed_pass() ? 0 : 1;
}

int run_hoeffding(const ExperimentConfig& config) {
  SpaceDescriptor space = require_space(config);
  LossSpec spec = require_loss(config, space);
  Sampler sampler = build_sampler(config);
  if (!config.n) missing(config.command, "\"n\"");
  if (!config.epsilon) missing(config.command, "\"epsilon\"");
  if (!config.trials) missing(config.command, "\"trials\"");

  HoeffdingResult result =
      hoeffding_deviation_check(spec, sampler, *config.n, *config.epsilon, *config.trials);
  json j;
  j["observed_freq"] = result.observed_freq;
  j["bound"] = result.bound;
  j["trials"] = result.trials;
  j["exceed_count"] = result.exceed_count;
  j["binom_half_width"] = result.binom_half_width;
  j["passes"] = result.passes;
  std::string text = j.dump() + "\n";
  std::fputs(text.c_str(), stdout);
  if (config.out) write_file_atomic(*config.out, text);
  return result.passes ? 0 : 1;
}

}  // namespace

int run_command(const ExperimentConfig& config) {
  if (config.command == "mean") return run_mean(config);
  if (config.command == "regress") return run_regress(config);
  if (config.command == "predict") return run_predict(config);
  if (config.command == "mean-converge") return run_converge(config, false);
  if (config.command == "regress-converge") return run_converge(config, true);
  if (config.command == "verify-loss") return run_verify_loss(config);
  if (config.command == "hoeffding") return run_hoeffding(config);
  throw Error(errc::config_error, "unknown command \"" + config.command + "\"");
}

}  // namespace frechet::cli
