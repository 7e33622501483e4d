#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frechet/convergence.hpp"
#include "frechet/io.hpp"
#include "frechet/loss.hpp"
#include "frechet/sampler.hpp"
#include "frechet/space.hpp"

namespace frechet::cli {

/// One experiment, as described by a single JSON document. Subobjects that
/// mirror library types (space, loss, sampler, k_rule) are kept as raw JSON
/// so the config round-trips exactly; builders materialize them on demand
/// and were already validated during parsing.
struct ExperimentConfig {
  std::string command;
  std::optional<json> space;
  std::optional<json> loss;
  std::optional<json> sampler;
  std::optional<json> k_rule;

  std::optional<std::string> input_file;
  std::optional<std::string> prototype_file;
  std::optional<std::string> nuclei_file;
  std::optional<std::string> estimator_file;

  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::vector<std::size_t> n_grid;
  std::vector<std::uint64_t> seeds;
  std::size_t mc_m = 100000;
  std::optional<std::size_t> prototype_n;
  std::optional<double> epsilon;
  std::optional<std::size_t> trials;
  int jobs = 1;
  bool timings = false;

  std::optional<std::string> out;
  std::optional<std::string> svg;

  /// Command-line overrides folded in after parsing.
  std::optional<std::uint64_t> seed_override;
};

ExperimentConfig config_from_json(const json& j);
json to_json(const ExperimentConfig& config);

/// Reads and parses the file; parse failures carry line/column.
ExperimentConfig load_config(const std::string& path);

SpaceDescriptor build_space(const json& j);
LossSpec build_loss(const json& j, const SpaceDescriptor& space);
SamplerSpec build_sampler_spec(const json& j);
KRule build_k_rule(const json& j);

/// Sampler seed: the --seed override, else the sampler's "seed" field, else 0.
Sampler build_sampler(const ExperimentConfig& config);

}  // namespace frechet::cli
