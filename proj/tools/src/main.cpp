#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "config.hpp"
#include "frechet/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Frechet mean and Frechet regression experiments"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // flags may follow the subcommand name

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::optional<std::string> out;
  std::optional<std::string> svg;

  app.add_option("--config", config_path, "experiment config (JSON)")->required();
  app.add_option("--seed", seed, "override the sampler seed");
  app.add_option("--jobs", jobs, "worker thread bound for convergence runs");
  app.add_option("--out", out, "override the output path");
  app.add_option("--svg", svg, "override the convergence-chart path");

  // Subcommand names mirror the config's "command" field; when both are
  // given they must agree.
  for (const char* name : {"mean", "regress", "predict", "mean-converge", "regress-converge",
                           "verify-loss", "hoeffding"}) {
    app.add_subcommand(name)->ignore_case();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    frechet::cli::ExperimentConfig config = frechet::cli::load_config(config_path);
    if (!app.get_subcommands().empty()) {
      const std::string& chosen = app.get_subcommands().front()->get_name();
      if (config.command != chosen) {
        throw frechet::Error(frechet::errc::config_error,
                             "config command \"" + config.command +
                                 "\" does not match the \"" + chosen + "\" subcommand");
      }
    }
    if (seed) config.seed_override = *seed;
    if (jobs) {
      if (*jobs < 1) {
        throw frechet::Error(frechet::errc::config_error, "--jobs must be >= 1");
      }
      config.jobs = *jobs;
    }
    if (out) config.out = *out;
    if (svg) config.svg = *svg;
    return frechet::cli::run_command(config);
  } catch (const frechet::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
