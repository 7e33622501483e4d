#pragma once

#include "config.hpp"

namespace frechet::cli {

/// Executes the configured command. Returns the process exit code: 0 on
/// success, 1 when a verification command ran cleanly but its check failed.
/// Structured errors propagate to the caller (exit 2).
int run_command(const ExperimentConfig& config);

}  // namespace frechet::cli
