#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frechet/loss.hpp"
#include "frechet/report.hpp"
#include "frechet/sampler.hpp"

namespace frechet {

/// Cell-count rule for regression runs: either the default sqrt schedule or
/// a fixed k.
struct KRule {
  enum class Kind { schedule, fixed };
  Kind kind = Kind::schedule;
  std::size_t fixed_k = 1;

  static KRule schedule() { return {}; }
  static KRule fixed(std::size_t k);

  std::size_t value_for(std::size_t n) const;
};

struct ConvergenceOptions {
  std::size_t mc_m = 100000;
  int jobs = 1;
  /// Override for the prototype-sample size in regression runs; defaults to
  /// n, the schedule used throughout.
  std::optional<std::size_t> prototype_n;
};

/// For each (n, seed): draws 2n points from the sampler, splits them into a
/// learn half and a prototype half, fits the quantized and the restricted
/// mean on the learn half, and evaluates each by Monte Carlo. Two rows per
/// (n, seed), estimators "quantized" and "restricted".
///
/// Seeding: sub-seeds derive from (sampler seed, n, seed, role), so adding
/// grid points or seeds never perturbs existing rows. The Monte Carlo
/// sub-seed deliberately ignores n: all grid points of one seed share the
/// evaluation draws, so excess-risk comparisons across n are paired.
RiskReport run_mean_convergence(const LossSpec& spec, const Sampler& sampler,
                                std::span<const std::size_t> n_grid,
                                std::span<const std::uint64_t> seeds,
                                const ConvergenceOptions& options = {});

/// For each (n, seed): draws n labeled pairs, k = k_rule(n) nuclei from the
/// covariate marginal, and a fresh prototype sample of the response; fits the
/// piecewise estimator and evaluates it by Monte Carlo. One row per (n, seed),
/// estimator "piecewise", with the k column set.
RiskReport run_regression_convergence(const LossSpec& spec, const Sampler& pair_sampler,
                                      std::span<const std::size_t> n_grid,
                                      std::span<const std::uint64_t> seeds, const KRule& k_rule,
                                      const ConvergenceOptions& options = {});

struct HoeffdingResult {
  double observed_freq = 0.0;
  double bound = 1.0;
  std::size_t trials = 0;
  std::size_t exceed_count = 0;
  double binom_half_width = 0.0;  // 1.96 * sqrt(p(1-p)/trials)
  bool passes = false;            // observed <= bound + 3 * binom_half_width
};

/// Estimates P{ max over n prototypes |R_n(y) - R(y)| > epsilon } over
/// seeded trials and compares it with the union-Hoeffding bound
/// min(1, 2 exp(-2 n eps^2 / L^2 + ln n)). Requires a bounded loss and
/// trials >= 100. R(y) uses the exact closed form when available, otherwise
/// a 10^5-draw Monte Carlo reference per prototype.
HoeffdingResult hoeffding_deviation_check(const LossSpec& spec, const Sampler& sampler,
                                          std::size_t n, double epsilon, std::size_t trials);

}  // namespace frechet
