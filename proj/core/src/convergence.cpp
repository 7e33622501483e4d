#include "frechet/convergence.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "frechet/error.hpp"
#include "frechet/mean.hpp"
#include "frechet/piecewise.hpp"
#include "frechet/risk.hpp"
#include "frechet/voronoi.hpp"

namespace frechet {

KRule KRule::fixed(std::size_t k) {
  if (k == 0) throw Error(errc::bad_parameter, "fixed k must be positive");
  return KRule{Kind::fixed, k};
}

std::size_t KRule::value_for(std::size_t n) const {
  return kind == Kind::schedule ? default_k_schedule(n) : fixed_k;
}

static void check_grid(std::span<const std::size_t> n_grid, std::span<const std::uint64_t> seeds) {
  if (n_grid.empty()) throw Error(errc::bad_parameter, "empty n grid");
  if (seeds.empty()) throw Error(errc::bad_parameter, "empty seed list");
  for (std::size_t i = 0; i + 1 < n_grid.size(); ++i) {
    if (n_grid[i] >= n_grid[i + 1]) throw Error(errc::bad_parameter, "n grid must be ascending");
  }
  for (std::size_t n : n_grid) {
    if (n == 0) throw Error(errc::bad_parameter, "n must be positive");
  }
}

/// Runs count independent tasks on up to jobs threads. Each task writes only
/// its own output slot, so the result is schedule-independent.
static void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        task(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (failed.load()) std::rethrow_exception(failure);
}

static std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

RiskReport run_mean_convergence(const LossSpec& spec, const Sampler& sampler,
                                std::span<const std::size_t> n_grid,
                                std::span<const std::uint64_t> seeds,
                                const ConvergenceOptions& options) {
  check_grid(n_grid, seeds);
  if (sampler.spec().is_pair()) {
    throw Error(errc::unsupported, "mean convergence needs a point sampler");
  }
  if (!same_points(spec.space, sampler.spec().point_space())) {
    throw Error(errc::kind_mismatch, "loss space and sampler space hold different points");
  }

  const std::uint64_t master = sampler.seed();
  std::optional<double> oracle = oracle_risk(spec, sampler.spec());

  struct Task {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t n : n_grid) {
    for (std::uint64_t seed : seeds) tasks.push_back({n, seed});
  }
  std::vector<std::vector<RiskRow>> slots(tasks.size());

  run_tasks(tasks.size(), options.jobs, [&](std::size_t t) {
    const auto [n, seed] = tasks[t];
    auto start = std::chrono::steady_clock::now();
    Sampler data = sampler.reseeded(mix_seed(master, n, seed, SeedRole::data));
    std::vector<Point> pool = data.draw(2 * n);
    SampleSplit split = split_sample(pool, mix_seed(master, n, seed, SeedRole::split));

    MeanEstimate quantized = quantized_frechet_mean(spec, split.learn, split.prototypes);
    MeanEstimate restricted = restricted_frechet_mean(spec, split.learn);

    // The evaluation stream ignores n on purpose: every grid point of one
    // seed sees the same draws, so excess-risk curves are paired across n.
    std::uint64_t mc_seed = mix_seed(master, 0, seed, SeedRole::mc);
    McEstimate mc_q = true_risk_mc(spec, quantized.value, sampler, options.mc_m, mc_seed);
    McEstimate mc_r = true_risk_mc(spec, restricted.value, sampler, options.mc_m, mc_seed);
    std::int64_t ms = elapsed_ms(start);

    auto row = [&](const char* name, const MeanEstimate& est, const McEstimate& mc) {
      RiskRow r;
      r.n = n;
      r.seed = seed;
      r.estimator = name;
      r.empirical_risk = est.empirical_risk;
      r.true_risk_mc = mc.estimate;
      r.mc_half_width = mc.half_width;
      r.oracle_risk = oracle;
      if (oracle) r.excess_risk = mc.estimate - *oracle;
      r.wall_time_ms = ms;
      return r;
    };
    slots[t] = {row("quantized", quantized, mc_q), row("restricted", restricted, mc_r)};
  });

  RiskReport report;
  for (std::vector<RiskRow>& slot : slots) {
    for (RiskRow& row : slot) report.rows.push_back(std::move(row));
  }
  report.sort_rows();
  return report;
}

RiskReport run_regression_convergence(const LossSpec& spec, const Sampler& pair_sampler,
                                      std::span<const std::size_t> n_grid,
                                      std::span<const std::uint64_t> seeds, const KRule& k_rule,
                                      const ConvergenceOptions& options) {
  check_grid(n_grid, seeds);
  if (!pair_sampler.spec().is_pair()) {
    throw Error(errc::unsupported, "regression convergence needs a pair sampler");
  }
  if (!same_points(spec.space, pair_sampler.spec().point_space())) {
    throw Error(errc::kind_mismatch, "loss space and response space hold different points");
  }

  const std::uint64_t master = pair_sampler.seed();
  const SamplerSpec& x_spec = *pair_sampler.spec().x;
  const SpaceDescriptor x_space = pair_sampler.spec().x_space();
  std::optional<double> oracle = oracle_risk(spec, pair_sampler.spec());

  struct Task {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t n : n_grid) {
    for (std::uint64_t seed : seeds) tasks.push_back({n, seed});
  }
  std::vector<RiskRow> slots(tasks.size());

  run_tasks(tasks.size(), options.jobs, [&](std::size_t t) {
    const auto [n, seed] = tasks[t];
    auto start = std::chrono::steady_clock::now();
    Sampler data = pair_sampler.reseeded(mix_seed(master, n, seed, SeedRole::data));
    std::vector<LabeledPoint> sample = data.draw_pairs(n);

    std::size_t k = k_rule.value_for(n);
    Sampler nuclei_stream(x_spec, mix_seed(master, n, seed, SeedRole::nuclei));
    VoronoiPartition partition = make_partition(x_space, nuclei_stream.draw(k));

    std::size_t proto_n = options.prototype_n.value_or(n);
    Sampler proto_stream =
        pair_sampler.reseeded(mix_seed(master, n, seed, SeedRole::prototypes));
    std::vector<LabeledPoint> proto_pairs = proto_stream.draw_pairs(proto_n);
    std::vector<Point> prototypes;
    prototypes.reserve(proto_n);
    for (LabeledPoint& p : proto_pairs) prototypes.push_back(std::move(p.y));

    PiecewiseEstimator fitted = fit_piecewise(spec, partition, sample, prototypes);
    double emp = 0.0;
    for (const LabeledPoint& p : sample) emp += loss(spec, p.y, fitted.predict(p.x));
    emp /= static_cast<double>(sample.size());

    McEstimate mc = true_risk_mc(spec, fitted, pair_sampler, options.mc_m,
                                 mix_seed(master, 0, seed, SeedRole::mc));

    RiskRow row;
    row.n = n;
    row.k = k;
    row.seed = seed;
    row.estimator = "piecewise";
    row.empirical_risk = emp;
    row.true_risk_mc = mc.estimate;
    row.mc_half_width = mc.half_width;
    row.oracle_risk = oracle;
    if (oracle) row.excess_risk = mc.estimate - *oracle;
    row.wall_time_ms = elapsed_ms(start);
    slots[t] = std::move(row);
  });

  RiskReport report;
  report.rows = std::move(slots);
  report.sort_rows();
  return report;
}

HoeffdingResult hoeffding_deviation_check(const LossSpec& spec, const Sampler& sampler,
                                          std::size_t n, double epsilon, std::size_t trials) {
  if (!spec.bound) throw Error(errc::unsupported, "deviation bound needs a bounded loss");
  if (trials < 100) {
    throw Error(errc::bad_parameter, "need >= 100 trials, got " + std::to_string(trials));
  }
  if (n == 0 || !(epsilon > 0.0)) {
    throw Error(errc::bad_parameter, "need positive n and epsilon");
  }
  if (sampler.spec().is_pair()) {
    throw Error(errc::unsupported, "deviation check needs a point sampler");
  }

  const std::uint64_t master = sampler.seed();
  const double big = *spec.bound;
  double bound = std::min(
      1.0, 2.0 * std::exp(-2.0 * static_cast<double>(n) * epsilon * epsilon / (big * big) +
                          std::log(static_cast<double>(n))));

  std::size_t exceed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Sampler stream = sampler.reseeded(mix_seed(master, t, n, SeedRole::trial));
    std::vector<Point> learn = stream.draw(n);
    std::vector<Point> prototypes = stream.draw(n);
    bool over = false;
    for (std::size_t j = 0; j < prototypes.size() && !over; ++j) {
      double emp = empirical_risk(spec, prototypes[j], learn);
      std::optional<double> truth = exact_risk(spec, prototypes[j], sampler.spec());
      if (!truth) {
        truth = true_risk_mc(spec, prototypes[j], sampler, 100000,
                             mix_seed(master, t, j, SeedRole::mc))
                    .estimate;
      }
      over = std::abs(emp - *truth) > epsilon;
    }
    if (over) ++exceed;
  }

  HoeffdingResult result;
  result.trials = trials;
  result.exceed_count = exceed;
  result.observed_freq = static_cast<double>(exceed) / static_cast<double>(trials);
  result.bound = bound;
  double p = result.observed_freq;
  result.binom_half_width = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  result.passes = result.observed_freq <= result.bound + 3.0 * result.binom_half_width;
  return result;
}

}  // namespace frechet
