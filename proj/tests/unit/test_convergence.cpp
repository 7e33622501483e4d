#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "frechet/convergence.hpp"
#include "frechet/error.hpp"
#include "frechet/mean.hpp"
#include "frechet/risk.hpp"
#include "frechet/rng.hpp"
#include "helpers.hpp"

using namespace frechet;

namespace {

LossSpec scalar_squared() { return LossSpec::squared_norm(SpaceDescriptor::euclidean(1)); }

}  // namespace

TEST_SUITE_BEGIN("convergence");

TEST_CASE("mean run emits two sorted rows per grid point and seed") {
  LossSpec spec = scalar_squared();
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 42);
  std::vector<std::size_t> grid = {8, 16};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  ConvergenceOptions options;
  options.mc_m = 1000;

  RiskReport report = run_mean_convergence(spec, sampler, grid, seeds, options);
  REQUIRE(report.rows.size() == 2 * grid.size() * seeds.size());

  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const RiskRow& a = report.rows[i];
    const RiskRow& b = report.rows[i + 1];
    bool ordered = a.n < b.n || (a.n == b.n && a.seed < b.seed) ||
                   (a.n == b.n && a.seed == b.seed && a.estimator <= b.estimator);
    CHECK(ordered);
  }
  for (std::size_t i = 0; i < report.rows.size(); i += 2) {
    CHECK(report.rows[i].estimator == "quantized");
    CHECK(report.rows[i + 1].estimator == "restricted");
    CHECK(report.rows[i].n == report.rows[i + 1].n);
    CHECK(report.rows[i].seed == report.rows[i + 1].seed);
    CHECK_FALSE(report.rows[i].k.has_value());  // no cell count for mean runs
  }
}

TEST_CASE("mean rows can be reproduced from their seeds alone") {
  LossSpec spec = scalar_squared();
  SamplerSpec dist = SamplerSpec::uniform_scalar(0.0, 1.0);
  const std::uint64_t master = 4242;
  Sampler sampler(dist, master);
  std::vector<std::size_t> grid = {16};
  std::vector<std::uint64_t> seeds = {9};
  ConvergenceOptions options;
  options.mc_m = 2000;

  RiskReport report = run_mean_convergence(spec, sampler, grid, seeds, options);
  REQUIRE(report.rows.size() == 2);
  const RiskRow& quant = report.rows[0];
  const RiskRow& restr = report.rows[1];

  // Re-run the documented pipeline by hand.
  Sampler data = sampler.reseeded(mix_seed(master, 16, 9, SeedRole::data));
  std::vector<Point> pool = data.draw(32);
  SampleSplit split = split_sample(pool, mix_seed(master, 16, 9, SeedRole::split));
  MeanEstimate q = quantized_frechet_mean(spec, split.learn, split.prototypes);
  MeanEstimate r = restricted_frechet_mean(spec, split.learn);
  std::uint64_t mc_seed = mix_seed(master, 0, 9, SeedRole::mc);
  McEstimate mc_q = true_risk_mc(spec, q.value, sampler, options.mc_m, mc_seed);
  McEstimate mc_r = true_risk_mc(spec, r.value, sampler, options.mc_m, mc_seed);

  CHECK(quant.empirical_risk == q.empirical_risk);
  CHECK(quant.true_risk_mc == mc_q.estimate);
  CHECK(quant.mc_half_width == mc_q.half_width);
  CHECK(restr.empirical_risk == r.empirical_risk);
  CHECK(restr.true_risk_mc == mc_r.estimate);
  REQUIRE(quant.oracle_risk.has_value());
  CHECK(*quant.oracle_risk == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  REQUIRE(quant.excess_risk.has_value());
  CHECK(*quant.excess_risk == mc_q.estimate - *quant.oracle_risk);
}

TEST_CASE("a point-mass distribution has exactly zero excess everywhere") {
  LossSpec spec = scalar_squared();
  Sampler sampler(SamplerSpec::point_mass(test::vec({3.0})), 7);
  std::vector<std::size_t> grid = {4, 8};
  std::vector<std::uint64_t> seeds = {1, 2};
  ConvergenceOptions options;
  options.mc_m = 500;

  RiskReport report = run_mean_convergence(spec, sampler, grid, seeds, options);
  for (const RiskRow& row : report.rows) {
    CHECK(row.empirical_risk == 0.0);
    CHECK(row.true_risk_mc == 0.0);
    CHECK(row.mc_half_width == 0.0);
    REQUIRE(row.excess_risk.has_value());
    CHECK(*row.excess_risk == 0.0);
  }
}

TEST_CASE("excess risk never undershoots minus twice the half width") {
  LossSpec spec = scalar_squared();
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 314);
  std::vector<std::size_t> grid = {32, 64};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  ConvergenceOptions options;
  options.mc_m = 20000;

  RiskReport report = run_mean_convergence(spec, sampler, grid, seeds, options);
  for (const RiskRow& row : report.rows) {
    REQUIRE(row.excess_risk.has_value());
    CHECK(*row.excess_risk >= -2.0 * row.mc_half_width);
  }
}

TEST_CASE("parallel and serial schedules produce identical bytes") {
  LossSpec spec = scalar_squared();
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 1001);
  std::vector<std::size_t> grid = {8, 16, 32};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4};

  ConvergenceOptions serial;
  serial.mc_m = 1000;
  serial.jobs = 1;
  ConvergenceOptions parallel = serial;
  parallel.jobs = 3;

  RiskReport a = run_mean_convergence(spec, sampler, grid, seeds, serial);
  RiskReport b = run_mean_convergence(spec, sampler, grid, seeds, parallel);
  CHECK(a.to_csv() == b.to_csv());

  RiskReport c = run_regression_convergence(
      scalar_squared(),
      Sampler(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                           LinkSpec::identity(), NoiseSpec::uniform(0.1)),
              55),
      grid, seeds, KRule::schedule(), serial);
  RiskReport d = run_regression_convergence(
      scalar_squared(),
      Sampler(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                           LinkSpec::identity(), NoiseSpec::uniform(0.1)),
              55),
      grid, seeds, KRule::schedule(), parallel);
  CHECK(c.to_csv() == d.to_csv());
}

TEST_CASE("k rules") {
  CHECK(KRule::fixed(3).value_for(10) == 3);
  CHECK(KRule::fixed(3).value_for(100000) == 3);
  CHECK(KRule::schedule().value_for(4096) == 64);
  CHECK(KRule::schedule().value_for(1) == 1);
  CHECK_THROWS_AS(KRule::fixed(0), Error);
}

TEST_CASE("regression run emits one row per grid point and seed with k set") {
  LossSpec spec = scalar_squared();
  Sampler pairs(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                             LinkSpec::identity(), NoiseSpec::uniform(0.1)),
                77);
  std::vector<std::size_t> grid = {16, 64};
  std::vector<std::uint64_t> seeds = {1, 2};
  ConvergenceOptions options;
  options.mc_m = 1000;

  RiskReport report = run_regression_convergence(spec, pairs, grid, seeds,
                                                 KRule::schedule(), options);
  REQUIRE(report.rows.size() == grid.size() * seeds.size());
  for (const RiskRow& row : report.rows) {
    CHECK(row.estimator == "piecewise");
    REQUIRE(row.k.has_value());
    CHECK(*row.k == default_k_schedule(row.n));
    REQUIRE(row.oracle_risk.has_value());
    CHECK(*row.oracle_risk == doctest::Approx(0.01 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("a constant response collapses regression excess to exact zero") {
  // y == v regardless of x: every prototype equals v, every cell fits v.
  LossSpec spec = scalar_squared();
  Sampler pairs(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                             LinkSpec::constant(test::vec({2.0})),
                                             NoiseSpec::none()),
                88);
  std::vector<std::size_t> grid = {8, 32};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  ConvergenceOptions options;
  options.mc_m = 500;

  RiskReport report = run_regression_convergence(spec, pairs, grid, seeds,
                                                 KRule::schedule(), options);
  for (const RiskRow& row : report.rows) {
    CHECK(row.empirical_risk == 0.0);
    CHECK(row.true_risk_mc == 0.0);
    REQUIRE(row.excess_risk.has_value());
    CHECK(*row.excess_risk == 0.0);
  }
}

TEST_CASE("prototype-size override swaps the split for independent draws") {
  LossSpec spec = scalar_squared();
  Sampler pairs(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                             LinkSpec::identity(), NoiseSpec::uniform(0.1)),
                99);
  std::vector<std::size_t> grid = {32};
  std::vector<std::uint64_t> seeds = {5};
  ConvergenceOptions small;
  small.mc_m = 1000;
  ConvergenceOptions big = small;
  big.prototype_n = 128;

  RiskReport a = run_regression_convergence(spec, pairs, grid, seeds, KRule::schedule(), small);
  RiskReport b = run_regression_convergence(spec, pairs, grid, seeds, KRule::schedule(), big);
  // Different prototype pools change the fitted values, hence the risks.
  CHECK(a.rows[0].true_risk_mc != b.rows[0].true_risk_mc);
}

TEST_CASE("convergence runs validate their inputs") {
  LossSpec spec = scalar_squared();
  Sampler point(SamplerSpec::uniform_scalar(0.0, 1.0), 1);
  Sampler pairs(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                             LinkSpec::identity(), NoiseSpec::none()),
                1);
  std::vector<std::size_t> grid = {8};
  std::vector<std::uint64_t> seeds = {1};

  // Wrong sampler shape for each run.
  CHECK_THROWS_AS(run_mean_convergence(spec, pairs, grid, seeds), Error);
  CHECK_THROWS_AS(run_regression_convergence(spec, point, grid, seeds, KRule::schedule()),
                  Error);

  // Loss space incompatible with the sampled points.
  LossSpec spd_loss = LossSpec::frobenius(SpaceDescriptor::spd_matrix(2));
  CHECK_THROWS_AS(run_mean_convergence(spd_loss, point, grid, seeds), Error);

  // Grid abuse: empty, unsorted, zero n, empty seeds.
  std::vector<std::size_t> empty;
  CHECK_THROWS_AS(run_mean_convergence(spec, point, empty, seeds), Error);
  std::vector<std::size_t> unsorted = {16, 8};
  CHECK_THROWS_AS(run_mean_convergence(spec, point, unsorted, seeds), Error);
  std::vector<std::size_t> zero = {0, 8};
  CHECK_THROWS_AS(run_mean_convergence(spec, point, zero, seeds), Error);
  std::vector<std::uint64_t> no_seeds;
  CHECK_THROWS_AS(run_mean_convergence(spec, point, grid, no_seeds), Error);
}

TEST_CASE("deviation check matches the union-Hoeffding bound formula") {
  LossSpec spec = LossSpec::truncated(scalar_squared(), 1.0);
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 2024);
  HoeffdingResult result = hoeffding_deviation_check(spec, sampler, 128, 0.2, 100);

  double expected = std::min(1.0, 2.0 * std::exp(-2.0 * 128.0 * 0.04 + std::log(128.0)));
  CHECK(result.bound == doctest::Approx(expected).epsilon(1e-12));
  CHECK(result.trials == 100);
  CHECK(result.observed_freq == double(result.exceed_count) / 100.0);
}

TEST_CASE("deviations beyond the loss bound cannot happen") {
  // |empirical - true| <= L always, so epsilon = L is never exceeded.
  LossSpec spec = LossSpec::truncated(scalar_squared(), 1.0);
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 11);
  HoeffdingResult result = hoeffding_deviation_check(spec, sampler, 64, 1.0, 100);
  CHECK(result.exceed_count == 0);
  CHECK(result.observed_freq == 0.0);
  CHECK(result.binom_half_width == 0.0);
  CHECK(result.passes);
}

TEST_CASE("a vacuous bound of one passes regardless of the observations") {
  LossSpec spec = LossSpec::truncated(scalar_squared(), 1.0);
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 12);
  HoeffdingResult result = hoeffding_deviation_check(spec, sampler, 100, 0.01, 100);
  CHECK(result.bound == 1.0);
  CHECK(result.passes);
}

TEST_CASE("deviation check falls back to Monte Carlo references when needed") {
  // Gaussian draws have no closed-form risk; the reference is estimated.
  LossSpec spec = LossSpec::truncated(
      LossSpec::squared_norm(SpaceDescriptor::euclidean(1)), 2.0);
  Sampler sampler(SamplerSpec::gaussian_vector({0.0}, 1.0), 13);
  HoeffdingResult result = hoeffding_deviation_check(spec, sampler, 2, 1.0, 100);
  CHECK(result.bound == 1.0);  // 2 * exp(-2*2*1/4 + ln 2) > 1
  CHECK(result.passes);
}

TEST_CASE("deviation check validates its inputs") {
  LossSpec bounded = LossSpec::truncated(scalar_squared(), 1.0);
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 14);

  CHECK_THROWS_AS(hoeffding_deviation_check(scalar_squared(), sampler, 64, 0.2, 100), Error);
  CHECK_THROWS_AS(hoeffding_deviation_check(bounded, sampler, 64, 0.2, 99), Error);
  CHECK_THROWS_AS(hoeffding_deviation_check(bounded, sampler, 0, 0.2, 100), Error);
  CHECK_THROWS_AS(hoeffding_deviation_check(bounded, sampler, 64, 0.0, 100), Error);

  Sampler pairs(SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                             LinkSpec::identity(), NoiseSpec::none()),
                15);
  CHECK_THROWS_AS(hoeffding_deviation_check(bounded, pairs, 64, 0.2, 100), Error);
}

TEST_CASE("repeated small runs are deterministic end to end") {
  LossSpec spec = LossSpec::truncated(scalar_squared(), 1.0);
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 321);
  HoeffdingResult a = hoeffding_deviation_check(spec, sampler, 32, 0.25, 100);
  HoeffdingResult b = hoeffding_deviation_check(spec, sampler, 32, 0.25, 100);
  CHECK(a.observed_freq == b.observed_freq);
  CHECK(a.exceed_count == b.exceed_count);
  CHECK(a.bound == b.bound);
}

TEST_SUITE_END();
