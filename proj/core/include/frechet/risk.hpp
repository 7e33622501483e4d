#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "frechet/loss.hpp"
#include "frechet/piecewise.hpp"
#include "frechet/point.hpp"
#include "frechet/sampler.hpp"

namespace frechet {

struct McEstimate {
  double estimate = 0.0;
  double half_width = 0.0;  // 1.96 * sample sd / sqrt(m)
};

/// Monte Carlo risk of a constant predictor: mean loss over m fresh draws
/// from the sampler reseeded with seed. Requires m >= 100.
McEstimate true_risk_mc(const LossSpec& spec, const Point& y, const Sampler& sampler,
                        std::size_t m, std::uint64_t seed);

/// Monte Carlo risk of a fitted estimator over m fresh (x, y) pairs:
/// mean of loss(y_i, predict(x_i)).
McEstimate true_risk_mc(const LossSpec& spec, const PiecewiseEstimator& estimator,
                        const Sampler& pair_sampler, std::size_t m, std::uint64_t seed);

/// Exact optimal risk where a closed form exists:
///   uniform_scalar + squared_norm  -> (hi - lo)^2 / 12
///   uniform_scalar + norm          -> (hi - lo) / 4
///   gaussian_vector + squared_norm -> d * sigma^2
///   point_mass + anything          -> 0
///   regression_pair + squared_norm, deterministic link, centred noise
///                                  -> d * per-coordinate noise variance
/// Absent otherwise; callers fall back to a brute-force or Monte Carlo
/// baseline.
std::optional<double> oracle_risk(const LossSpec& spec, const SamplerSpec& sampler);

/// Exact risk of the specific point y (not the optimum): a finite weighted
/// sum for finitely supported samplers; the piecewise closed-form integral
/// for uniform_scalar under squared_norm / norm / their truncations. Absent
/// otherwise.
std::optional<double> exact_risk(const LossSpec& spec, const Point& y, const SamplerSpec& sampler);

}  // namespace frechet
