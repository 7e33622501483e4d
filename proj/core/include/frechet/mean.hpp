#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frechet/loss.hpp"
#include "frechet/point.hpp"
#include "frechet/rng.hpp"

namespace frechet {

/// Result of an argmin over a finite candidate set. index refers to the
/// candidate list that was scanned.
struct MeanEstimate {
  std::size_t index = 0;
  Point value;
  double empirical_risk = 0.0;
};

/// (1/n) * sum_i loss(y, sample_i), summed left to right.
double empirical_risk(const LossSpec& spec, const Point& y, std::span<const Point> sample);

/// Argmin of the empirical risk over the prototype list. Strict-less scan:
/// the first candidate attaining the minimum wins, so ties resolve to the
/// smallest index. Both lists must be non-empty.
MeanEstimate quantized_frechet_mean(const LossSpec& spec, std::span<const Point> sample,
                                    std::span<const Point> prototypes);

/// Sample-restricted variant: prototypes are the sample itself.
MeanEstimate restricted_frechet_mean(const LossSpec& spec, std::span<const Point> sample);

struct WeightedPoint {
  Point value;
  double weight = 0.0;
};

/// Exact minimiser of sum_i w_i * loss(y, atom_i) over the candidate list.
/// Oracle for finitely supported distributions; same tie rule as above.
MeanEstimate brute_force_frechet_mean(const LossSpec& spec, std::span<const WeightedPoint> atoms,
                                      std::span<const Point> candidates);

/// A pooled sample of size 2n cut into a learning half and a prototype half.
struct SampleSplit {
  std::vector<Point> learn;
  std::vector<Point> prototypes;
};

/// Shuffles the pool (Fisher-Yates under rng) and deals the first half to
/// learn, the second to prototypes. Pool size must be even and positive.
SampleSplit split_sample(std::span<const Point> pool, Rng& rng);
SampleSplit split_sample(std::span<const Point> pool, std::uint64_t seed);

}  // namespace frechet
