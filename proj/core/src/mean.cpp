#include "frechet/mean.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "frechet/error.hpp"

namespace frechet {

double empirical_risk(const LossSpec& spec, const Point& y, std::span<const Point> sample) {
  if (sample.empty()) throw Error(errc::empty_input, "empirical risk over an empty sample");
  double sum = 0.0;
  for (const Point& p : sample) sum += loss(spec, y, p);
  return sum / static_cast<double>(sample.size());
}

MeanEstimate quantized_frechet_mean(const LossSpec& spec, std::span<const Point> sample,
                                    std::span<const Point> prototypes) {
  if (sample.empty()) throw Error(errc::empty_input, "learn sample is empty");
  if (prototypes.empty()) throw Error(errc::empty_input, "prototype set is empty");
  std::size_t best = 0;
  double best_risk = empirical_risk(spec, prototypes[0], sample);
  for (std::size_t i = 1; i < prototypes.size(); ++i) {
    double risk = empirical_risk(spec, prototypes[i], sample);
    if (risk < best_risk) {  // strict: first minimum keeps the smallest index
      best = i;
      best_risk = risk;
    }
  }
  return MeanEstimate{best, prototypes[best], best_risk};
}

MeanEstimate restricted_frechet_mean(const LossSpec& spec, std::span<const Point> sample) {
  return quantized_frechet_mean(spec, sample, sample);
}

MeanEstimate brute_force_frechet_mean(const LossSpec& spec, std::span<const WeightedPoint> atoms,
                                      std::span<const Point> candidates) {
  if (atoms.empty()) throw Error(errc::empty_input, "support is empty");
  if (candidates.empty()) throw Error(errc::empty_input, "candidate set is empty");
  double total = 0.0;
  for (const WeightedPoint& a : atoms) {
    if (a.weight < 0.0) throw Error(errc::bad_weights, "negative weight");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(errc::bad_weights,
                "weights sum to " + std::to_string(total) + ", expected 1 within 1e-9");
  }
  std::size_t best = 0;
  double best_risk = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double risk = 0.0;
    for (const WeightedPoint& a : atoms) risk += a.weight * loss(spec, candidates[i], a.value);
    if (i == 0 || risk < best_risk) {
      best = i;
      best_risk = risk;
    }
  }
  return MeanEstimate{best, candidates[best], best_risk};
}

SampleSplit split_sample(std::span<const Point> pool, Rng& rng) {
  if (pool.empty() || pool.size() % 2 != 0) {
    throw Error(errc::bad_parameter,
                "split needs an even, positive pool size, got " + std::to_string(pool.size()));
  }
  std::vector<Point> shuffled(pool.begin(), pool.end());
  // Fisher-Yates with the explicit rejection-sampled index transform.
  for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.index(i + 1));
    std::swap(shuffled[i], shuffled[j]);
  }
  std::size_t half = shuffled.size() / 2;
  SampleSplit split;
  split.learn.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(half));
  split.prototypes.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(half), shuffled.end());
  return split;
}

SampleSplit split_sample(std::span<const Point> pool, std::uint64_t seed) {
  Rng rng(seed);
  return split_sample(pool, rng);
}

}  // namespace frechet
