#include "frechet/piecewise.hpp"

#include <vector>

#include "frechet/error.hpp"
#include "frechet/log.hpp"

namespace frechet {

const Point& PiecewiseEstimator::predict(const Point& x) const {
  return values[partition.cell_of(x)];
}

PiecewiseEstimator fit_piecewise(const LossSpec& spec, const VoronoiPartition& partition,
                                 std::span<const LabeledPoint> sample,
                                 std::span<const Point> prototypes) {
  if (sample.empty()) throw Error(errc::empty_input, "regression sample is empty");
  if (prototypes.empty()) throw Error(errc::empty_input, "prototype set is empty");
  if (partition.nuclei.empty()) throw Error(errc::empty_input, "partition has no nuclei");
  if (spec.space.kind != SpaceKind::euclidean) {
    // The consistency theory for the regression estimator is stated for
    // linear response spaces; other spaces still run, but are flagged.
    log_warn("piecewise fit on a non-linear response space");
  }
  for (const LabeledPoint& p : sample) require_in_space(spec.space, p.y);
  for (const Point& p : prototypes) require_in_space(spec.space, p);

  const std::size_t k = partition.size();
  std::vector<std::size_t> cell(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) cell[i] = partition.cell_of(sample[i].x);

  PiecewiseEstimator out;
  out.partition = partition;
  out.values.reserve(k);

  // Per-cell loss sums for every prototype; one pass over (prototype, point).
  std::vector<double> sums(k);
  std::vector<std::size_t> best_index(k, 0);
  std::vector<double> best_sum(k, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < sample.size(); ++i) ++counts[cell[i]];

  for (std::size_t p = 0; p < prototypes.size(); ++p) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      sums[cell[i]] += loss(spec, prototypes[p], sample[i].y);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (p == 0 || sums[j] < best_sum[j]) {
        best_index[j] = p;
        best_sum[j] = sums[j];
      }
    }
  }

  // Empty cells carry no constraint; use the unconditional minimiser.
  std::vector<Point> ys;
  MeanEstimate fallback;
  bool have_fallback = false;
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] > 0) continue;
    if (!have_fallback) {
      ys.reserve(sample.size());
      for (const LabeledPoint& p : sample) ys.push_back(p.y);
      fallback = quantized_frechet_mean(spec, ys, prototypes);
      have_fallback = true;
    }
    out.fallback_cells.push_back(j);
  }
  for (std::size_t j = 0; j < k; ++j) {
    out.values.push_back(counts[j] > 0 ? prototypes[best_index[j]] : fallback.value);
  }
  return out;
}

}  // namespace frechet
