#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frechet/loss.hpp"
#include "frechet/mean.hpp"
#include "frechet/point.hpp"
#include "frechet/voronoi.hpp"

namespace frechet {

struct LabeledPoint {
  Point x;
  Point y;
};

/// Piecewise-constant regression estimate: one fitted value per Voronoi cell.
struct PiecewiseEstimator {
  VoronoiPartition partition;
  std::vector<Point> values;                // one per cell, same order as nuclei
  std::vector<std::size_t> fallback_cells;  // cells that saw no sample point

  const Point& predict(const Point& x) const;
};

/// Fits the estimator: each cell's value minimises the empirical risk over
/// the shared prototype list, restricted to the labels that land in the cell.
/// Cells with no sample fall back to the unconditional minimiser over the
/// whole label sample and are recorded in fallback_cells.
PiecewiseEstimator fit_piecewise(const LossSpec& spec, const VoronoiPartition& partition,
                                 std::span<const LabeledPoint> sample,
                                 std::span<const Point> prototypes);

}  // namespace frechet
