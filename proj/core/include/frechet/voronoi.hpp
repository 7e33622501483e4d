#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frechet/point.hpp"
#include "frechet/space.hpp"

namespace frechet {

/// Cells of the partition induced by a nucleus list: x belongs to the cell of
/// the nearest nucleus, with ties going to the smaller nucleus index.
struct VoronoiPartition {
  SpaceDescriptor space;
  std::vector<Point> nuclei;

  std::size_t size() const noexcept { return nuclei.size(); }

  /// Index of the cell containing x. Strict-less scan over nuclei.
  std::size_t cell_of(const Point& x) const;
};

/// Builds a partition after validating every nucleus against the space.
/// Nuclei must be non-empty.
VoronoiPartition make_partition(SpaceDescriptor space, std::vector<Point> nuclei);

/// Cell index for each x, in order.
std::vector<std::size_t> voronoi_assign(const VoronoiPartition& partition,
                                        std::span<const Point> xs);

/// Cell-count schedule max(1, floor(sqrt(n))) used by the regression
/// convergence experiments; grows slowly enough that k*log(n)/n -> 0.
std::size_t default_k_schedule(std::size_t n) noexcept;

}  // namespace frechet
