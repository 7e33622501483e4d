#pragma once

#include <cstddef>

#include "frechet/point.hpp"

namespace frechet {

enum class SpaceKind { euclidean, density_grid, spd_matrix };
enum class MetricId { euclidean_norm, l1, total_variation, frobenius };

const char* to_string(SpaceKind kind) noexcept;
const char* to_string(MetricId metric) noexcept;

/// A separable metric space: which kind of points live in it, their
/// dimension, and the metric. Valid pairings:
///   euclidean    <-> euclidean-norm
///   density-grid <-> l1 or total-variation
///   spd-matrix   <-> frobenius
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::euclidean;
  std::size_t dimension = 0;  // d / bins / matrix dim
  double bin_width = 0.0;     // density-grid only
  MetricId metric = MetricId::euclidean_norm;

  static SpaceDescriptor euclidean(std::size_t d);
  static SpaceDescriptor density_grid(std::size_t bins, double bin_width,
                                      MetricId metric = MetricId::l1);
  static SpaceDescriptor spd_matrix(std::size_t d);

  bool operator==(const SpaceDescriptor&) const = default;
};

/// The space a point naturally lives in, with the default metric for its
/// kind (euclidean-norm, l1, frobenius).
SpaceDescriptor space_of(const Point& p);

/// True when the point's kind and dimension match the space.
bool in_space(const SpaceDescriptor& space, const Point& p) noexcept;

/// True when both spaces hold the same points (kind, dimension, bin width),
/// regardless of which metric they carry.
bool same_points(const SpaceDescriptor& a, const SpaceDescriptor& b) noexcept;

/// Throws a structured error naming both kinds (or both dimensions) when the
/// point does not belong to the space.
void require_in_space(const SpaceDescriptor& space, const Point& p);

/// Metric evaluation. Non-negative, symmetric, zero iff the points are equal
/// (within 1e-12), triangle inequality within 1e-9.
/// The density-grid L1 metric is the Riemann sum of the L1 integral:
/// sum_i |a_i - b_i| * bin_width; total-variation is half of it.
double distance(const SpaceDescriptor& space, const Point& a, const Point& b);

}  // namespace frechet
