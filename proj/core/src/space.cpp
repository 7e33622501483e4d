#include "frechet/space.hpp"

#include <cmath>
#include <string>

#include "frechet/error.hpp"

namespace frechet {

const char* to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::density_grid: return "density-grid";
    case SpaceKind::spd_matrix: return "spd-matrix";
  }
  return "unknown";
}

const char* to_string(MetricId metric) noexcept {
  switch (metric) {
    case MetricId::euclidean_norm: return "euclidean-norm";
    case MetricId::l1: return "l1";
    case MetricId::total_variation: return "total-variation";
    case MetricId::frobenius: return "frobenius";
  }
  return "unknown";
}

SpaceDescriptor SpaceDescriptor::euclidean(std::size_t d) {
  if (d == 0) throw Error(errc::bad_parameter, "euclidean dimension must be positive");
  return {SpaceKind::euclidean, d, 0.0, MetricId::euclidean_norm};
}

SpaceDescriptor SpaceDescriptor::density_grid(std::size_t bins, double bin_width,
                                              MetricId metric) {
  if (bins == 0) throw Error(errc::bad_parameter, "density grid needs at least one bin");
  if (!(bin_width > 0.0)) throw Error(errc::bad_parameter, "bin width must be positive");
  if (metric != MetricId::l1 && metric != MetricId::total_variation) {
    throw Error(errc::bad_parameter,
                std::string("density grid supports l1 or total-variation, got ") +
                    to_string(metric));
  }
  return {SpaceKind::density_grid, bins, bin_width, metric};
}

SpaceDescriptor SpaceDescriptor::spd_matrix(std::size_t d) {
  if (d == 0) throw Error(errc::bad_parameter, "spd dimension must be positive");
  return {SpaceKind::spd_matrix, d, 0.0, MetricId::frobenius};
}

SpaceDescriptor space_of(const Point& p) {
  switch (p.kind()) {
    case PointKind::vector: return SpaceDescriptor::euclidean(p.dimension());
    case PointKind::histogram: return SpaceDescriptor::density_grid(p.dimension(), p.bin_width());
    case PointKind::spd: return SpaceDescriptor::spd_matrix(p.dimension());
  }
  throw Error(errc::unsupported, "unknown point kind");
}

static PointKind expected_kind(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::euclidean: return PointKind::vector;
    case SpaceKind::density_grid: return PointKind::histogram;
    case SpaceKind::spd_matrix: return PointKind::spd;
  }
  return PointKind::vector;
}

bool in_space(const SpaceDescriptor& space, const Point& p) noexcept {
  if (p.kind() != expected_kind(space.kind)) return false;
  if (p.dimension() != space.dimension) return false;
  if (space.kind == SpaceKind::density_grid &&
      std::abs(p.bin_width() - space.bin_width) > 1e-12) {
    return false;
  }
  return true;
}

bool same_points(const SpaceDescriptor& a, const SpaceDescriptor& b) noexcept {
  return a.kind == b.kind && a.dimension == b.dimension &&
         (a.kind != SpaceKind::density_grid || std::abs(a.bin_width - b.bin_width) <= 1e-12);
}

void require_in_space(const SpaceDescriptor& space, const Point& p) {
  if (p.kind() != expected_kind(space.kind)) {
    throw Error(errc::kind_mismatch, std::string("space holds ") +
                                         to_string(expected_kind(space.kind)) +
                                         " points, got " + to_string(p.kind()));
  }
  if (p.dimension() != space.dimension) {
    throw Error(errc::dimension_mismatch,
                "space dimension " + std::to_string(space.dimension) + ", point dimension " +
                    std::to_string(p.dimension()));
  }
  if (space.kind == SpaceKind::density_grid &&
      std::abs(p.bin_width() - space.bin_width) > 1e-12) {
    throw Error(errc::dimension_mismatch,
                "space bin width " + std::to_string(space.bin_width) + ", point bin width " +
                    std::to_string(p.bin_width()));
  }
}

double distance(const SpaceDescriptor& space, const Point& a, const Point& b) {
  require_in_space(space, a);
  require_in_space(space, b);
  const std::vector<double>& av = a.values();
  const std::vector<double>& bv = b.values();
  switch (space.metric) {
    case MetricId::euclidean_norm:
    case MetricId::frobenius: {
      double sum = 0.0;
      for (std::size_t i = 0; i < av.size(); ++i) {
        double d = av[i] - bv[i];
        sum += d * d;
      }
      return std::sqrt(sum);
    }
    case MetricId::l1:
    case MetricId::total_variation: {
      double sum = 0.0;
      for (std::size_t i = 0; i < av.size(); ++i) sum += std::abs(av[i] - bv[i]);
      sum *= space.bin_width;  // Riemann sum of the L1 integral
      return space.metric == MetricId::l1 ? sum : 0.5 * sum;
    }
  }
  throw Error(errc::unsupported, "unknown metric");
}

}  // namespace frechet
