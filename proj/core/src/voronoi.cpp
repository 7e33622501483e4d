#include "frechet/voronoi.hpp"

#include <cmath>

#include "frechet/error.hpp"

namespace frechet {

std::size_t VoronoiPartition::cell_of(const Point& x) const {
  require_in_space(space, x);
  std::size_t best = 0;
  double best_dist = distance(space, x, nuclei[0]);
  for (std::size_t j = 1; j < nuclei.size(); ++j) {
    double d = distance(space, x, nuclei[j]);
    if (d < best_dist) {  // ties stay with the earlier nucleus
      best = j;
      best_dist = d;
    }
  }
  return best;
}

VoronoiPartition make_partition(SpaceDescriptor space, std::vector<Point> nuclei) {
  if (nuclei.empty()) throw Error(errc::empty_input, "partition needs at least one nucleus");
  for (const Point& p : nuclei) require_in_space(space, p);
  return VoronoiPartition{space, std::move(nuclei)};
}

std::vector<std::size_t> voronoi_assign(const VoronoiPartition& partition,
                                        std::span<const Point> xs) {
  std::vector<std::size_t> cells;
  cells.reserve(xs.size());
  for (const Point& x : xs) cells.push_back(partition.cell_of(x));
  return cells;
}

std::size_t default_k_schedule(std::size_t n) noexcept {
  if (n <= 1) return 1;
  auto k = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
  while ((k + 1) * (k + 1) <= n) ++k;  // guard the floor against fp rounding
  while (k > 1 && k * k > n) --k;
  return k < 1 ? 1 : k;
}

}  // namespace frechet
