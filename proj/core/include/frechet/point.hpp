#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace frechet {

enum class PointKind { vector, histogram, spd };

const char* to_string(PointKind kind) noexcept;

struct VectorData {
  std::vector<double> values;
};

/// Probability density on a regular grid: `values[i]` is the density over a
/// bin of width `bin_width`, so sum(values) * bin_width == 1.
struct HistogramData {
  std::vector<double> values;
  double bin_width = 1.0;
};

/// Symmetric positive semi-definite matrix (e.g. a graph Laplacian), stored
/// row-major as dim*dim values.
struct SpdData {
  std::size_t dim = 0;
  std::vector<double> values;
};

/// An element of one of the supported metric spaces. Immutable after
/// construction; the factory functions validate the kind invariants:
///   vector     - all entries finite
///   histogram  - entries >= 0, sum * bin_width == 1 within 1e-9
///   spd        - symmetric within 1e-9, eigenvalues >= -1e-9
class Point {
 public:
  /// Empty (dimension-0) vector; a placeholder that belongs to no space.
  Point() : value_(VectorData{}) {}

  static Point vector(std::vector<double> values);
  static Point histogram(std::vector<double> values, double bin_width);
  static Point spd(std::size_t dim, std::vector<double> values);

  PointKind kind() const noexcept {
    return static_cast<PointKind>(value_.index());
  }

  /// d for vectors, bin count for histograms, matrix dimension for spd.
  std::size_t dimension() const noexcept;

  /// Flat value storage (row-major for spd).
  const std::vector<double>& values() const noexcept;

  /// Histogram bin width; 0 for other kinds.
  double bin_width() const noexcept;

  bool operator==(const Point& other) const noexcept;
  bool operator!=(const Point& other) const noexcept { return !(*this == other); }

 private:
  using Value = std::variant<VectorData, HistogramData, SpdData>;
  explicit Point(Value value) : value_(std::move(value)) {}

  Value value_;
};

}  // namespace frechet
