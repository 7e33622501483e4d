#include "frechet/point.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "frechet/error.hpp"

namespace frechet {

const char* to_string(PointKind kind) noexcept {
  switch (kind) {
    case PointKind::vector: return "vector";
    case PointKind::histogram: return "histogram";
    case PointKind::spd: return "spd";
  }
  return "unknown";
}

static void require_finite(const std::vector<double>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(errc::invalid_point,
                  std::string(what) + " entry " + std::to_string(i) + " is not finite");
    }
  }
}

Point Point::vector(std::vector<double> values) {
  require_finite(values, "vector");
  return Point(VectorData{std::move(values)});
}

Point Point::histogram(std::vector<double> values, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw Error(errc::invalid_point, "histogram bin width must be positive and finite");
  }
  if (values.empty()) throw Error(errc::invalid_point, "histogram needs at least one bin");
  require_finite(values, "histogram");
  double mass = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      throw Error(errc::invalid_point,
                  "histogram entry " + std::to_string(i) + " is negative");
    }
    mass += values[i];
  }
  mass *= bin_width;
  if (std::abs(mass - 1.0) > 1e-9) {
    throw Error(errc::invalid_point,
                "histogram mass is " + std::to_string(mass) + ", expected 1 within 1e-9");
  }
  return Point(HistogramData{std::move(values), bin_width});
}

Point Point::spd(std::size_t dim, std::vector<double> values) {
  if (dim == 0) throw Error(errc::invalid_point, "spd dimension must be positive");
  if (values.size() != dim * dim) {
    throw Error(errc::invalid_point, "spd needs " + std::to_string(dim * dim) +
                                         " entries, got " + std::to_string(values.size()));
  }
  require_finite(values, "spd");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (std::abs(values[i * dim + j] - values[j * dim + i]) > 1e-9) {
        throw Error(errc::invalid_point, "spd entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") breaks symmetry");
      }
    }
  }
  Eigen::MatrixXd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = values[i * dim + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9) {
    throw Error(errc::invalid_point,
                "spd minimum eigenvalue " + std::to_string(min_eig) + " below -1e-9");
  }
  return Point(SpdData{dim, std::move(values)});
}

std::size_t Point::dimension() const noexcept {
  switch (kind()) {
    case PointKind::vector: return std::get<VectorData>(value_).values.size();
    case PointKind::histogram: return std::get<HistogramData>(value_).values.size();
    case PointKind::spd: return std::get<SpdData>(value_).dim;
  }
  return 0;
}

const std::vector<double>& Point::values() const noexcept {
  switch (kind()) {
    case PointKind::vector: return std::get<VectorData>(value_).values;
    case PointKind::histogram: return std::get<HistogramData>(value_).values;
    case PointKind::spd: return std::get<SpdData>(value_).values;
  }
  return std::get<VectorData>(value_).values;
}

double Point::bin_width() const noexcept {
  if (kind() == PointKind::histogram) return std::get<HistogramData>(value_).bin_width;
  return 0.0;
}

bool Point::operator==(const Point& other) const noexcept {
  if (kind() != other.kind()) return false;
  if (kind() == PointKind::histogram && bin_width() != other.bin_width()) return false;
  if (kind() == PointKind::spd && dimension() != other.dimension()) return false;
  return values() == other.values();
}

}  // namespace frechet
