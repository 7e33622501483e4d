#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "frechet/point.hpp"
#include "frechet/rng.hpp"

namespace test {

inline frechet::Point vec(std::initializer_list<double> values) {
  return frechet::Point::vector(std::vector<double>(values));
}

inline std::vector<frechet::Point> vecs(std::initializer_list<double> scalars) {
  std::vector<frechet::Point> out;
  for (double s : scalars) out.push_back(frechet::Point::vector({s}));
  return out;
}

/// Random point in [-5, 5]^d; shared by the property-style suites.
inline frechet::Point random_vec(frechet::Rng& rng, std::size_t d) {
  std::vector<double> values(d);
  for (double& v : values) v = rng.uniform(-5.0, 5.0);
  return frechet::Point::vector(std::move(values));
}

/// Random density on a regular grid: positive entries normalized to unit mass.
inline frechet::Point random_density(frechet::Rng& rng, std::size_t bins, double width) {
  std::vector<double> values(bins);
  double sum = 0.0;
  for (double& v : values) {
    v = rng.uniform(0.05, 1.0);
    sum += v;
  }
  for (double& v : values) v /= sum * width;
  return frechet::Point::histogram(std::move(values), width);
}

/// Random symmetric PSD matrix A^T A from entries in [-1, 1].
inline frechet::Point random_spd(frechet::Rng& rng, std::size_t d) {
  std::vector<double> a(d * d);
  for (double& v : a) v = rng.uniform(-1.0, 1.0);
  std::vector<double> m(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < d; ++k) sum += a[k * d + i] * a[k * d + j];
      m[i * d + j] = sum;
    }
  }
  // Symmetrize exactly; the accumulation order above already matches, but be
  // explicit so the Point factory's 1e-9 symmetry check can never trip.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      double avg = 0.5 * (m[i * d + j] + m[j * d + i]);
      m[i * d + j] = avg;
      m[j * d + i] = avg;
    }
  }
  return frechet::Point::spd(d, std::move(m));
}

/// Scratch path under the build tree's temp dir, unique per tag.
inline std::string tmp_path(const std::string& tag) {
  return std::string("/tmp/frechet_test_") + tag;
}

}  // namespace test
