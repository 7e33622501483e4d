#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "frechet/piecewise.hpp"
#include "frechet/point.hpp"
#include "frechet/rng.hpp"
#include "frechet/space.hpp"

namespace frechet {

enum class SamplerKind {
  uniform_scalar,
  gaussian_vector,
  histogram_mixture,
  er_graph_laplacian,
  finite_scalar,
  point_mass,
  regression_pair,
};

const char* to_string(SamplerKind kind) noexcept;

enum class LinkKind { identity, step, constant };
enum class NoiseKind { none, uniform, gaussian };

/// Deterministic map x -> y for pair samplers. identity requires the x and y
/// spaces to coincide; step is scalar-threshold (y = below if x < threshold,
/// else above); constant ignores x (makes Y independent of X).
struct LinkSpec {
  LinkKind kind = LinkKind::identity;
  double threshold = 0.0;              // step
  std::shared_ptr<const Point> below;  // step
  std::shared_ptr<const Point> above;  // step
  std::shared_ptr<const Point> value;  // constant

  static LinkSpec identity();
  static LinkSpec step(double threshold, Point below, Point above);
  static LinkSpec constant(Point value);
};

/// Additive response noise; vector responses only. uniform is U[-h, h] per
/// coordinate, gaussian is N(0, sigma^2) per coordinate.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double half_width = 0.0;  // uniform
  double sigma = 0.0;       // gaussian

  static NoiseSpec none();
  static NoiseSpec uniform(double half_width);
  static NoiseSpec gaussian(double sigma);

  /// Per-coordinate variance of the additive noise.
  double variance() const noexcept;
};

/// Distribution description. Factories validate parameters (sigma >= 0,
/// weights non-negative and summing to 1 within 1e-9, probabilities in
/// [0, 1]) and throw structured errors otherwise.
struct SamplerSpec {
  SamplerKind kind = SamplerKind::uniform_scalar;
  // uniform_scalar
  double lo = 0.0;
  double hi = 1.0;
  // gaussian_vector
  std::vector<double> mean;
  double sigma = 1.0;
  // histogram_mixture / finite_scalar
  std::vector<Point> components;
  std::vector<double> weights;
  std::vector<double> atoms;
  // er_graph_laplacian
  std::size_t nodes = 0;
  double edge_prob = 0.0;
  // point_mass
  std::shared_ptr<const Point> atom;
  // regression_pair
  std::shared_ptr<const SamplerSpec> x;
  LinkSpec link;
  NoiseSpec noise;

  static SamplerSpec uniform_scalar(double lo, double hi);
  static SamplerSpec gaussian_vector(std::vector<double> mean, double sigma);
  static SamplerSpec histogram_mixture(std::vector<Point> components, std::vector<double> weights);
  static SamplerSpec er_graph_laplacian(std::size_t nodes, double edge_prob);
  static SamplerSpec finite_scalar(std::vector<double> atoms, std::vector<double> weights);
  static SamplerSpec point_mass(Point atom);
  static SamplerSpec regression_pair(SamplerSpec x, LinkSpec link, NoiseSpec noise);

  bool is_pair() const noexcept { return kind == SamplerKind::regression_pair; }

  /// Space the emitted points live in. For pair samplers this is the y space;
  /// x_space() gives the covariate side.
  SpaceDescriptor point_space() const;
  SpaceDescriptor x_space() const;

  /// Finite support as weighted atoms, when the distribution has one
  /// (finite_scalar, histogram_mixture, point_mass). Empty otherwise.
  std::vector<WeightedPoint> finite_support() const;
};

/// A SamplerSpec bound to a seeded generator. Consecutive draw calls continue
/// the stream; same seed reproduces it bit for bit. Pair samplers draw x,
/// link and noise from the single shared stream.
class Sampler {
 public:
  Sampler(SamplerSpec spec, std::uint64_t seed);

  const SamplerSpec& spec() const noexcept { return spec_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Fresh sampler over the same distribution with a different stream.
  Sampler reseeded(std::uint64_t seed) const { return Sampler(spec_, seed); }

  Point draw_one();
  std::vector<Point> draw(std::size_t count);

  LabeledPoint draw_pair_one();
  std::vector<LabeledPoint> draw_pairs(std::size_t count);

 private:
  Point draw_from(const SamplerSpec& spec);

  SamplerSpec spec_;
  std::uint64_t seed_ = 0;
  Rng rng_;
};

}  // namespace frechet
