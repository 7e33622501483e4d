#include "frechet/sampler.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "frechet/error.hpp"

namespace frechet {

const char* to_string(SamplerKind kind) noexcept {
  switch (kind) {
    case SamplerKind::uniform_scalar: return "uniform-scalar";
    case SamplerKind::gaussian_vector: return "gaussian-vector";
    case SamplerKind::histogram_mixture: return "histogram-mixture";
    case SamplerKind::er_graph_laplacian: return "er-graph-laplacian";
    case SamplerKind::finite_scalar: return "finite-scalar";
    case SamplerKind::point_mass: return "point-mass";
    case SamplerKind::regression_pair: return "regression-pair";
  }
  return "unknown";
}

LinkSpec LinkSpec::identity() { return LinkSpec{}; }

LinkSpec LinkSpec::step(double threshold, Point below, Point above) {
  if (!std::isfinite(threshold)) throw Error(errc::bad_parameter, "step threshold must be finite");
  if (below.kind() != above.kind() || below.dimension() != above.dimension()) {
    throw Error(errc::kind_mismatch, "step branches must live in the same space");
  }
  LinkSpec link;
  link.kind = LinkKind::step;
  link.threshold = threshold;
  link.below = std::make_shared<const Point>(std::move(below));
  link.above = std::make_shared<const Point>(std::move(above));
  return link;
}

LinkSpec LinkSpec::constant(Point value) {
  LinkSpec link;
  link.kind = LinkKind::constant;
  link.value = std::make_shared<const Point>(std::move(value));
  return link;
}

NoiseSpec NoiseSpec::none() { return NoiseSpec{}; }

NoiseSpec NoiseSpec::uniform(double half_width) {
  if (!(half_width >= 0.0) || !std::isfinite(half_width)) {
    throw Error(errc::bad_parameter, "uniform noise half-width must be non-negative");
  }
  return NoiseSpec{NoiseKind::uniform, half_width, 0.0};
}

NoiseSpec NoiseSpec::gaussian(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(errc::bad_parameter, "noise sigma must be non-negative");
  }
  return NoiseSpec{NoiseKind::gaussian, 0.0, sigma};
}

double NoiseSpec::variance() const noexcept {
  switch (kind) {
    case NoiseKind::none: return 0.0;
    case NoiseKind::uniform: return half_width * half_width / 3.0;
    case NoiseKind::gaussian: return sigma * sigma;
  }
  return 0.0;
}

static void check_weights(const std::vector<double>& weights) {
  if (weights.empty()) throw Error(errc::bad_weights, "empty weight list");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(errc::bad_weights, "negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(errc::bad_weights,
                "weights sum to " + std::to_string(total) + ", expected 1 within 1e-9");
  }
}

SamplerSpec SamplerSpec::uniform_scalar(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(errc::bad_parameter, "uniform-scalar needs lo < hi, both finite");
  }
  SamplerSpec spec;
  spec.kind = SamplerKind::uniform_scalar;
  spec.lo = lo;
  spec.hi = hi;
  return spec;
}

SamplerSpec SamplerSpec::gaussian_vector(std::vector<double> mean, double sigma) {
  if (mean.empty()) throw Error(errc::bad_parameter, "gaussian-vector needs a mean vector");
  for (double m : mean) {
    if (!std::isfinite(m)) throw Error(errc::bad_parameter, "gaussian mean must be finite");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(errc::bad_parameter, "gaussian sigma must be non-negative");
  }
  SamplerSpec spec;
  spec.kind = SamplerKind::gaussian_vector;
  spec.mean = std::move(mean);
  spec.sigma = sigma;
  return spec;
}

SamplerSpec SamplerSpec::histogram_mixture(std::vector<Point> components,
                                           std::vector<double> weights) {
  if (components.empty()) throw Error(errc::bad_parameter, "mixture needs components");
  if (components.size() != weights.size()) {
    throw Error(errc::bad_parameter, "mixture component and weight counts differ");
  }
  check_weights(weights);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Point& c = components[i];
    if (c.kind() != PointKind::histogram || c.dimension() != components[0].dimension() ||
        c.bin_width() != components[0].bin_width()) {
      throw Error(errc::kind_mismatch,
                  "mixture component " + std::to_string(i) + " is not on the shared grid");
    }
  }
  SamplerSpec spec;
  spec.kind = SamplerKind::histogram_mixture;
  spec.components = std::move(components);
  spec.weights = std::move(weights);
  return spec;
}

SamplerSpec SamplerSpec::er_graph_laplacian(std::size_t nodes, double edge_prob) {
  if (nodes == 0) throw Error(errc::bad_parameter, "graph needs at least one node");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(errc::bad_parameter, "edge probability must lie in [0, 1]");
  }
  SamplerSpec spec;
  spec.kind = SamplerKind::er_graph_laplacian;
  spec.nodes = nodes;
  spec.edge_prob = edge_prob;
  return spec;
}

SamplerSpec SamplerSpec::finite_scalar(std::vector<double> atoms, std::vector<double> weights) {
  if (atoms.empty()) throw Error(errc::bad_parameter, "finite-scalar needs atoms");
  if (atoms.size() != weights.size()) {
    throw Error(errc::bad_parameter, "atom and weight counts differ");
  }
  for (double a : atoms) {
    if (!std::isfinite(a)) throw Error(errc::bad_parameter, "atoms must be finite");
  }
  check_weights(weights);
  SamplerSpec spec;
  spec.kind = SamplerKind::finite_scalar;
  spec.atoms = std::move(atoms);
  spec.weights = std::move(weights);
  return spec;
}

SamplerSpec SamplerSpec::point_mass(Point atom) {
  SamplerSpec spec;
  spec.kind = SamplerKind::point_mass;
  spec.atom = std::make_shared<const Point>(std::move(atom));
  return spec;
}

SamplerSpec SamplerSpec::regression_pair(SamplerSpec x, LinkSpec link, NoiseSpec noise) {
  if (x.is_pair()) throw Error(errc::bad_parameter, "covariate sampler cannot itself be a pair");
  SpaceDescriptor xs = x.point_space();
  if (link.kind == LinkKind::step && !(xs.kind == SpaceKind::euclidean && xs.dimension == 1)) {
    throw Error(errc::bad_parameter, "step link needs a scalar covariate");
  }
  SamplerSpec spec;
  spec.kind = SamplerKind::regression_pair;
  spec.x = std::make_shared<const SamplerSpec>(std::move(x));
  spec.link = std::move(link);
  spec.noise = noise;
  if (noise.kind != NoiseKind::none && spec.point_space().kind != SpaceKind::euclidean) {
    throw Error(errc::bad_parameter, "additive noise needs a vector response");
  }
  return spec;
}

SpaceDescriptor SamplerSpec::point_space() const {
  switch (kind) {
    case SamplerKind::uniform_scalar:
    case SamplerKind::finite_scalar: return SpaceDescriptor::euclidean(1);
    case SamplerKind::gaussian_vector: return SpaceDescriptor::euclidean(mean.size());
    case SamplerKind::histogram_mixture:
      return SpaceDescriptor::density_grid(components[0].dimension(), components[0].bin_width());
    case SamplerKind::er_graph_laplacian: return SpaceDescriptor::spd_matrix(nodes);
    case SamplerKind::point_mass: return space_of(*atom);
    case SamplerKind::regression_pair:
      switch (link.kind) {
        case LinkKind::identity: return x->point_space();
        case LinkKind::step: return space_of(*link.below);
        case LinkKind::constant: return space_of(*link.value);
      }
  }
  throw Error(errc::unsupported, "unknown sampler kind");
}

SpaceDescriptor SamplerSpec::x_space() const {
  if (!is_pair()) throw Error(errc::unsupported, "only pair samplers have a covariate space");
  return x->point_space();
}

std::vector<WeightedPoint> SamplerSpec::finite_support() const {
  std::vector<WeightedPoint> support;
  switch (kind) {
    case SamplerKind::finite_scalar:
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        support.push_back({Point::vector({atoms[i]}), weights[i]});
      }
      break;
    case SamplerKind::histogram_mixture:
      for (std::size_t i = 0; i < components.size(); ++i) {
        support.push_back({components[i], weights[i]});
      }
      break;
    case SamplerKind::point_mass:
      support.push_back({*atom, 1.0});
      break;
    default: break;
  }
  return support;
}

Sampler::Sampler(SamplerSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), seed_(seed), rng_(seed) {}

Point Sampler::draw_from(const SamplerSpec& spec) {
  switch (spec.kind) {
    case SamplerKind::uniform_scalar:
      return Point::vector({rng_.uniform(spec.lo, spec.hi)});
    case SamplerKind::gaussian_vector: {
      std::vector<double> v(spec.mean.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = spec.mean[i] + spec.sigma * rng_.normal();
      return Point::vector(std::move(v));
    }
    case SamplerKind::histogram_mixture:
    case SamplerKind::finite_scalar: {
      double u = rng_.uniform01();
      double acc = 0.0;
      std::size_t pick = spec.weights.size() - 1;
      for (std::size_t i = 0; i < spec.weights.size(); ++i) {
        acc += spec.weights[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      if (spec.kind == SamplerKind::histogram_mixture) return spec.components[pick];
      return Point::vector({spec.atoms[pick]});
    }
    case SamplerKind::er_graph_laplacian: {
      const std::size_t n = spec.nodes;
      std::vector<double> laplacian(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng_.uniform01() < spec.edge_prob) {
            laplacian[i * n + j] = -1.0;
            laplacian[j * n + i] = -1.0;
            laplacian[i * n + i] += 1.0;
            laplacian[j * n + j] += 1.0;
          }
        }
      }
      return Point::spd(n, std::move(laplacian));
    }
    case SamplerKind::point_mass:
      return *spec.atom;
    case SamplerKind::regression_pair:
      throw Error(errc::unsupported, "pair sampler draws pairs, not points");
  }
  throw Error(errc::unsupported, "unknown sampler kind");
}

Point Sampler::draw_one() { return draw_from(spec_); }

std::vector<Point> Sampler::draw(std::size_t count) {
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(draw_one());
  return points;
}

LabeledPoint Sampler::draw_pair_one() {
  if (!spec_.is_pair()) throw Error(errc::unsupported, "sampler does not draw pairs");
  Point x = draw_from(*spec_.x);
  Point y;
  switch (spec_.link.kind) {
    case LinkKind::identity: y = x; break;
    case LinkKind::step:
      y = x.values()[0] < spec_.link.threshold ? *spec_.link.below : *spec_.link.above;
      break;
    case LinkKind::constant: y = *spec_.link.value; break;
  }
  if (spec_.noise.kind != NoiseKind::none) {
    std::vector<double> v = y.values();
    for (double& c : v) {
      c += spec_.noise.kind == NoiseKind::uniform
               ? rng_.uniform(-spec_.noise.half_width, spec_.noise.half_width)
               : spec_.noise.sigma * rng_.normal();
    }
    y = Point::vector(std::move(v));
  }
  return LabeledPoint{std::move(x), std::move(y)};
}

std::vector<LabeledPoint> Sampler::draw_pairs(std::size_t count) {
  std::vector<LabeledPoint> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pairs.push_back(draw_pair_one());
  return pairs;
}

}  // namespace frechet
