#include "frechet/risk.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "frechet/error.hpp"

namespace frechet {

static McEstimate summarize(const std::vector<double>& losses) {
  const auto m = static_cast<double>(losses.size());
  double sum = 0.0;
  for (double v : losses) sum += v;
  double mean = sum / m;
  double sq = 0.0;
  for (double v : losses) sq += (v - mean) * (v - mean);
  double sd = losses.size() > 1 ? std::sqrt(sq / (m - 1.0)) : 0.0;
  return McEstimate{mean, 1.96 * sd / std::sqrt(m)};
}

static void require_mc_m(std::size_t m) {
  if (m < 100) {
    throw Error(errc::bad_parameter,
                "Monte Carlo sample must be >= 100, got " + std::to_string(m));
  }
}

McEstimate true_risk_mc(const LossSpec& spec, const Point& y, const Sampler& sampler,
                        std::size_t m, std::uint64_t seed) {
  require_mc_m(m);
  Sampler stream = sampler.reseeded(seed);
  std::vector<double> losses;
  losses.reserve(m);
  for (std::size_t i = 0; i < m; ++i) losses.push_back(loss(spec, stream.draw_one(), y));
  return summarize(losses);
}

McEstimate true_risk_mc(const LossSpec& spec, const PiecewiseEstimator& estimator,
                        const Sampler& pair_sampler, std::size_t m, std::uint64_t seed) {
  require_mc_m(m);
  if (!pair_sampler.spec().is_pair()) {
    throw Error(errc::unsupported, "estimator risk needs a pair sampler");
  }
  Sampler stream = pair_sampler.reseeded(seed);
  std::vector<double> losses;
  losses.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    LabeledPoint p = stream.draw_pair_one();
    losses.push_back(loss(spec, p.y, estimator.predict(p.x)));
  }
  return summarize(losses);
}

std::optional<double> oracle_risk(const LossSpec& spec, const SamplerSpec& sampler) {
  // A point mass is recovered exactly by any of the losses.
  if (sampler.kind == SamplerKind::point_mass) return 0.0;

  switch (sampler.kind) {
    case SamplerKind::uniform_scalar: {
      double range = sampler.hi - sampler.lo;
      if (spec.kind == LossKind::squared_norm) return range * range / 12.0;
      if (spec.kind == LossKind::norm) return range / 4.0;
      return std::nullopt;
    }
    case SamplerKind::gaussian_vector:
      if (spec.kind == LossKind::squared_norm) {
        return static_cast<double>(sampler.mean.size()) * sampler.sigma * sampler.sigma;
      }
      return std::nullopt;
    case SamplerKind::regression_pair: {
      // Deterministic links make the link itself the optimal predictor;
      // centred additive noise leaves exactly the noise energy.
      if (sampler.noise.kind == NoiseKind::none) return 0.0;
      if (spec.kind == LossKind::squared_norm) {
        return static_cast<double>(spec.space.dimension) * sampler.noise.variance();
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

// Antiderivatives for the uniform-scalar closed forms.
static double cubic_term(double t) { return t * t * t / 3.0; }   // of (u-y)^2
static double abs_term(double t) { return t * std::abs(t) / 2.0; }  // of |u-y|

static std::optional<double> uniform_exact(const LossSpec& spec, double y, double a, double b) {
  const double range = b - a;
  switch (spec.kind) {
    case LossKind::squared_norm: {
      double mid = 0.5 * (a + b);
      return (y - mid) * (y - mid) + range * range / 12.0;
    }
    case LossKind::norm:
      if (y <= a) return 0.5 * (a + b) - y;
      if (y >= b) return y - 0.5 * (a + b);
      return ((y - a) * (y - a) + (b - y) * (b - y)) / (2.0 * range);
    case LossKind::truncated: {
      const LossSpec& inner = *spec.inner;
      if (inner.kind != LossKind::squared_norm && inner.kind != LossKind::norm) {
        return std::nullopt;
      }
      double big = *spec.bound;
      // Interval where the raw loss stays below the cap.
      double s = inner.kind == LossKind::squared_norm ? std::sqrt(big) : big;
      double c = std::max(a, y - s);
      double d = std::min(b, y + s);
      double inside = 0.0;
      double inside_len = 0.0;
      if (c < d) {
        inside_len = d - c;
        inside = inner.kind == LossKind::squared_norm
                     ? cubic_term(d - y) - cubic_term(c - y)
                     : abs_term(d - y) - abs_term(c - y);
      }
      return (big * (range - inside_len) + inside) / range;
    }
    default: return std::nullopt;
  }
}

std::optional<double> exact_risk(const LossSpec& spec, const Point& y,
                                 const SamplerSpec& sampler) {
  std::vector<WeightedPoint> support = sampler.finite_support();
  if (!support.empty()) {
    double sum = 0.0;
    for (const WeightedPoint& atom : support) sum += atom.weight * loss(spec, atom.value, y);
    return sum;
  }
  if (sampler.kind == SamplerKind::uniform_scalar) {
    require_in_space(spec.space, y);
    return uniform_exact(spec, y.values()[0], sampler.lo, sampler.hi);
  }
  return std::nullopt;
}

}  // namespace frechet
