#include "frechet/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "frechet/error.hpp"

namespace frechet {

const char* to_string(LossKind kind) noexcept {
  switch (kind) {
    case LossKind::squared_norm: return "squared-norm";
    case LossKind::norm: return "norm";
    case LossKind::l1_density: return "l1-density";
    case LossKind::total_variation: return "total-variation";
    case LossKind::frobenius: return "frobenius";
    case LossKind::truncated: return "truncated";
  }
  return "unknown";
}

const char* to_string(ConditionStatus status) noexcept {
  switch (status) {
    case ConditionStatus::pass: return "pass";
    case ConditionStatus::fail: return "fail";
    case ConditionStatus::not_claimed: return "not-claimed";
  }
  return "unknown";
}

static void require_norm_space(const SpaceDescriptor& space, const char* loss_name) {
  if (space.kind != SpaceKind::euclidean && space.kind != SpaceKind::spd_matrix) {
    throw Error(errc::bad_parameter, std::string(loss_name) + " needs a norm-induced space, got " +
                                         to_string(space.kind));
  }
}

LossSpec LossSpec::squared_norm(SpaceDescriptor space, bool bounded_space) {
  require_norm_space(space, "squared-norm");
  LossSpec spec;
  spec.kind = LossKind::squared_norm;
  spec.space = space;
  spec.holder_alpha = 2.0;
  spec.satisfies_lr = bounded_space;  // loss = metric^2 exactly; claimed only with a bound
  return spec;
}

LossSpec LossSpec::norm(SpaceDescriptor space) {
  require_norm_space(space, "norm");
  LossSpec spec;
  spec.kind = LossKind::norm;
  spec.space = space;
  spec.holder_alpha = 1.0;
  spec.tr_constant = 1.0;  // reverse triangle inequality
  spec.satisfies_tr = true;
  spec.satisfies_lr = true;
  return spec;
}

static void require_density_space(const SpaceDescriptor& space, const char* loss_name) {
  if (space.kind != SpaceKind::density_grid) {
    throw Error(errc::bad_parameter,
                std::string(loss_name) + " needs a density grid, got " + to_string(space.kind));
  }
}

LossSpec LossSpec::l1_density(SpaceDescriptor space) {
  require_density_space(space, "l1-density");
  if (space.metric != MetricId::l1) {
    throw Error(errc::bad_parameter, "l1-density loss needs the l1 space metric");
  }
  LossSpec spec;
  spec.kind = LossKind::l1_density;
  spec.space = space;
  spec.bound = 2.0;  // integral of |f - g| over two densities
  spec.holder_alpha = 1.0;
  spec.tr_constant = 1.0;
  spec.satisfies_tr = true;
  spec.satisfies_lr = true;
  return spec;
}

LossSpec LossSpec::total_variation(SpaceDescriptor space) {
  require_density_space(space, "total-variation");
  LossSpec spec;
  spec.kind = LossKind::total_variation;
  spec.space = space;
  spec.bound = 1.0;
  spec.holder_alpha = 1.0;  // TV = L1/2 <= either grid metric
  spec.tr_constant = 1.0;
  spec.satisfies_tr = true;
  spec.satisfies_lr = true;
  return spec;
}

LossSpec LossSpec::frobenius(SpaceDescriptor space) {
  if (space.kind != SpaceKind::spd_matrix) {
    throw Error(errc::bad_parameter,
                std::string("frobenius loss needs an spd-matrix space, got ") +
                    to_string(space.kind));
  }
  LossSpec spec;
  spec.kind = LossKind::frobenius;
  spec.space = space;
  spec.holder_alpha = 1.0;
  spec.tr_constant = 1.0;
  spec.satisfies_tr = true;
  spec.satisfies_lr = true;
  return spec;
}

LossSpec LossSpec::truncated(LossSpec inner_spec, double bound) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw Error(errc::bad_parameter, "truncation bound must be positive and finite");
  }
  LossSpec spec;
  spec.kind = LossKind::truncated;
  spec.space = inner_spec.space;
  spec.bound = inner_spec.bound ? std::min(*inner_spec.bound, bound) : bound;
  spec.holder_alpha = inner_spec.holder_alpha;
  spec.satisfies_lr = inner_spec.satisfies_lr;  // min(loss, L) <= loss <= rho^alpha
  if (inner_spec.satisfies_tr) {
    // Truncation keeps the Lipschitz condition, at worst with constant 1:
    // when the reference loss saturates, both sides are within [0, L].
    spec.tr_constant = std::max(*inner_spec.tr_constant, 1.0);
    spec.satisfies_tr = true;
  }
  spec.inner = std::make_shared<const LossSpec>(std::move(inner_spec));
  return spec;
}

double loss(const LossSpec& spec, const Point& y, const Point& y2) {
  switch (spec.kind) {
    case LossKind::squared_norm: {
      double d = distance(spec.space, y, y2);
      return d * d;
    }
    case LossKind::norm:
      return distance(spec.space, y, y2);
    case LossKind::l1_density:
    case LossKind::total_variation: {
      require_in_space(spec.space, y);
      require_in_space(spec.space, y2);
      const std::vector<double>& av = y.values();
      const std::vector<double>& bv = y2.values();
      double sum = 0.0;
      for (std::size_t i = 0; i < av.size(); ++i) sum += std::abs(av[i] - bv[i]);
      sum *= spec.space.bin_width;
      return spec.kind == LossKind::l1_density ? sum : 0.5 * sum;
    }
    case LossKind::frobenius:
      return distance(spec.space, y, y2);
    case LossKind::truncated:
      return std::min(loss(*spec.inner, y, y2), *spec.bound);
  }
  throw Error(errc::unsupported, "unknown loss kind");
}

ConditionReport verify_loss_conditions(const LossSpec& spec, std::span<const Point> sample,
                                       double tolerance) {
  if (sample.size() < 3) {
    throw Error(errc::bad_parameter, "condition check needs at least 3 points, got " +
                                         std::to_string(sample.size()));
  }
  for (const Point& p : sample) require_in_space(spec.space, p);

  const std::size_t m = sample.size();
  std::vector<double> losses(m * m, 0.0);
  std::vector<double> dists(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      losses[i * m + j] = loss(spec, sample[i], sample[j]);
      dists[i * m + j] = distance(spec.space, sample[i], sample[j]);
    }
  }

  ConditionReport report;
  const double inf = std::numeric_limits<double>::infinity();

  bool bound_ok = true;
  for (double v : losses) report.max_loss = std::max(report.max_loss, v);
  if (spec.bound) bound_ok = report.max_loss <= *spec.bound + tolerance;
  report.boundedness = !spec.bound          ? ConditionStatus::not_claimed
                       : bound_ok           ? ConditionStatus::pass
                                            : ConditionStatus::fail;

  bool tr_ok = true;
  double c = spec.tr_constant.value_or(0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        double num = std::abs(losses[i * m + j] - losses[i * m + k]);
        double den = losses[j * m + k];
        double ratio = den > 0.0 ? num / den : (num <= tolerance ? 0.0 : inf);
        report.max_tr_ratio = std::max(report.max_tr_ratio, ratio);
        if (spec.satisfies_tr && num > c * den + tolerance) tr_ok = false;
      }
    }
  }
  report.tr = !spec.satisfies_tr ? ConditionStatus::not_claimed
              : tr_ok            ? ConditionStatus::pass
                                 : ConditionStatus::fail;

  bool lr_ok = true;
  bool lr_rated = spec.holder_alpha > 0.0;
  if (lr_rated) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        double num = losses[i * m + j];
        double den = std::pow(dists[i * m + j], spec.holder_alpha);
        double ratio = den > 0.0 ? num / den : (num <= tolerance ? 0.0 : inf);
        report.max_lr_ratio = std::max(report.max_lr_ratio, ratio);
        if (spec.satisfies_lr && num > den + tolerance) lr_ok = false;
      }
    }
  }
  report.lr = !spec.satisfies_lr ? ConditionStatus::not_claimed
              : lr_ok            ? ConditionStatus::pass
                                 : ConditionStatus::fail;
  return report;
}

}  // namespace frechet
