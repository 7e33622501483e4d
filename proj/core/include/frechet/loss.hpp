#pragma once

#include <memory>
#include <optional>
#include <span>

#include "frechet/point.hpp"
#include "frechet/space.hpp"

namespace frechet {

enum class LossKind { squared_norm, norm, l1_density, total_variation, frobenius, truncated };

const char* to_string(LossKind kind) noexcept;

/// A loss on Y x Y together with the metadata the consistency conditions
/// need: a uniform bound L (when one exists), the Hoelder exponent alpha of
/// the loss-vs-metric bound loss(y,y') <= rho(y,y')^alpha, and the Lipschitz
/// constant c of |loss(y,y') - loss(y,y'')| <= c * loss(y',y'').
///
/// The satisfies_* flags are claims, set by the factories for the cases where
/// the condition provably holds (metric-type losses get c = 1 via the reverse
/// triangle inequality). verify_loss_conditions only enforces claimed
/// conditions; unclaimed ones are reported with their observed ratios.
struct LossSpec {
  LossKind kind = LossKind::squared_norm;
  SpaceDescriptor space;
  std::optional<double> bound;        // L
  double holder_alpha = 0.0;          // alpha, meaningful when satisfies_lr
  std::optional<double> tr_constant;  // c, present when satisfies_tr
  bool satisfies_tr = false;
  bool satisfies_lr = false;
  std::shared_ptr<const LossSpec> inner;  // truncated only

  /// distance^2 on a norm-induced space (euclidean or spd-matrix). Does not
  /// satisfy the c-Lipschitz condition with any finite c; the alpha = 2 bound
  /// is claimed only when the caller declares the space bounded.
  static LossSpec squared_norm(SpaceDescriptor space, bool bounded_space = false);

  /// distance itself (euclidean or spd-matrix); c = 1, alpha = 1.
  static LossSpec norm(SpaceDescriptor space);

  /// L1 distance between grid densities; bounded by 2, c = 1. The alpha = 1
  /// bound holds against the l1 space metric.
  static LossSpec l1_density(SpaceDescriptor space);

  /// Total-variation distance, half the L1 distance between the densities;
  /// bounded by 1, c = 1, alpha = 1.
  static LossSpec total_variation(SpaceDescriptor space);

  /// Frobenius distance between spd matrices; c = 1, alpha = 1.
  static LossSpec frobenius(SpaceDescriptor space);

  /// min(inner loss, bound). Keeps the inner claims: truncation preserves the
  /// c-Lipschitz condition with constant max(c, 1) and the alpha bound as is.
  static LossSpec truncated(LossSpec inner_spec, double bound);
};

/// Evaluates the loss; non-negative, and never above bound for truncated.
double loss(const LossSpec& spec, const Point& y, const Point& y2);

enum class ConditionStatus { pass, fail, not_claimed };

const char* to_string(ConditionStatus status) noexcept;

/// Observed extremes over all triples of a sample, and pass/fail per claimed
/// condition. Ratios with zero denominator and zero numerator count as 0;
/// zero denominator with nonzero numerator counts as +inf.
struct ConditionReport {
  double max_loss = 0.0;
  ConditionStatus boundedness = ConditionStatus::not_claimed;
  double max_tr_ratio = 0.0;
  ConditionStatus tr = ConditionStatus::not_claimed;
  double max_lr_ratio = 0.0;
  ConditionStatus lr = ConditionStatus::not_claimed;

  bool all_claimed_pass() const noexcept {
    return boundedness != ConditionStatus::fail && tr != ConditionStatus::fail &&
           lr != ConditionStatus::fail;
  }
};

/// Checks the boundedness, c-Lipschitz and Hoelder conditions empirically
/// over every triple (y, y', y'') of the sample. Requires >= 3 points.
ConditionReport verify_loss_conditions(const LossSpec& spec, std::span<const Point> sample,
                                       double tolerance = 1e-9);

}  // namespace frechet
