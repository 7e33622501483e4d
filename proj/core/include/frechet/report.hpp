#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frechet {

struct RiskRow {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::string estimator;
  double empirical_risk = 0.0;
  double true_risk_mc = 0.0;
  double mc_half_width = 0.0;
  std::optional<double> oracle_risk;
  std::optional<double> excess_risk;
  std::int64_t wall_time_ms = 0;
};

/// Tabular result of a convergence run.
struct RiskReport {
  std::vector<RiskRow> rows;

  /// Sorts by (n, seed, estimator) so output is schedule-independent.
  void sort_rows();

  /// CSV with the fixed column order
  ///   n,k,seed,estimator,empirical_risk,true_risk_mc,mc_half_width,
  ///   oracle_risk,excess_risk,wall_time_ms
  /// Floats use 17 significant digits; absent optionals are empty fields.
  /// wall_time_ms is written as 0 unless include_timings is set, keeping the
  /// bytes reproducible by default.
  std::string to_csv(bool include_timings = false) const;
};

/// 17-significant-digit float formatting shared by CSV and JSON emitters.
std::string format_real(double value);

}  // namespace frechet
