#include "frechet/report.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

namespace frechet {

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void RiskReport::sort_rows() {
  std::sort(rows.begin(), rows.end(), [](const RiskRow& a, const RiskRow& b) {
    return std::tie(a.n, a.seed, a.estimator) < std::tie(b.n, b.seed, b.estimator);
  });
}

std::string RiskReport::to_csv(bool include_timings) const {
  std::string out =
      "n,k,seed,estimator,empirical_risk,true_risk_mc,mc_half_width,"
      "oracle_risk,excess_risk,wall_time_ms\n";
  for (const RiskRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    if (row.k) out += std::to_string(*row.k);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.estimator;
    out += ',';
    out += format_real(row.empirical_risk);
    out += ',';
    out += format_real(row.true_risk_mc);
    out += ',';
    out += format_real(row.mc_half_width);
    out += ',';
    if (row.oracle_risk) out += format_real(*row.oracle_risk);
    out += ',';
    if (row.excess_risk) out += format_real(*row.excess_risk);
    out += ',';
    out += std::to_string(include_timings ? row.wall_time_ms : 0);
    out += '\n';
  }
  return out;
}

}  // namespace frechet
