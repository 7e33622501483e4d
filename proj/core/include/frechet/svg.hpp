#pragma once

#include <string>

#include "frechet/report.hpp"

namespace frechet {

/// Convergence chart: x axis log2 n, y axis log10 median excess risk, one
/// polyline per estimator through the per-n medians, one dot per row.
/// Rows whose excess risk falls at or below the Monte Carlo noise floor are
/// clamped to the half-width before taking logs and drawn hollow, with the
/// clamp noted in the chart legend.
///
/// Requires at least two distinct n values among rows carrying an excess
/// risk; throws a structured error otherwise. Output bytes are deterministic
/// (fixed 2-decimal coordinates).
std::string render_convergence_svg(const RiskReport& report);

/// Renders and writes via the atomic temp-then-rename path.
void emit_convergence_svg(const RiskReport& report, const std::string& path);

}  // namespace frechet
