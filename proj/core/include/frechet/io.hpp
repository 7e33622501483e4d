#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "frechet/mean.hpp"
#include "frechet/piecewise.hpp"
#include "frechet/point.hpp"

namespace frechet {

using json = nlohmann::ordered_json;

/// Point wire form: {"kind": "vector"|"histogram"|"spd", "data": [...]},
/// histograms add "bins" and "width", spd data is row-major.
json to_json(const Point& p);
Point point_from_json(const json& j);

json to_json(const MeanEstimate& estimate);
MeanEstimate mean_estimate_from_json(const json& j);

/// {"nuclei": [...], "values": [...], "fallback_cells": [...]}. The covariate
/// space is recovered from the nuclei on load (vector -> euclidean,
/// histogram -> density grid with l1, spd -> frobenius).
json to_json(const PiecewiseEstimator& estimator);
PiecewiseEstimator piecewise_from_json(const json& j);

/// One Point per line. Parse errors report line and column; invalid points
/// report the record index.
std::vector<Point> read_points_jsonl(const std::string& path);

/// One {"x": Point, "y": Point} object per line.
std::vector<LabeledPoint> read_labeled_jsonl(const std::string& path);

std::string read_file(const std::string& path);

/// Writes to a temp file in the target directory, then renames over the
/// destination, so a prior report is never left half-overwritten.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace frechet
