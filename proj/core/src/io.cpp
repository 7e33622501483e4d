#include "frechet/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "frechet/error.hpp"

namespace frechet {

json to_json(const Point& p) {
  json j;
  switch (p.kind()) {
    case PointKind::vector: j["kind"] = "vector"; break;
    case PointKind::histogram: j["kind"] = "histogram"; break;
    case PointKind::spd: j["kind"] = "spd"; break;
  }
  j["data"] = p.values();
  if (p.kind() == PointKind::histogram) {
    j["bins"] = p.dimension();
    j["width"] = p.bin_width();
  }
  return j;
}

static std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(errc::parse_error, std::string("expected \"") + key + "\" array");
  }
  std::vector<double> values;
  values.reserve(j[key].size());
  for (const json& v : j[key]) {
    if (!v.is_number()) throw Error(errc::parse_error, std::string(key) + " holds a non-number");
    values.push_back(v.get<double>());
  }
  return values;
}

Point point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(errc::parse_error, "point needs a \"kind\" string");
  }
  std::string kind = j["kind"].get<std::string>();
  std::vector<double> data = number_array(j, "data");
  if (kind == "vector") return Point::vector(std::move(data));
  if (kind == "histogram") {
    if (!j.contains("width") || !j["width"].is_number()) {
      throw Error(errc::parse_error, "histogram needs a \"width\" number");
    }
    if (j.contains("bins") && j["bins"].get<std::size_t>() != data.size()) {
      throw Error(errc::parse_error, "histogram \"bins\" disagrees with data length");
    }
    return Point::histogram(std::move(data), j["width"].get<double>());
  }
  if (kind == "spd") {
    auto dim = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(data.size()))));
    if (dim * dim != data.size()) {
      throw Error(errc::parse_error, "spd data length is not a perfect square");
    }
    return Point::spd(dim, std::move(data));
  }
  throw Error(errc::parse_error, "unknown point kind \"" + kind + "\"");
}

json to_json(const MeanEstimate& estimate) {
  json j;
  j["index"] = estimate.index;
  j["value"] = to_json(estimate.value);
  j["empirical_risk"] = estimate.empirical_risk;
  return j;
}

MeanEstimate mean_estimate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("index") || !j.contains("value") ||
      !j.contains("empirical_risk")) {
    throw Error(errc::parse_error, "mean estimate needs index, value, empirical_risk");
  }
  MeanEstimate estimate;
  estimate.index = j["index"].get<std::size_t>();
  estimate.value = point_from_json(j["value"]);
  estimate.empirical_risk = j["empirical_risk"].get<double>();
  return estimate;
}

json to_json(const PiecewiseEstimator& estimator) {
  json j;
  j["nuclei"] = json::array();
  for (const Point& p : estimator.partition.nuclei) j["nuclei"].push_back(to_json(p));
  j["values"] = json::array();
  for (const Point& p : estimator.values) j["values"].push_back(to_json(p));
  j["fallback_cells"] = estimator.fallback_cells;
  return j;
}

PiecewiseEstimator piecewise_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nuclei") || !j.contains("values") ||
      !j.contains("fallback_cells")) {
    throw Error(errc::parse_error, "estimator needs nuclei, values, fallback_cells");
  }
  std::vector<Point> nuclei;
  for (const json& p : j["nuclei"]) nuclei.push_back(point_from_json(p));
  if (nuclei.empty()) throw Error(errc::parse_error, "estimator has no nuclei");
  std::vector<Point> values;
  for (const json& p : j["values"]) values.push_back(point_from_json(p));
  if (values.size() != nuclei.size()) {
    throw Error(errc::parse_error, "estimator needs one value per nucleus");
  }
  PiecewiseEstimator estimator;
  SpaceDescriptor space = space_of(nuclei[0]);
  estimator.partition = make_partition(space, std::move(nuclei));
  estimator.values = std::move(values);
  for (const json& c : j["fallback_cells"]) {
    auto cell = c.get<std::size_t>();
    if (cell >= estimator.values.size()) {
      throw Error(errc::parse_error, "fallback cell index out of range");
    }
    estimator.fallback_cells.push_back(cell);
  }
  return estimator;
}

namespace {

/// Shared per-line JSONL walk: hands each non-empty line's parsed document to
/// the visitor; converts parse failures to line/column diagnostics and point
/// validation failures to record-index diagnostics.
template <typename Visit>
void for_each_record(const std::string& path, Visit visit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(errc::parse_error, path + ": line " + std::to_string(line_no) + ", column " +
                                         std::to_string(e.byte) + ": malformed JSON");
    }
    try {
      visit(doc);
    } catch (const Error& e) {
      throw Error(e.code(),
                  path + ": record " + std::to_string(record) + ": " + e.message());
    }
    ++record;
  }
}

}  // namespace

std::vector<Point> read_points_jsonl(const std::string& path) {
  std::vector<Point> points;
  for_each_record(path, [&](const json& doc) { points.push_back(point_from_json(doc)); });
  return points;
}

std::vector<LabeledPoint> read_labeled_jsonl(const std::string& path) {
  std::vector<LabeledPoint> pairs;
  for_each_record(path, [&](const json& doc) {
    if (!doc.is_object() || !doc.contains("x") || !doc.contains("y")) {
      throw Error(errc::parse_error, "labeled record needs \"x\" and \"y\"");
    }
    pairs.push_back(LabeledPoint{point_from_json(doc["x"]), point_from_json(doc["y"])});
  });
  return pairs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(errc::io_error, "cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out.good()) throw Error(errc::io_error, "write failed for " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) throw Error(errc::io_error, "rename to " + path + " failed: " + ec.message());
}

}  // namespace frechet
