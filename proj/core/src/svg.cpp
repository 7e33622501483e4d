#include "frechet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <vector>

#include "frechet/error.hpp"
#include "frechet/io.hpp"

namespace frechet {

namespace {

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

struct Dot {
  double log_n;
  double log_excess;
  bool clamped;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t m = values.size();
  return m % 2 == 1 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f"};

}  // namespace

std::string render_convergence_svg(const RiskReport& report) {
  // Clamp each row's excess to its Monte Carlo noise floor before the log.
  std::map<std::string, std::vector<Dot>> dots;
  std::map<std::string, std::map<std::size_t, std::vector<double>>> per_n;
  std::set<std::size_t> n_values;
  for (const RiskRow& row : report.rows) {
    if (!row.excess_risk) continue;
    double floor = std::max(row.mc_half_width, 1e-12);
    double v = std::max(*row.excess_risk, floor);
    bool clamped = *row.excess_risk < floor;
    dots[row.estimator].push_back(
        {std::log2(static_cast<double>(row.n)), std::log10(v), clamped});
    per_n[row.estimator][row.n].push_back(v);
    n_values.insert(row.n);
  }
  if (n_values.size() < 2) {
    throw Error(errc::bad_parameter,
                "convergence chart needs excess-risk rows at two or more sample sizes");
  }

  const double width = 800, height = 520;
  const double left = 70, right = 170, top = 40, bottom = 60;
  const double x0 = std::log2(static_cast<double>(*n_values.begin()));
  const double x1 = std::log2(static_cast<double>(*n_values.rbegin()));

  double y_min = 0.0, y_max = 0.0;
  bool first = true;
  for (const auto& [name, list] : dots) {
    for (const Dot& d : list) {
      y_min = first ? d.log_excess : std::min(y_min, d.log_excess);
      y_max = first ? d.log_excess : std::max(y_max, d.log_excess);
      first = false;
    }
  }
  double lo = std::floor(y_min), hi = std::ceil(y_max);
  if (lo == hi) hi = lo + 1.0;

  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
  auto sy = [&](double y) { return top + (hi - y) / (hi - lo) * (height - top - bottom); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  svg += "<rect width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";

  // axes
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(height - bottom) + "\" x2=\"" +
         num(width - right) + "\" y2=\"" + num(height - bottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(height - bottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (std::size_t n : n_values) {
    double x = sx(std::log2(static_cast<double>(n)));
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(height - bottom) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(height - bottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(height - bottom + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(n) + "</text>\n";
  }
  for (double e = lo; e <= hi; e += 1.0) {
    double y = sy(e);
    svg += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    char label[24];
    std::snprintf(label, sizeof(label), "1e%d", static_cast<int>(e));
    svg += "<text x=\"" + num(left - 10) + "\" y=\"" + num(y + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" + label + "</text>\n";
  }
  svg += "<text x=\"" + num((left + width - right) / 2) + "\" y=\"" + num(height - 12) +
         "\" font-size=\"13\" text-anchor=\"middle\">sample size n (log2 axis)</text>\n";
  svg += "<text x=\"18\" y=\"" + num((top + height - bottom) / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num((top + height - bottom) / 2) + ")\">excess risk (log10 axis)</text>\n";

  // one median polyline per estimator, then the per-seed dots
  std::size_t color_index = 0;
  for (const auto& [name, groups] : per_n) {
    const char* color = kPalette[color_index % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (const auto& [n, values] : groups) {
      points += num(sx(std::log2(static_cast<double>(n)))) + "," +
                num(sy(std::log10(median(values)))) + " ";
    }
    if (!points.empty()) points.pop_back();
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";

    for (const Dot& d : dots[name]) {
      svg += "<circle cx=\"" + num(sx(d.log_n)) + "\" cy=\"" + num(sy(d.log_excess)) +
             "\" r=\"3\" stroke=\"";
      svg += color;
      svg += d.clamped ? "\" fill=\"white\"/>\n" : "\" fill=\"";
      if (!d.clamped) {
        svg += color;
        svg += "\"/>\n";
      }
    }

    double ly = top + 18.0 * static_cast<double>(color_index);
    svg += "<rect x=\"" + num(width - right + 12) + "\" y=\"" + num(ly) +
           "\" width=\"18\" height=\"4\" fill=\"";
    svg += color;
    svg += "\"/>\n";
    svg += "<text x=\"" + num(width - right + 36) + "\" y=\"" + num(ly + 6) +
           "\" font-size=\"12\">" + name + "</text>\n";
    ++color_index;
  }
  svg += "<text x=\"" + num(width - right + 12) + "\" y=\"" +
         num(top + 18.0 * static_cast<double>(color_index) + 12) +
         "\" font-size=\"11\">hollow dot: excess at or below</text>\n";
  svg += "<text x=\"" + num(width - right + 12) + "\" y=\"" +
         num(top + 18.0 * static_cast<double>(color_index) + 26) +
         "\" font-size=\"11\">MC noise floor (clamped)</text>\n";
  svg += "</svg>\n";
  return svg;
}

void emit_convergence_svg(const RiskReport& report, const std::string& path) {
  write_file_atomic(path, render_convergence_svg(report));
}

}  // namespace frechet
