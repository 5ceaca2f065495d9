#pragma once

// Minimal SVG emitter: paths, shapes and text only.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace gridcast::bench {

class Svg {
 public:
  Svg(double width, double height);

  void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width = 1.0);
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, double width = 1.5,
                bool closed = false, const std::string& fill = "none");
  void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke = "none");
  void circle(double cx, double cy, double r, const std::string& fill);
  void text(double x, double y, const std::string& s, double size = 12.0, const std::string& anchor = "start");

  std::string str() const;
  void save(const std::filesystem::path& path) const;

 private:
  double width_, height_;
  std::string body_;
};

const std::string& palette(std::size_t i);

struct RadarSeries {
  std::string label;
  std::vector<double> values;  // one per axis, raw
};

/// Each axis is scaled by the largest magnitude seen on it.
void radar_chart(const std::filesystem::path& path, const std::string& title, const std::vector<std::string>& axes,
                 const std::vector<RadarSeries>& series);

struct LineSeries {
  std::string label;
  std::vector<double> y;
};

void line_chart(const std::filesystem::path& path, const std::string& title, const std::vector<LineSeries>& series,
                double split_at = -1.0);

void errorbar_chart(const std::filesystem::path& path, const std::string& title, const std::vector<double>& x,
                    const std::vector<double>& mean, const std::vector<double>& sd, const std::string& x_label,
                    const std::string& y_label);

void heatmap(const std::filesystem::path& path, const std::string& title, std::size_t rows, std::size_t cols,
             const std::vector<double>& values);

}  // namespace gridcast::bench
