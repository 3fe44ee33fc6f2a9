#pragma once

// Minimal SVG 1.1 writer for the two fixed plot types.

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prequential::svg {

std::string escape(std::string_view text);

/// Evenly spaced "nice" tick positions (1, 2 or 5 times a power of ten)
/// covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target_count = 6);

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  /// Padded range; a zero-width range is widened to +-1 around its value.
  static Range of(double lo, double hi, double pad_fraction = 0.05);
};

class Document {
public:
  Document(double width, double height);

  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view extra = {});
  void line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double width = 1.0, std::string_view extra = {});
  void circle(double cx, double cy, double r, std::string_view fill,
              std::string_view extra = {});
  void polyline(const std::vector<std::pair<double, double>> &points,
                std::string_view stroke, double width,
                std::string_view extra = {});
  void text(double x, double y, std::string_view content,
            std::string_view extra = {}, int font_size = 12);

  std::string str() const;

private:
  double width_;
  double height_;
  std::ostringstream body_;
};

/// Plot frame with data-to-pixel mapping, ticks and axis labels.
class Axes {
public:
  Axes(Document &doc, double left, double top, double width, double height,
       Range x, Range y);

  double px(double x) const;
  double py(double y) const;

  void draw_frame(std::string_view x_label, std::string_view y_label);
  /// Dashed lines at x = 0 and y = 0 when inside the ranges.
  void draw_zero_lines();

private:
  Document &doc_;
  double left_;
  double top_;
  double width_;
  double height_;
  Range x_;
  Range y_;
};

std::string num(double v);

} // namespace prequential::svg
