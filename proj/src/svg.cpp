#include "svg.hpp"

#include <cmath>
#include <cstdio>

namespace prequential::svg {

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target_count) {
  std::vector<double> ticks;
  if (!(hi > lo) || target_count < 2) {
    return ticks;
  }
  const double raw = (hi - lo) / (target_count - 1);
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double fraction = raw / magnitude;
  double step = 10.0 * magnitude;
  if (fraction <= 1.0) {
    step = magnitude;
  } else if (fraction <= 2.0) {
    step = 2.0 * magnitude;
  } else if (fraction <= 5.0) {
    step = 5.0 * magnitude;
  }
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step;
       t += step) {
    // Snap values like 1e-17 to zero.
    ticks.push_back(std::abs(t) < 1e-9 * step ? 0.0 : t);
  }
  return ticks;
}

Range Range::of(double lo, double hi, double pad_fraction) {
  if (!(hi > lo)) {
    return {lo - 1.0, lo + 1.0};
  }
  const double pad = (hi - lo) * pad_fraction;
  return {lo - pad, hi + pad};
}

Document::Document(double width, double height)
    : width_(width), height_(height) {}

void Document::rect(double x, double y, double w, double h,
                    std::string_view fill, std::string_view extra) {
  body_ << "  <rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
        << num(w) << "\" height=\"" << num(h) << "\" fill=\"" << fill << '"';
  if (!extra.empty()) {
    body_ << ' ' << extra;
  }
  body_ << "/>\n";
}

void Document::line(double x1, double y1, double x2, double y2,
                    std::string_view stroke, double width,
                    std::string_view extra) {
  body_ << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
        << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << num(width) << '"';
  if (!extra.empty()) {
    body_ << ' ' << extra;
  }
  body_ << "/>\n";
}

void Document::circle(double cx, double cy, double r, std::string_view fill,
                      std::string_view extra) {
  body_ << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
        << num(r) << "\" fill=\"" << fill << '"';
  if (!extra.empty()) {
    body_ << ' ' << extra;
  }
  body_ << "/>\n";
}

void Document::polyline(const std::vector<std::pair<double, double>> &points,
                        std::string_view stroke, double width,
                        std::string_view extra) {
  body_ << "  <polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"" << num(width) << "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      body_ << ' ';
    }
    body_ << num(points[i].first) << ',' << num(points[i].second);
  }
  body_ << '"';
  if (!extra.empty()) {
    body_ << ' ' << extra;
  }
  body_ << "/>\n";
}

void Document::text(double x, double y, std::string_view content,
                    std::string_view extra, int font_size) {
  body_ << "  <text x=\"" << num(x) << "\" y=\"" << num(y)
        << "\" font-family=\"sans-serif\" font-size=\"" << font_size << '"';
  if (!extra.empty()) {
    body_ << ' ' << extra;
  }
  body_ << '>' << escape(content) << "</text>\n";
}

std::string Document::str() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width_) << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 "
      << num(width_) << ' ' << num(height_) << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\""
      << num(height_) << "\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

Axes::Axes(Document &doc, double left, double top, double width,
           double height, Range x, Range y)
    : doc_(doc), left_(left), top_(top), width_(width), height_(height), x_(x),
      y_(y) {}

double Axes::px(double x) const {
  return left_ + (x - x_.lo) / (x_.hi - x_.lo) * width_;
}

double Axes::py(double y) const {
  return top_ + height_ - (y - y_.lo) / (y_.hi - y_.lo) * height_;
}

void Axes::draw_frame(std::string_view x_label, std::string_view y_label) {
  doc_.rect(left_, top_, width_, height_, "none",
            "stroke=\"black\" stroke-width=\"1\"");
  const double bottom = top_ + height_;
  for (double t : nice_ticks(x_.lo, x_.hi)) {
    const double x = px(t);
    doc_.line(x, bottom, x, bottom + 5, "black");
    char label[32];
    std::snprintf(label, sizeof label, "%g", t);
    doc_.text(x, bottom + 18, label, "text-anchor=\"middle\"");
  }
  for (double t : nice_ticks(y_.lo, y_.hi)) {
    const double y = py(t);
    doc_.line(left_ - 5, y, left_, y, "black");
    char label[32];
    std::snprintf(label, sizeof label, "%g", t);
    doc_.text(left_ - 8, y + 4, label, "text-anchor=\"end\"");
  }
  doc_.text(left_ + width_ / 2, bottom + 40, x_label,
            "text-anchor=\"middle\" font-weight=\"bold\"");
  const double yc = top_ + height_ / 2;
  doc_.text(left_ - 55, yc, y_label,
            "text-anchor=\"middle\" font-weight=\"bold\" transform=\"rotate(-90 " +
                num(left_ - 55) + ' ' + num(yc) + ")\"");
}

void Axes::draw_zero_lines() {
  const std::string_view dashed = "stroke-dasharray=\"4,3\" class=\"zero-line\"";
  if (x_.lo <= 0.0 && 0.0 <= x_.hi) {
    doc_.line(px(0.0), top_, px(0.0), top_ + height_, "#555555", 1.0, dashed);
  }
  if (y_.lo <= 0.0 && 0.0 <= y_.hi) {
    doc_.line(left_, py(0.0), left_ + width_, py(0.0), "#555555", 1.0, dashed);
  }
}

} // namespace prequential::svg
