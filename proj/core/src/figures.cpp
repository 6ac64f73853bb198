#include "lpq/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lpq {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Extent {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -std::numeric_limits<double>::infinity();
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();

  void include(const std::vector<Series>& series_list) {
    for (const auto& s : series_list) {
      for (double v : s.x) {
        x_lo = std::min(x_lo, v);
        x_hi = std::max(x_hi, v);
      }
      for (double v : s.y) {
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
      }
    }
    if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
    if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
    double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  }
};

class Panel {
 public:
  Panel(double px, double py, double width, double height, Extent extent)
      : px_(px), py_(py), w_(width), h_(height), e_(extent) {}

  double sx(double x) const { return px_ + (x - e_.x_lo) / (e_.x_hi - e_.x_lo) * w_; }
  double sy(double y) const { return py_ + h_ - (y - e_.y_lo) / (e_.y_hi - e_.y_lo) * h_; }

  void frame(std::string& svg, const std::string& title) const {
    svg += "<rect x=\"" + fmt(px_) + "\" y=\"" + fmt(py_) + "\" width=\"" + fmt(w_) +
           "\" height=\"" + fmt(h_) + "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(px_ + w_ / 2) + "\" y=\"" + fmt(py_ - 8) +
           "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" + title +
           "</text>\n";
  }

  void polyline(std::string& svg, const Series& s) const {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      throw std::invalid_argument("figure series: x and y must have equal positive length");
    }
    svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.4\"";
    if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
    svg += " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg += " ";
      svg += fmt(sx(s.x[i])) + "," + fmt(sy(s.y[i]));
    }
    svg += "\"/>\n";
  }

  void legend(std::string& svg, const std::vector<Series>& series_list) const {
    double y = py_ + 16;
    for (const auto& s : series_list) {
      if (s.label.empty()) continue;
      svg += "<text x=\"" + fmt(px_ + w_ - 6) + "\" y=\"" + fmt(y) +
             "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" +
             s.color + "\">" + s.label + "</text>\n";
      y += 14;
    }
  }

 private:
  double px_, py_, w_, h_;
  Extent e_;
};

std::string svg_open(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_panel(std::string& svg, double px, double py, double w, double h,
                const std::vector<Series>& series_list, const std::string& title) {
  Extent e;
  e.include(series_list);
  Panel panel(px, py, w, h, e);
  panel.frame(svg, title);
  for (const auto& s : series_list) panel.polyline(svg, s);
  panel.legend(svg, series_list);
}

}  // namespace

std::string render_rearrangement_figure(const std::vector<Series>& original_panel,
                                        const std::vector<Series>& profile_panel) {
  std::string svg = svg_open(860, 380);
  draw_panel(svg, 40, 40, 360, 300, original_panel, "original function");
  draw_panel(svg, 460, 40, 360, 300, profile_panel, "decreasing rearrangement");
  svg += "</svg>\n";
  return svg;
}

std::string render_riesz_square_figure(double inv_p0, double inv_q0, double inv_p1, double inv_q1,
                                       double theta) {
  for (double v : {inv_p0, inv_q0, inv_p1, inv_q1}) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
      throw std::invalid_argument("riesz square: inverse exponents must lie in [0, 1]");
    }
  }
  if (!(theta >= 0.0) || !(theta <= 1.0)) {
    throw std::invalid_argument("riesz square: theta must lie in [0, 1]");
  }
  const double side = 320.0, ox = 60.0, oy = 30.0;
  auto X = [&](double v) { return ox + v * side; };
  auto Y = [&](double v) { return oy + side - v * side; };
  std::string svg = svg_open(440, 420);
  svg += "<rect x=\"" + fmt(ox) + "\" y=\"" + fmt(oy) + "\" width=\"" + fmt(side) +
         "\" height=\"" + fmt(side) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
  for (int i = 1; i < 4; ++i) {
    double v = 0.25 * i;
    svg += "<line x1=\"" + fmt(X(v)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(X(v)) +
           "\" y2=\"" + fmt(Y(1)) + "\" stroke=\"#dddddd\" stroke-dasharray=\"3 3\"/>\n";
    svg += "<line x1=\"" + fmt(X(0)) + "\" y1=\"" + fmt(Y(v)) + "\" x2=\"" + fmt(X(1)) +
           "\" y2=\"" + fmt(Y(v)) + "\" stroke=\"#dddddd\" stroke-dasharray=\"3 3\"/>\n";
  }
  svg += "<line x1=\"" + fmt(X(inv_p0)) + "\" y1=\"" + fmt(Y(inv_q0)) + "\" x2=\"" +
         fmt(X(inv_p1)) + "\" y2=\"" + fmt(Y(inv_q1)) +
         "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  const double cx = inv_p0 + theta * (inv_p1 - inv_p0);
  const double cy = inv_q0 + theta * (inv_q1 - inv_q0);
  auto dot = [&](double x, double y, const std::string& color, double r) {
    return "<circle cx=\"" + fmt(X(x)) + "\" cy=\"" + fmt(Y(y)) + "\" r=\"" + fmt(r) +
           "\" fill=\"" + color + "\"/>\n";
  };
  svg += dot(inv_p0, inv_q0, "#222222", 4.0);
  svg += dot(inv_p1, inv_q1, "#222222", 4.0);
  svg += dot(cx, cy, "#c0392b", 5.0);
  svg += "<text x=\"" + fmt(X(inv_p0) + 6) + "\" y=\"" + fmt(Y(inv_q0) - 6) +
         "\" font-size=\"12\" font-family=\"sans-serif\">A</text>\n";
  svg += "<text x=\"" + fmt(X(inv_p1) + 6) + "\" y=\"" + fmt(Y(inv_q1) - 6) +
         "\" font-size=\"12\" font-family=\"sans-serif\">B</text>\n";
  svg += "<text x=\"" + fmt(X(cx) + 6) + "\" y=\"" + fmt(Y(cy) - 6) +
         "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"#c0392b\">C(theta=" + fmt(theta) +
         ")</text>\n";
  svg += "<text x=\"" + fmt(ox + side / 2) + "\" y=\"" + fmt(oy + side + 30) +
         "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">input index 1/p</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt(oy + side / 2) +
         "\" font-size=\"12\" font-family=\"sans-serif\" transform=\"rotate(-90 18 " +
         fmt(oy + side / 2) + ")\">output index 1/q</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::string render_evolution_figure(const std::vector<Series>& heat_panel,
                                    const std::vector<Series>& dispersive_panel) {
  std::string svg = svg_open(860, 640);
  draw_panel(svg, 40, 40, 780, 250, heat_panel, "heat flow: amplitude flattens");
  draw_panel(svg, 40, 360, 780, 250, dispersive_panel, "free Schrodinger: oscillation under a decaying envelope");
  svg += "</svg>\n";
  return svg;
}

}  // namespace lpq
