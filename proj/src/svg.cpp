#include "absurf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "absurf/error.hpp"

namespace absurf {

namespace {

std::string num(double value) {
  if (std::fabs(value) < 5e-7) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

struct Box {
  double t_min, t_max, y_min, y_max;
};

class SvgWriter {
 public:
  SvgWriter(Box box, double scale) : box_(box), scale_(scale) {}

  double x(double t) const { return t * scale_; }
  double y(double v) const { return -v * scale_; }

  void line(double t0, double y0, double t1, double y1, const std::string& style) {
    body_ += "  <line x1=\"" + num(x(t0)) + "\" y1=\"" + num(y(y0)) + "\" x2=\"" + num(x(t1)) + "\" y2=\"" +
             num(y(y1)) + "\" " + style + "/>\n";
  }

  void text(double t, double v, const std::string& label) {
    body_ += "  <text x=\"" + num(x(t)) + "\" y=\"" + num(y(v)) + "\" font-size=\"" + num(0.15 * scale_) +
             "\">" + label + "</text>\n";
  }

  void polygon(const Polygon& poly, const std::string& color, const std::string& id) {
    std::string d;
    for (const Point& p : poly.vertices()) {
      d += (d.empty() ? "M " : " L ") + num(x(p.t.to_double())) + " " + num(y(p.y.to_double()));
    }
    d += " Z";
    body_ += "  <path id=\"" + id + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"" + num(0.02 * scale_) + "\"/>\n";
  }

  std::string finish() const {
    const double vx = x(box_.t_min);
    const double vy = y(box_.y_max);
    const double w = (box_.t_max - box_.t_min) * scale_;
    const double h = (box_.y_max - box_.y_min) * scale_;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(w) + " " +
           num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\">\n";
    out += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 Z\"/></marker></defs>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  Box box_;
  double scale_;
  std::string body_;
};

}  // namespace

std::string render_region_svg(const QuadraticValue& eps, const std::optional<QuadraticValue>& alpha, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::ParseError, "scale must be positive");
  const Polygon delta = region_delta(eps);
  std::optional<Polygon> delta_alpha;
  if (alpha) delta_alpha = region_delta_alpha(eps, *alpha);

  double t_max = 0.0;
  double y_max = 0.0;
  auto extend = [&](const Polygon& poly) {
    for (const Point& p : poly.vertices()) {
      t_max = std::max(t_max, p.t.to_double());
      y_max = std::max(y_max, p.y.to_double());
    }
  };
  extend(delta);
  if (delta_alpha) extend(*delta_alpha);
  const double mt = 0.1 * t_max;
  const double my = 0.1 * y_max;
  const Box box{-mt, t_max + mt, -my, y_max + my};

  SvgWriter svg(box, scale);
  const std::string axis = "stroke=\"black\" stroke-width=\"" + num(0.01 * scale) + "\" marker-end=\"url(#arrow)\"";
  svg.line(box.t_min, 0.0, box.t_max, 0.0, axis);
  svg.line(0.0, box.y_min, 0.0, box.y_max, axis);
  svg.text(box.t_max - 0.5 * mt, 0.5 * my, "t");
  svg.text(0.2 * mt, box.y_max - 0.5 * my, "y");

  const std::string dashed = "stroke=\"gray\" stroke-width=\"" + num(0.01 * scale) + "\" stroke-dasharray=\"" +
                             num(0.05 * scale) + "," + num(0.05 * scale) + "\"";
  const bool t2_inside = 2.0 >= box.t_min && 2.0 <= box.t_max;
  const bool y1_inside = 1.0 >= box.y_min && 1.0 <= box.y_max;
  if (t2_inside) svg.line(2.0, 0.0, 2.0, std::min(1.0, box.y_max), dashed);
  if (y1_inside) svg.line(0.0, 1.0, std::min(2.0, box.t_max), 1.0, dashed);

  svg.polygon(delta, "red", "delta");
  if (delta_alpha) svg.polygon(*delta_alpha, "blue", "delta_alpha");
  return svg.finish();
}

}  // namespace absurf
