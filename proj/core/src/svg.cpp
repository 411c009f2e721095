#include "tverberg/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double min_x, max_y, scale, offset_x, offset_y;

  [[nodiscard]] double x(double wx) const { return offset_x + (wx - min_x) * scale; }
  [[nodiscard]] double y(double wy) const { return offset_y + (max_y - wy) * scale; }
};

}  // namespace

std::string render_svg(const PointSet& s, const GeoGraph& g, const std::optional<Point>& witness,
                       const SvgOptions& o) {
  if (s.dim() != 2) fail(ErrorKind::Usage, "SVG rendering needs planar points");
  if (witness && witness->dim() != 2) fail(ErrorKind::Usage, "SVG witness must be planar");

  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto include = [&](double x, double y, double r) {
    lo_x = std::min(lo_x, x - r);
    hi_x = std::max(hi_x, x + r);
    lo_y = std::min(lo_y, y - r);
    hi_y = std::max(hi_y, y + r);
  };
  for (const Point& p : s) include(p.x(), p.y(), 0.0);
  if (o.draw_disks) {
    for (const Edge& e : g.edges()) {
      const Ball b = diametral_ball(s[e.u], s[e.v]);
      include(b.center.x(), b.center.y(), b.radius);
    }
  }
  if (witness) include(witness->x(), witness->y(), 0.0);
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double unit_r = 0.12 * span;
  if (o.projection_center) include(o.projection_center->x(), o.projection_center->y(), unit_r);

  const double avail_w = o.width - 2.0 * o.margin;
  const double avail_h = o.height - 2.0 * o.margin;
  const double scale = std::min(avail_w / (hi_x - lo_x > 0 ? hi_x - lo_x : span),
                                avail_h / (hi_y - lo_y > 0 ? hi_y - lo_y : span));
  const View v{lo_x, hi_y, scale, o.margin + 0.5 * (avail_w - (hi_x - lo_x) * scale),
               o.margin + 0.5 * (avail_h - (hi_y - lo_y) * scale)};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(o.width) + "\" height=\"" +
         num(o.height) + "\" viewBox=\"0 0 " + num(o.width) + " " + num(o.height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(o.width) + "\" height=\"" + num(o.height) + "\" fill=\"white\"/>\n";

  const std::vector<Edge> edges = g.canonical_edges();
  if (o.draw_disks) {
    for (const Edge& e : edges) {
      const Ball b = diametral_ball(s[e.u], s[e.v]);
      out += "<circle class=\"disk\" cx=\"" + num(v.x(b.center.x())) + "\" cy=\"" + num(v.y(b.center.y())) +
             "\" r=\"" + num(b.radius * scale) + "\" fill=\"steelblue\" fill-opacity=\"0.08\" stroke=\"steelblue\" "
             "stroke-width=\"0.8\"/>\n";
    }
  }
  for (const Edge& e : edges) {
    out += "<line class=\"edge\" x1=\"" + num(v.x(s[e.u].x())) + "\" y1=\"" + num(v.y(s[e.u].y())) + "\" x2=\"" +
           num(v.x(s[e.v].x())) + "\" y2=\"" + num(v.y(s[e.v].y())) + "\" stroke=\"black\" stroke-width=\"1.4\"/>\n";
  }
  if (o.projection_center) {
    const Vec2 c = o.projection_center->xy();
    out += "<circle class=\"unit-circle\" cx=\"" + num(v.x(c.x)) + "\" cy=\"" + num(v.y(c.y)) + "\" r=\"" +
           num(unit_r * scale) + "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const Point& p : s) {
      const Vec2 d = p.xy() - c;
      if (norm(d) == 0.0) continue;
      const Vec2 q = c + unit_r * normalized(d);
      out += "<circle class=\"projection\" cx=\"" + num(v.x(q.x)) + "\" cy=\"" + num(v.y(q.y)) +
             "\" r=\"2.5\" fill=\"gray\"/>\n";
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point& p = s[i];
    out += "<circle class=\"point\" cx=\"" + num(v.x(p.x())) + "\" cy=\"" + num(v.y(p.y())) +
           "\" r=\"3.5\" fill=\"black\"/>\n";
    if (o.draw_labels) {
      out += "<text class=\"label\" x=\"" + num(v.x(p.x()) + 5.0) + "\" y=\"" + num(v.y(p.y()) - 5.0) +
             "\" font-size=\"11\" font-family=\"sans-serif\">" + std::to_string(i) + "</text>\n";
    }
  }
  if (witness) {
    out += "<circle class=\"witness\" cx=\"" + num(v.x(witness->x())) + "\" cy=\"" + num(v.y(witness->y())) +
           "\" r=\"4.5\" fill=\"crimson\" stroke=\"white\" stroke-width=\"1\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tverberg
