#include "cover/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "cover/partition.hpp"

namespace cover {

namespace {

constexpr const char* kRegionFill = "#e8e4d8";
constexpr const char* kBoundary = "#222222";
constexpr const char* kInterior = "#b0a890";
constexpr const char* kBallFill = "#3b6fb6";
constexpr const char* kCell = "#6a8f3a";
constexpr const char* kArc = "#d62728";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Viewport {
  BoundingBox box;
  double scale = 1.0;
  double pad = 0.0;
  double width = 0.0, height = 0.0;

  double X(double x) const { return pad + (x - box.lo.x) * scale; }
  double Y(double y) const { return height - pad - (y - box.lo.y) * scale; }
  std::string at(Point2 p) const { return fmt(X(p.x)) + "," + fmt(Y(p.y)); }
};

Viewport fit(const Region& region, const std::optional<Configuration>& cfg, const RenderOptions& o) {
  Viewport v;
  v.box = region.bounds();
  if (cfg) {
    for (const Point2& c : cfg->centers) {
      v.box.extend(c - Point2{cfg->radius, cfg->radius});
      v.box.extend(c + Point2{cfg->radius, cfg->radius});
    }
  }
  const double w = std::max(v.box.hi.x - v.box.lo.x, 1e-300);
  const double h = std::max(v.box.hi.y - v.box.lo.y, 1e-300);
  v.pad = o.margin * o.size;
  const double inner = o.size - 2.0 * v.pad;
  v.scale = inner / std::max(w, h);
  v.width = std::round(w * v.scale + 2.0 * v.pad);
  v.height = std::round(h * v.scale + 2.0 * v.pad);
  return v;
}

std::string polygon_path(const Viewport& v, const std::vector<Point2>& pts) {
  std::string d = "M" + v.at(pts[0]);
  for (std::size_t k = 1; k < pts.size(); ++k) d += " L" + v.at(pts[k]);
  return d + " Z";
}

}  // namespace

std::string render_svg(const Region& region, const std::optional<Configuration>& cfg, const RenderOptions& options) {
  const Viewport v = fit(region, cfg, options);
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(v.width) + "\" height=\"" +
       fmt(v.height) + "\" viewBox=\"0 0 " + fmt(v.width) + " " + fmt(v.height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  s += "<g id=\"region\" fill=\"" + std::string(kRegionFill) + "\" stroke=\"none\">\n";
  for (const ConvexPolygon& poly : region.polygons()) s += "<path d=\"" + polygon_path(v, poly.vertices()) + "\"/>\n";
  s += "</g>\n";

  s += "<g id=\"edges\" fill=\"none\" stroke-width=\"1\">\n";
  for (std::size_t j = 0; j < region.size(); ++j) {
    const ConvexPolygon& poly = region.polygon(j);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const bool outer = region.edge_on_boundary(j, k);
      s += "<line x1=\"" + fmt(v.X(poly[k].x)) + "\" y1=\"" + fmt(v.Y(poly[k].y)) + "\" x2=\"" +
           fmt(v.X(poly.next(k).x)) + "\" y2=\"" + fmt(v.Y(poly.next(k).y)) + "\" stroke=\"" +
           (outer ? kBoundary : kInterior) + "\"" + (outer ? " stroke-width=\"2\"" : " stroke-dasharray=\"4,3\"") +
           "/>\n";
    }
  }
  s += "</g>\n";

  if (!cfg) {
    s += "</svg>\n";
    return s;
  }

  const double rp = cfg->radius * v.scale;
  s += "<g id=\"balls\" fill=\"" + std::string(kBallFill) + "\" fill-opacity=\"0.18\" stroke=\"" + kBallFill +
       "\" stroke-opacity=\"0.6\">\n";
  for (const Point2& c : cfg->centers) {
    s += "<circle cx=\"" + fmt(v.X(c.x)) + "\" cy=\"" + fmt(v.Y(c.y)) + "\" r=\"" + fmt(rp) + "\"/>\n";
  }
  s += "</g>\n";

  if (options.partition) {
    s += "<g id=\"cells\" fill=\"none\" stroke=\"" + std::string(kCell) + "\" stroke-width=\"0.8\">\n";
    for (const TaggedPolygon& w : restricted_cells(region, *cfg)) s += "<path d=\"" + polygon_path(v, w.vertices) + "\"/>\n";
    s += "</g>\n";
  }

  if (options.arcs) {
    const Partition part = build_partition(region, *cfg);
    s += "<g id=\"arcs\" fill=\"none\" stroke=\"" + std::string(kArc) + "\" stroke-width=\"2.5\">\n";
    for (std::size_t i = 0; i < part.book.size(); ++i) {
      const BallBook& ball = part.book.balls[i];
      const Point2 c = cfg->centers[i];
      if (ball.circle) {
        s += "<circle cx=\"" + fmt(v.X(c.x)) + "\" cy=\"" + fmt(v.Y(c.y)) + "\" r=\"" + fmt(rp) + "\"/>\n";
        continue;
      }
      for (const Arc& a : ball.arcs) {
        // Screen y points down, so counter-clockwise arcs use sweep flag 0.
        const Point2 from = c + cfg->radius * unit(a.theta_v);
        const Point2 to = c + cfg->radius * unit(a.theta_w);
        if (a.span() >= 2.0 * std::numbers::pi - 1e-12) {
          s += "<circle cx=\"" + fmt(v.X(c.x)) + "\" cy=\"" + fmt(v.Y(c.y)) + "\" r=\"" + fmt(rp) + "\"/>\n";
          continue;
        }
        s += "<path d=\"M" + v.at(from) + " A" + fmt(rp) + "," + fmt(rp) + " 0 " + (a.span() > std::numbers::pi ? "1" : "0") +
             ",0 " + v.at(to) + "\"/>\n";
      }
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace cover
