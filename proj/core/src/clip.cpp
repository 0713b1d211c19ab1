#include "cover/clip.hpp"

#include <algorithm>
#include <numbers>

namespace cover {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Point2 lerp(Point2 p, Point2 q, double t) { return p + t * (q - p); }

// Roots t0 <= t1 of |p + t (q - p) - c|^2 = r^2; false when the line misses.
bool segment_circle_roots(Point2 p, Point2 q, Point2 c, double r, double& t0, double& t1) {
  const Point2 d = q - p;
  const Point2 f = p - c;
  const double a = dot(d, d);
  const double b = dot(f, d);
  const double cc = dot(f, f) - r * r;
  if (a == 0.0) return false;
  const double disc = b * b - a * cc;
  if (disc < 0.0) return false;
  const double s = std::sqrt(disc);
  const double qq = -(b + std::copysign(s, b));
  if (qq == 0.0) {
    t0 = t1 = 0.0;
    return true;
  }
  t0 = qq / a;
  t1 = cc / qq;
  if (t0 > t1) std::swap(t0, t1);
  return true;
}

void drop_duplicates(TaggedPolygon& poly, double tol) {
  if (poly.vertices.empty()) return;
  TaggedPolygon out;
  out.vertices.reserve(poly.vertices.size());
  out.tags.reserve(poly.tags.size());
  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    if (!out.vertices.empty() && distance(out.vertices.back(), poly.vertices[k]) <= tol) {
      // The later vertex's outgoing edge survives.
      out.tags.back() = poly.tags[k];
      continue;
    }
    out.vertices.push_back(poly.vertices[k]);
    out.tags.push_back(poly.tags[k]);
  }
  while (out.vertices.size() > 1 && distance(out.vertices.front(), out.vertices.back()) <= tol) {
    out.vertices.pop_back();
    out.tags.pop_back();
  }
  poly = std::move(out);
}

}  // namespace

TaggedPolygon TaggedPolygon::from(const ConvexPolygon& poly, int polygon_index) {
  TaggedPolygon t;
  t.vertices = poly.vertices();
  t.tags.reserve(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) t.tags.push_back(EdgeTag::polygon(polygon_index, static_cast<int>(k)));
  return t;
}

TaggedPolygon clip_tagged(const TaggedPolygon& poly, const HalfPlane& hp, EdgeTag tag, double tol) {
  const std::size_t n = poly.size();
  TaggedPolygon out;
  if (n < 3) return out;

  std::vector<double> d(n);
  std::vector<int> side(n);
  bool all_in = true;
  bool all_out = true;
  for (std::size_t k = 0; k < n; ++k) {
    d[k] = hp.signed_distance(poly.vertices[k]);
    side[k] = d[k] > tol ? 1 : (d[k] < -tol ? -1 : 0);
    all_in = all_in && side[k] >= 0;
    all_out = all_out && side[k] <= 0;
  }
  if (all_in) return poly;
  if (all_out) return out;

  out.vertices.reserve(n + 1);
  out.tags.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k1 = (k + 1) % n;
    const Point2 p = poly.vertices[k];
    const Point2 q = poly.vertices[k1];
    const EdgeTag t = poly.tags[k];
    if (side[k] >= 0) {
      if (side[k1] >= 0) {
        out.vertices.push_back(p);
        out.tags.push_back(t);
      } else if (side[k] > 0) {
        out.vertices.push_back(p);
        out.tags.push_back(t);
        out.vertices.push_back(lerp(p, q, d[k] / (d[k] - d[k1])));
        out.tags.push_back(tag);
      } else {
        out.vertices.push_back(p);
        out.tags.push_back(tag);
      }
    } else if (side[k1] > 0) {
      out.vertices.push_back(lerp(p, q, d[k] / (d[k] - d[k1])));
      out.tags.push_back(t);
    }
  }

  BoundingBox box;
  for (const Point2& v : poly.vertices) box.extend(v);
  drop_duplicates(out, 1e-15 * box.diameter());
  if (out.vertices.size() < 3 || out.area() <= 0.0) return TaggedPolygon{};
  return out;
}

std::optional<ConvexPolygon> clip_polygon_halfplane(const ConvexPolygon& poly, const HalfPlane& hp) {
  TaggedPolygon t = clip_tagged(TaggedPolygon::from(poly, 0), hp, EdgeTag::frame());
  if (t.empty()) return std::nullopt;
  return ConvexPolygon::unchecked(std::move(t.vertices));
}

double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b) {
  TaggedPolygon t = TaggedPolygon::from(a, 0);
  for (std::size_t k = 0; k < b.size() && !t.empty(); ++k) {
    t = clip_tagged(t, HalfPlane{b[k], -b.edge_normal(k)}, EdgeTag::frame());
  }
  return t.empty() ? 0.0 : t.area();
}

// ---------------------------------------------------------------------------

double arc_span(Point2 center, Point2 v, Point2 w) {
  if (v == w) return kTwoPi;
  double s = polar_angle(w - center) - polar_angle(v - center);
  if (s <= 0.0) s += kTwoPi;
  return s;
}

double arc_x_dy(Point2 center, double r, double theta_v, double span) {
  const double theta_w = theta_v + span;
  const double sv = std::sin(theta_v), cv = std::cos(theta_v);
  const double sw = std::sin(theta_w), cw = std::cos(theta_w);
  return center.x * r * (sw - sv) + 0.5 * r * r * (span + sw * cw - sv * cv);
}

double CurvilinearPolygon::area() const {
  double s = 0.0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Point2 v = cycle[k].point;
    const Point2 w = next(k).point;
    if (cycle[k].kind == PieceKind::Segment) {
      s += segment_x_dy(v, w);
    } else {
      s += arc_x_dy(center, radius, polar_angle(v - center), arc_span(center, v, w));
    }
  }
  return s;
}

std::optional<CurvilinearPolygon> intersect_polygon_ball(const TaggedPolygon& W, Point2 center, double r) {
  const std::size_t n = W.size();
  if (n < 3) return std::nullopt;

  CurvilinearPolygon S;
  S.center = center;
  S.radius = r;
  S.cycle.reserve(2 * n);
  const double r2 = r * r;
  auto push = [&](Point2 p, PieceKind kind, EdgeTag tag) { S.cycle.push_back({p, kind, tag, {}}); };

  for (std::size_t k = 0; k < n; ++k) {
    const Point2 p = W.vertices[k];
    const Point2 q = W.vertices[(k + 1) % n];
    const EdgeTag tag = W.tags[k];
    const double dp = norm2(p - center);
    const double dq = norm2(q - center);
    const bool p_in = dp <= r2;
    const bool q_in = dq <= r2;

    if (p_in && q_in) {
      push(p, PieceKind::Segment, tag);
    } else if (p_in && !q_in) {
      double t0 = 0.0, t1 = 1.0;
      segment_circle_roots(p, q, center, r, t0, t1);
      const Point2 a = lerp(p, q, std::clamp(t1, 0.0, 1.0));
      if (dp < r2) push(p, PieceKind::Segment, tag);
      push(a, PieceKind::Arc, tag);
    } else if (!p_in && q_in) {
      double t0 = 0.0, t1 = 1.0;
      segment_circle_roots(p, q, center, r, t0, t1);
      push(lerp(p, q, std::clamp(t0, 0.0, 1.0)), PieceKind::Segment, tag);
    } else {
      double t0 = 0.0, t1 = 0.0;
      if (segment_circle_roots(p, q, center, r, t0, t1) && t0 > 0.0 && t1 < 1.0 && t0 < t1) {
        push(lerp(p, q, t0), PieceKind::Segment, tag);
        push(lerp(p, q, t1), PieceKind::Arc, tag);
      }
    }
  }

  // Collapse zero-length pieces (vertices of W lying on the circle).
  if (S.cycle.size() > 1) {
    const double tol = 1e-14 * r;
    std::vector<CycleVertex> kept;
    kept.reserve(S.cycle.size());
    for (std::size_t k = 0; k < S.cycle.size(); ++k) {
      const Point2 nxt = S.cycle[(k + 1) % S.cycle.size()].point;
      if (distance(S.cycle[k].point, nxt) > tol) kept.push_back(S.cycle[k]);
    }
    if (kept.size() < 2) return std::nullopt;
    if (kept.size() == 2 && kept[0].kind == PieceKind::Segment && kept[1].kind == PieceKind::Segment) {
      return std::nullopt;
    }
    S.cycle = std::move(kept);
  }

  if (S.cycle.empty()) {
    // Either the ball lies inside W or the two are disjoint.
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) {
      const Point2 e = W.vertices[(k + 1) % n] - W.vertices[k];
      inside = cross(e, center - W.vertices[k]) >= 0.0;
    }
    if (!inside) return std::nullopt;
    S.is_full_ball = true;
    push(Point2{center.x, center.y + r}, PieceKind::Arc, EdgeTag::frame());
  }
  return S;
}

std::optional<CurvilinearPolygon> intersect_polygon_ball(const ConvexPolygon& W, Point2 center, double r) {
  return intersect_polygon_ball(TaggedPolygon::from(W, 0), center, r);
}

}  // namespace cover
