#include "cover/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cover/voronoi.hpp"

namespace cover {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMergeAngleTol = 1e-10;

// |a - b| measured around the circle.
double angle_gap(double a, double b) {
  double d = std::fmod(b - a, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return std::min(d, kTwoPi - d);
}

BoundingBox frame_for(const Region& region) {
  const double d = region.diameter();
  return region.bounds().inflated(0.01 * d + 1e-300);
}

TaggedPolygon restrict_to_cell(const TaggedPolygon& poly, const std::vector<HalfPlane>& planes, double tol) {
  TaggedPolygon w = poly;
  for (const HalfPlane& hp : planes) {
    if (w.empty()) break;
    w = clip_tagged(w, hp, EdgeTag::bisector(hp.neighbor), tol);
  }
  return w;
}

BoundingBox cell_box(const TaggedPolygon& cell) {
  BoundingBox b;
  for (const Point2& v : cell.vertices) b.extend(v);
  return b;
}

// Adds what edge `tag` says about a point z of circle i lying on it.
void annotate_from_tag(const Region& region, const Configuration& cfg, EdgeTag tag, Point2 z,
                       VertexAnnotation& ann, DegeneracyFlags& flags) {
  const double eps = region.eps_geo();
  if (tag.kind == EdgeTag::Kind::Polygon) {
    const auto j = static_cast<std::size_t>(tag.index);
    const auto k = static_cast<std::size_t>(tag.edge);
    const ConvexPolygon& poly = region.polygon(j);
    const std::size_t k1 = (k + 1) % poly.size();
    const bool at_k = distance(z, poly[k]) <= eps && region.vertex_on_boundary(j, k);
    const bool at_k1 = distance(z, poly[k1]) <= eps && region.vertex_on_boundary(j, k1);
    if (at_k || at_k1) {
      if (!ann.on_boundary_A || ann.nu_A) ++flags.corner_contacts;
      ann.on_boundary_A = true;
      ann.nu_A.reset();
    } else if (region.edge_on_boundary(j, k) && !(ann.on_boundary_A && !ann.nu_A)) {
      ann.on_boundary_A = true;
      ann.nu_A = poly.edge_normal(k);
    }
  } else if (tag.kind == EdgeTag::Kind::Bisector) {
    if (std::find(ann.L.begin(), ann.L.end(), tag.index) == ann.L.end()) {
      ann.L.push_back(tag.index);
      ann.vartheta.push_back(polar_angle(z - cfg.centers[static_cast<std::size_t>(tag.index)]));
    }
  }
}

VertexAnnotation annotate(const Region& region, const Configuration& cfg, std::size_t i, const TaggedPolygon& W,
                          const CycleVertex& cv, DegeneracyFlags& flags) {
  VertexAnnotation ann;
  ann.theta = polar_angle(cv.point - cfg.centers[i]);
  annotate_from_tag(region, cfg, cv.on_edge, cv.point, ann, flags);
  // A point sitting on a corner of W also lies on the neighboring edge.
  const double eps = region.eps_geo();
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (distance(W.vertices[k], cv.point) > eps) continue;
    const EdgeTag before = W.tags[(k + W.size() - 1) % W.size()];
    const EdgeTag after = W.tags[k];
    annotate_from_tag(region, cfg, before, cv.point, ann, flags);
    annotate_from_tag(region, cfg, after, cv.point, ann, flags);
  }
  if (ann.on_boundary_A && !ann.L.empty()) ++flags.mixed_endpoints;
  return ann;
}

struct RawArc {
  Point2 v, w;
  double theta_v = 0.0;
  double span = 0.0;
  VertexAnnotation ann_v, ann_w;
};

void merge_arcs(std::vector<RawArc>& raw, BallBook& ball, DegeneracyFlags& flags) {
  const std::size_t n = raw.size();
  std::vector<int> next(n, -1);
  std::vector<bool> has_pred(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (!raw[a].ann_w.mergeable()) continue;
    const double end = raw[a].theta_v + raw[a].span;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || has_pred[b] || !raw[b].ann_v.mergeable()) continue;
      if (angle_gap(end, raw[b].theta_v) <= kMergeAngleTol) {
        next[a] = static_cast<int>(b);
        has_pred[b] = true;
        break;
      }
    }
    if (next[a] < 0) ++flags.unmatched_merges;
  }

  std::vector<bool> used(n, false);
  auto emit_chain = [&](std::size_t start, bool closed) {
    Arc arc;
    arc.v = raw[start].v;
    arc.theta_v = raw[start].theta_v;
    arc.ann_v = raw[start].ann_v;
    double span = 0.0;
    std::size_t cur = start;
    std::size_t last = start;
    while (true) {
      used[cur] = true;
      span += raw[cur].span;
      last = cur;
      const int nx = next[cur];
      if (nx < 0 || used[static_cast<std::size_t>(nx)]) break;
      cur = static_cast<std::size_t>(nx);
    }
    arc.w = raw[last].w;
    arc.ann_w = raw[last].ann_w;
    arc.theta_w = arc.theta_v + (closed ? kTwoPi : std::min(span, kTwoPi));
    return arc;
  };

  for (std::size_t a = 0; a < n; ++a) {
    if (!has_pred[a]) ball.arcs.push_back(emit_chain(a, false));
  }
  bool cycle = false;
  std::vector<Arc> cycles;
  for (std::size_t a = 0; a < n; ++a) {
    if (!used[a]) {
      cycle = true;
      cycles.push_back(emit_chain(a, true));
    }
  }
  if (cycle && ball.arcs.empty() && cycles.size() == 1) {
    ball.circle = true;
  } else if (cycle) {
    ++flags.unmatched_merges;
    for (Arc& c : cycles) ball.arcs.push_back(std::move(c));
  }
}

}  // namespace

Partition build_partition(const Region& region, const Configuration& cfg) {
  cfg.validate();
  const std::size_t m = cfg.size();
  const std::size_t p = region.size();
  const double r = cfg.radius;
  const double tol = region.eps_geo();

  Partition out;
  out.book.balls.resize(m);
  out.book.balls_of_polygon.resize(p);

  const VoronoiCells cells(cfg.centers, frame_for(region), tol);
  out.flags.coincident_centers = cells.coincident();

  std::vector<TaggedPolygon> polys;
  std::vector<BoundingBox> boxes;
  polys.reserve(p);
  boxes.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    polys.push_back(TaggedPolygon::from(region.polygon(j), static_cast<int>(j)));
    boxes.push_back(region.polygon(j).bounds());
  }

  for (std::size_t i = 0; i < m; ++i) {
    const TaggedPolygon& cell = cells.cell(i);
    if (cell.empty()) continue;
    const Point2 c = cfg.centers[i];
    BoundingBox reach;
    reach.extend(c - Point2{r, r});
    reach.extend(c + Point2{r, r});
    const BoundingBox cb = cell_box(cell);

    BallBook& ball = out.book.balls[i];
    std::vector<RawArc> raw;
    for (std::size_t j = 0; j < p; ++j) {
      if (!boxes[j].overlaps(reach) || !boxes[j].overlaps(cb)) continue;
      const TaggedPolygon W = restrict_to_cell(polys[j], cells.halfplanes(i), tol);
      if (W.empty()) continue;
      auto piece = intersect_polygon_ball(W, c, r);
      if (!piece) continue;
      piece->ball = static_cast<int>(i);
      piece->polygon = static_cast<int>(j);

      ball.polygons.push_back(static_cast<int>(j));
      out.book.pieces.emplace_back(static_cast<int>(i), static_cast<int>(j));
      out.book.balls_of_polygon[j].push_back(static_cast<int>(i));

      if (piece->is_full_ball) {
        ball.circle = true;
        out.pieces.push_back(std::move(*piece));
        continue;
      }
      auto& cyc = piece->cycle;
      const std::size_t n = cyc.size();
      for (std::size_t k = 0; k < n; ++k) {
        const bool starts_arc = cyc[k].kind == PieceKind::Arc;
        const bool ends_arc = cyc[(k + n - 1) % n].kind == PieceKind::Arc;
        if (starts_arc || ends_arc) cyc[k].annotation = annotate(region, cfg, i, W, cyc[k], out.flags);
      }
      for (std::size_t k = 0; k < n; ++k) {
        const CycleVertex& a = cyc[k];
        const CycleVertex& b = cyc[(k + 1) % n];
        if (a.kind == PieceKind::Segment) {
          ball.edges.emplace_back(a.point, b.point);
        } else {
          raw.push_back({a.point, b.point, a.annotation.theta, arc_span(c, a.point, b.point), a.annotation, b.annotation});
        }
      }
      out.pieces.push_back(std::move(*piece));
    }
    if (!ball.circle) merge_arcs(raw, ball, out.flags);
  }
  return out;
}

std::vector<TaggedPolygon> restricted_cells(const Region& region, const Configuration& cfg) {
  cfg.validate();
  const VoronoiCells cells(cfg.centers, frame_for(region), region.eps_geo());
  std::vector<TaggedPolygon> out;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (cells.cell(i).empty()) continue;
    for (std::size_t j = 0; j < region.size(); ++j) {
      TaggedPolygon W =
          restrict_to_cell(TaggedPolygon::from(region.polygon(j), static_cast<int>(j)), cells.halfplanes(i), region.eps_geo());
      if (!W.empty()) out.push_back(std::move(W));
    }
  }
  return out;
}

}  // namespace cover
