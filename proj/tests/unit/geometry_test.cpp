#include <gtest/gtest.h>

#include "helpers.hpp"

namespace cover {
namespace {

using testing::rect;

TEST(Polygon, UnitSquareArea) { EXPECT_DOUBLE_EQ(rect(0, 0, 1, 1).area(), 1.0); }

TEST(Polygon, RejectsBadInput) {
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}}), InvalidInput);
  EXPECT_THROW(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InvalidInput);            // clockwise
  EXPECT_THROW(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), InvalidInput);  // reflex
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}), InvalidInput);                    // no area
}

TEST(Polygon, DropsRepeatedClosingVertex) {
  const ConvexPolygon p({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  EXPECT_EQ(p.size(), 4u);
}

TEST(Polygon, EdgeNormalsPointOutward) {
  const ConvexPolygon p = rect(0, 0, 1, 1);
  EXPECT_EQ(p.edge_normal(0), (Point2{0, -1}));
  EXPECT_EQ(p.edge_normal(1), (Point2{1, 0}));
}

TEST(Region, Volumes) {
  EXPECT_DOUBLE_EQ(region_volume(testing::square_region(1.0)), 1.0);
  EXPECT_NEAR(region_volume(get_instance("star")), 15.28093084375720, 1e-10);
  EXPECT_NEAR(region_volume(get_instance("nonconvex_holes")), 0.69111111111111101, 1e-12);
}

TEST(Region, DetectsSharedEdges) {
  const Region r = testing::two_squares();
  EXPECT_FALSE(r.edge_on_boundary(0, 1));
  EXPECT_FALSE(r.edge_on_boundary(1, 3));
  for (std::size_t k : {0u, 2u, 3u}) EXPECT_TRUE(r.edge_on_boundary(0, k));
  // Endpoints of the shared edge still touch the outer boundary.
  EXPECT_TRUE(r.vertex_on_boundary(0, 1));
  EXPECT_TRUE(r.vertex_on_boundary(0, 2));
}

TEST(Region, ExplicitFlagsMustBeTwinned) {
  std::vector<std::vector<bool>> flags = {{true, false, true, true}, {true, true, true, true}};
  EXPECT_NO_THROW(Region({rect(0, 0, 1, 1), rect(1, 0, 2, 1)}, flags));
  flags = {{false, true, true, true}, {true, true, true, true}};
  EXPECT_THROW(Region({rect(0, 0, 1, 1), rect(1, 0, 2, 1)}, flags), InvalidInput);
}

TEST(Region, RejectsOverlap) { EXPECT_THROW(Region({rect(0, 0, 1, 1), rect(0.5, 0, 1.5, 1)}), InvalidInput); }

TEST(Region, Contains) {
  const Region r = testing::two_squares();
  EXPECT_TRUE(r.contains({1.5, 0.5}));
  EXPECT_FALSE(r.contains({2.5, 0.5}));
}

TEST(Configuration, PackRoundTrip) {
  Configuration c{{{1, 2}, {3, 4}}, 0.5};
  const Eigen::VectorXd v = c.packed();
  ASSERT_EQ(v.size(), 5);
  EXPECT_EQ(v[4], 0.5);
  EXPECT_EQ(v[2], 3.0);
  const Configuration back = Configuration::unpack(v);
  EXPECT_EQ(back.centers, c.centers);
  EXPECT_EQ(back.radius, c.radius);
}

TEST(Configuration, Validate) {
  EXPECT_THROW((Configuration{{}, 1.0}.validate()), InvalidInput);
  EXPECT_THROW((Configuration{{{0, 0}}, 0.0}.validate()), InvalidInput);
  EXPECT_THROW((Configuration{{{0, NAN}}, 1.0}.validate()), InvalidInput);
}

TEST(Clip, HalfPlaneExamples) {
  const HalfPlane x_le_1{{1, 0}, {-1, 0}};
  const auto a = clip_polygon_halfplane(rect(0, 0, 2, 2), x_le_1);
  ASSERT_TRUE(a);
  EXPECT_DOUBLE_EQ(a->area(), 2.0);
  EXPECT_EQ(a->bounds().hi.x, 1.0);

  const auto b = clip_polygon_halfplane(rect(0, 0, 1, 1), HalfPlane{{2, 0}, {-1, 0}});
  ASSERT_TRUE(b);
  EXPECT_EQ(b->vertices(), rect(0, 0, 1, 1).vertices());

  EXPECT_FALSE(clip_polygon_halfplane(rect(0, 0, 1, 1), HalfPlane{{-1, 0}, {-1, 0}}));
}

TEST(Clip, OrientationAndAreaProperty) {
  SplitMix64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const double a = 2 * testing::kPi * rng.uniform();
    const HalfPlane hp{{rng.uniform() * 3 - 0.5, rng.uniform() * 3 - 0.5}, unit(a)};
    const ConvexPolygon poly = rect(0, 0, 2, 2);
    const TaggedPolygon c = clip_tagged(TaggedPolygon::from(poly, 0), hp, EdgeTag::bisector(1));
    if (c.empty()) continue;
    EXPECT_GT(c.area(), 0.0);
    EXPECT_LE(c.area(), poly.area() + 1e-12);
    // Complementary halfplane areas add back to the whole.
    const TaggedPolygon d = clip_tagged(TaggedPolygon::from(poly, 0), HalfPlane{hp.point, -hp.normal}, EdgeTag::frame());
    EXPECT_NEAR(c.area() + (d.empty() ? 0.0 : d.area()), 4.0, 1e-12);
  }
}

TEST(Bisector, Examples) {
  const std::vector<Point2> one = {{0, 0}};
  EXPECT_TRUE(bisector_halfplanes(one, 0).empty());

  const std::vector<Point2> two = {{0, 0}, {2, 0}};
  const auto h = bisector_halfplanes(two, 0);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_DOUBLE_EQ(h[0].signed_distance({1, 0}), 0.0);
  EXPECT_EQ(h[0].normal, (Point2{-1, 0}));
  EXPECT_EQ(h[0].neighbor, 1);

  const std::vector<Point2> dup = {{0, 0}, {0, 0}};
  EXPECT_THROW(bisector_halfplanes(dup, 0), DuplicateCenters);
}

TEST(Bisector, SquareCornersGiveTwoEffectiveCuts) {
  const std::vector<Point2> corners = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  BoundingBox frame;
  frame.extend({-1, -1});
  frame.extend({2, 2});
  const VoronoiCells cells(corners, frame, 1e-12);
  const TaggedPolygon& c = cells.cell(0);
  EXPECT_NEAR(c.area(), 1.5 * 1.5, 1e-12);
  for (const Point2& v : c.vertices) {
    EXPECT_LE(v.x, 0.5 + 1e-12);
    EXPECT_LE(v.y, 0.5 + 1e-12);
  }
  int cuts = 0;
  for (const EdgeTag& t : c.tags) cuts += t.kind == EdgeTag::Kind::Bisector;
  EXPECT_EQ(cuts, 2);
}

TEST(Voronoi, RestrictedCellsPartitionEachPolygon) {
  for (const std::string& name : instance_names()) {
    const Region region = get_instance(name);
    for (std::uint64_t k = 0; k < 5; ++k) {
      const Configuration cfg = random_screened_config(region, 3 + 5 * static_cast<int>(k), 11, k);
      const std::vector<TaggedPolygon> cells = restricted_cells(region, cfg);
      std::vector<double> by_polygon(region.size(), 0.0);
      for (const TaggedPolygon& w : cells) {
        int j = -1;
        for (const EdgeTag& t : w.tags)
          if (t.kind == EdgeTag::Kind::Polygon) j = t.index;
        if (j < 0) {
          // Cell strictly inside one polygon: locate it by its centroid.
          Point2 c;
          for (const Point2& v : w.vertices) c = c + v / static_cast<double>(w.size());
          for (std::size_t q = 0; q < region.size(); ++q)
            if (region.polygon(q).contains(c)) j = static_cast<int>(q);
        }
        ASSERT_GE(j, 0);
        by_polygon[j] += w.area();
      }
      for (std::size_t j = 0; j < region.size(); ++j) {
        const double a = region.polygon(j).area();
        EXPECT_NEAR(by_polygon[j], a, 1e-10 * a) << name << " polygon " << j;
      }
    }
  }
}

TEST(BallClip, Examples) {
  const auto whole = intersect_polygon_ball(rect(0, 0, 1, 1), {0.5, 0.5}, 2.0);
  ASSERT_TRUE(whole);
  EXPECT_EQ(whole->size(), 4u);
  for (const CycleVertex& v : whole->cycle) EXPECT_EQ(v.kind, PieceKind::Segment);
  EXPECT_DOUBLE_EQ(whole->area(), 1.0);

  const auto full = intersect_polygon_ball(rect(0, 0, 3, 3), {1.5, 1.5}, 0.5);
  ASSERT_TRUE(full);
  EXPECT_TRUE(full->is_full_ball);
  ASSERT_EQ(full->size(), 1u);
  EXPECT_EQ(full->cycle[0].point, (Point2{1.5, 2.0}));
  EXPECT_EQ(full->cycle[0].kind, PieceKind::Arc);

  const auto quarter = intersect_polygon_ball(rect(0, 0, 2, 2), {0, 0}, 1.0);
  ASSERT_TRUE(quarter);
  ASSERT_EQ(quarter->size(), 3u);
  EXPECT_EQ(quarter->cycle[0].point, (Point2{0, 0}));
  EXPECT_EQ(quarter->cycle[0].kind, PieceKind::Segment);
  EXPECT_NEAR(quarter->cycle[1].point.x, 1.0, 1e-15);
  EXPECT_EQ(quarter->cycle[1].kind, PieceKind::Arc);
  EXPECT_NEAR(quarter->cycle[2].point.y, 1.0, 1e-15);
  EXPECT_EQ(quarter->cycle[2].kind, PieceKind::Segment);
  EXPECT_NEAR(quarter->area(), testing::kPi / 4, 1e-15);

  EXPECT_FALSE(intersect_polygon_ball(rect(0, 0, 1, 1), {3, 3}, 0.5));
}

TEST(BallClip, VertexBoundAndCircleSegmentAreaProperty) {
  SplitMix64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Point2> v;
    const int n = 3 + static_cast<int>(rng() % 6);
    for (int k = 0; k < n; ++k) v.push_back(unit(2 * testing::kPi * (k + 0.8 * rng.uniform()) / n));
    const ConvexPolygon poly(v);
    const Point2 c{2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
    const double r = 0.05 + 1.2 * rng.uniform();
    const auto s = intersect_polygon_ball(poly, c, r);
    if (!s) continue;
    EXPECT_LE(s->size(), 2 * poly.size());
    EXPECT_GE(s->area(), 0.0);
    EXPECT_LE(s->area(), std::min(poly.area(), testing::kPi * r * r) + 1e-12);
  }
}

TEST(BallClip, ScalingCovariance) {
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Point2 c{2 * rng.uniform(), 2 * rng.uniform()};
    const double r = 0.2 + rng.uniform();
    const double s = 0.1 + 10 * rng.uniform();
    const auto a = intersect_polygon_ball(rect(0, 0, 2, 2), c, r);
    const auto b = intersect_polygon_ball(rect(0, 0, 2 * s, 2 * s), s * c, s * r);
    ASSERT_EQ(bool(a), bool(b));
    if (a) {
      EXPECT_NEAR(b->area(), s * s * a->area(), 1e-12 * s * s);
    }
  }
}

TEST(Arcs, SpanAndAreaPieces) {
  EXPECT_NEAR(arc_span({0, 0}, {1, 0}, {0, 1}), testing::kPi / 2, 1e-15);
  EXPECT_NEAR(arc_span({0, 0}, {0, 1}, {1, 0}), 1.5 * testing::kPi, 1e-15);
  EXPECT_NEAR(arc_span({0, 0}, {1, 0}, {1, 0}), 2 * testing::kPi, 1e-15);
  EXPECT_NEAR(arc_x_dy({2, 3}, 1.5, 0.3, 2 * testing::kPi), testing::kPi * 2.25, 1e-14);
}

}  // namespace
}  // namespace cover
