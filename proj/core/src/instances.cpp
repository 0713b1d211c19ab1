#include "cover/instances.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

namespace cover {

namespace {

using Vertices = std::vector<Point2>;

std::vector<ConvexPolygon> scaled(std::initializer_list<Vertices> raw, double s) {
  std::vector<ConvexPolygon> out;
  out.reserve(raw.size());
  for (const Vertices& vs : raw) {
    Vertices v;
    v.reserve(vs.size());
    for (const Point2& p : vs) v.push_back(s * p);
    out.emplace_back(std::move(v));
  }
  return out;
}

Region nonconvex_holes() {
  return Region(scaled(
      {
          {{0, 100}, {0, 70}, {20, 70}, {20, 100}},
          {{35, 50}, {20, 70}, {0, 70}, {0, 30}, {20, 30}},
          {{0, 30}, {0, -40}, {20, -40}, {20, 30}},
          {{0, -40}, {0, -50}, {20, -50}, {20, -40}},
          {{20, 100}, {20, 70}, {70, 70}, {70, 100}},
          {{70, 70}, {80, 70}, {90, 100}, {70, 100}},
          {{80, 70}, {70, 70}, {45, 50}, {70, 30}, {90, 50}},
          {{70, 30}, {20, 30}, {20, -40}, {60, 0}},
          {{110, 20}, {90, 50}, {70, 30}, {60, 0}, {90, 0}},
          {{130, -40}, {130, -50}, {150, -50}, {150, -40}},
          {{130, 50}, {110, 20}, {130, -40}, {150, -40}, {150, 50}},
          {{130, 100}, {120, 100}, {110, 80}, {130, 50}, {150, 50}, {150, 80}},
          {{110, 80}, {120, 100}, {80, 70}, {90, 50}},
          {{110, 20}, {90, 0}, {130, -40}},
      },
      1.0 / 150.0));
}

// A_6 drops the printed vertex (2.7,23), which makes the list non-convex;
// A_27 uses (12.5,5.3) in place of the repeated (12.2,5.4). Both restore the
// published total area.
Region america() {
  return Region(scaled(
      {
          {{4.5, 24}, {3.5, 23.8}, {2.7, 23}, {2.75, 22.15}, {3, 21.5}, {4, 22}},
          {{4.5, 24}, {4, 22}, {5.5, 22}, {5.8, 23.8}},
          {{6, 21}, {6.4, 20}, {10, 20}},
          {{5.5, 22}, {6, 21}, {10, 20}, {10, 21.5}, {9, 23.5}, {7.3, 23.7}, {5.8, 23.8}},
          {{10, 20}, {11, 19.1}, {11.2, 20.2}, {10, 21.5}},
          {{10, 21.5}, {10, 22.2}, {9, 23.5}},
          {{10, 22.2}, {10.2, 23.3}, {9, 23.5}},
          {{10, 22.2}, {11.5, 23}, {11, 24.6}, {10.2, 23.3}},
          {{11, 19.1}, {11.4, 18.4}, {12.5, 19.5}, {12.4, 19.9}, {11.2, 20.2}},
          {{12.4, 19.9}, {13.8, 20.6}, {11.8, 22.4}, {11.2, 20.5}, {11.2, 20.2}},
          {{12.5, 19.5}, {13.1, 19.5}, {12.4, 19.9}},
          {{6.4, 20}, {6.1, 19.5}, {6, 18.7}, {6.2, 18.2}, {6.6, 17.6}, {6.8, 17.5}, {6.9, 17.5}, {11.3, 17.8},
           {11.4, 18.4}, {11, 19.1}, {10, 20}},
          {{6.9, 17.5}, {10.7, 17.4}, {11.3, 17.8}},
          {{10.4, 17.2}, {10.5, 16.6}, {10.6, 16.6}, {10.7, 17.4}},
          {{6.9, 17.5}, {9.3, 17.2}, {10.4, 17.2}, {10.7, 17.4}},
          {{6.9, 17.5}, {8.4, 16.6}, {9.3, 17.2}},
          {{6.9, 17.5}, {7.4, 16.6}, {7.8, 15.9}, {8.5, 16}, {8.4, 16.6}},
          {{7.8, 15.9}, {7.7, 15.8}, {8.5, 15.3}, {8.9, 15.3}, {9, 15.6}, {8.5, 16}},
          {{8.9, 15.3}, {9.2, 15}, {9.4, 15.3}, {9.3, 15.5}, {9, 15.6}},
          {{9.3, 15.5}, {9.7, 15.6}, {9.9, 16}, {9.5, 16}, {9, 15.6}},
          {{6.6, 17.6}, {6.8, 16.8}, {7, 16.8}, {6.8, 17.5}},
          {{6.8, 16.8}, {7.1, 16.3}, {7.2, 16.3}, {7, 16.8}},
          {{9.2, 15}, {9.7, 14.7}, {10.2, 14.5}, {10.2, 15.3}, {9.4, 15.3}},
          {{9.7, 14.7}, {10, 14.4}, {10.8, 14.1}, {10.9, 14.2}, {10.2, 14.5}},
          {{10.4, 16.2}, {11, 15.8}, {11.3, 16}, {10.4, 16.3}},
          {{10.7, 13.2}, {10.5, 12.5}, {10.7, 11.25}, {11.4, 10.6}, {14.2, 9.7}, {15, 10}, {15.3, 10.8}, {15.3, 11.3}},
          {{12.2, 5.4}, {11.9, 5.3}, {12.2, 5.2}, {12.5, 5.3}},
          {{15.3, 11.3}, {15.7, 12.2}, {14.6, 12.8}, {10.9, 14.2}, {10.8, 14.1}, {10.7, 13.2}},
          {{14.6, 12.8}, {13.8, 13.5}, {12.9, 14.1}, {12.1, 14.5}, {11.6, 14.6}, {10.9, 14.2}},
          {{12.9, 14.1}, {12.5, 14.5}, {12.1, 14.5}},
          {{11.4, 10.6}, {11.4, 7.5}, {11.5, 5.7}, {11.8, 5.5}, {12.1, 5.6}, {12.3, 6.7}},
          {{12.3, 6.7}, {12.6, 7.7}, {11.4, 10.6}},
          {{12.6, 7.7}, {13.2, 7.7}, {13.1, 8.4}, {11.4, 10.6}},
          {{13.1, 8.4}, {13.5, 8.3}, {13.7, 8.6}, {14.2, 9.7}, {11.4, 10.6}},
      },
      1.0 / 20.0));
}

Region star() {
  const double pi = std::numbers::pi;
  const double R = 1.0 / (2.0 * std::sin(pi / 8.0));
  // Same expression for shared vertices so that twins match bit for bit.
  auto corner = [&](int k) { return R * unit((k % 8) * pi / 4.0); };
  const Point2 mid = 0.5 * (corner(1) + corner(2));
  const double apex = norm(mid) + 2.0 * R;

  std::vector<ConvexPolygon> polys;
  Vertices octagon;
  for (int k = 1; k <= 8; ++k) octagon.push_back(corner(k));
  polys.emplace_back(std::move(octagon));
  for (int t = 0; t < 8; ++t) {
    polys.emplace_back(Vertices{corner(t + 1), corner(t), apex * unit(pi / 8.0 + t * pi / 4.0)});
  }
  return Region(std::move(polys));
}

Region minkowski() {
  static constexpr int corners[16][2] = {{3, 0}, {1, 1}, {3, 1}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2},
                                         {2, 3}, {3, 3}, {4, 3}, {5, 3}, {1, 4}, {2, 4}, {4, 4}, {2, 5}};
  std::vector<ConvexPolygon> polys;
  for (const auto& c : corners) {
    const double x = c[0], y = c[1];
    polys.emplace_back(Vertices{{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}});
  }
  return Region(std::move(polys));
}

Region cesaro() {
  const double s3 = std::sqrt(3.0);
  const std::vector<Vertices> group = {
      {{0, 0}, {2, 0}, {3, s3}, {s3, 3}, {0, 2}},
      {{4, 0}, {6, 0}, {7, s3}, {6, 2 * s3}, {3, s3}},
      {{6, 2 * s3}, {8, 2 * s3}, {9, 3 * s3}, {3 * s3, 9}, {2 * s3, 8}, {2 * s3, 6}},
      {{0, 6}, {0, 4}, {s3, 3}, {2 * s3, 6}, {s3, 7}},
      {{3, s3}, {6, 2 * s3}, {2 * s3, 6}, {s3, 3}},
  };
  const double s = 1.0 / 18.0;
  std::vector<ConvexPolygon> polys;
  Vertices center = {{9, 3 * s3}, {18 - 3 * s3, 9}, {9, 18 - 3 * s3}, {3 * s3, 9}};
  for (Point2& p : center) p = s * p;
  polys.emplace_back(std::move(center));
  // Quarter turns about (9, 9) in unscaled units: (x, y) -> (18 - y, x).
  for (int turn = 0; turn < 4; ++turn) {
    for (const Vertices& base : group) {
      Vertices v;
      for (Point2 p : base) {
        for (int q = 0; q < turn; ++q) p = Point2{18.0 - p.y, p.x};
        v.push_back(s * p);
      }
      polys.emplace_back(std::move(v));
    }
  }
  return Region(std::move(polys));
}

}  // namespace

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names = {"nonconvex_holes", "america", "star", "minkowski", "cesaro"};
  return names;
}

Region get_instance(std::string_view name) {
  if (name == "nonconvex_holes") return nonconvex_holes();
  if (name == "america") return america();
  if (name == "star") return star();
  if (name == "minkowski") return minkowski();
  if (name == "cesaro") return cesaro();
  throw UnknownInstance("unknown instance '" + std::string(name) + "'");
}

}  // namespace cover
