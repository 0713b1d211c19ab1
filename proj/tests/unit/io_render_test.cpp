#include <gtest/gtest.h>

#include <regex>

#include "helpers.hpp"

namespace cover {
namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

TEST(Json, ConfigRoundTripIsExact) {
  SplitMix64 rng(1);
  Configuration c;
  for (int k = 0; k < 50; ++k) c.centers.push_back({rng.uniform() * 1e3 - 500, std::ldexp(rng.uniform(), -40)});
  c.radius = 0.1 + rng.uniform();
  const Configuration back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.centers, c.centers);
  EXPECT_EQ(back.radius, c.radius);
}

TEST(Json, RegionWithExplicitFlags) {
  const Region r = region_from_json(
      R"({"polygons": [[[0,0],[1,0],[1,1],[0,1]], [[1,0],[2,0],[2,1],[1,1]]],
          "boundary_flags": [[true,false,true,true],[true,true,true,false]]})");
  EXPECT_EQ(r.volume(), 2.0);
  EXPECT_FALSE(r.edge_on_boundary(1, 3));
}

TEST(Json, MalformedInputIsInvalid) {
  EXPECT_THROW(region_from_json("{"), InvalidInput);
  EXPECT_THROW(region_from_json(R"({"polygons": [[[0,0],[1,0]]]})"), InvalidInput);
  EXPECT_THROW(config_from_json(R"({"centers": [[0,0]]})"), InvalidInput);
  EXPECT_THROW(config_from_json(R"({"centers": [[0,0]], "r": -1})"), InvalidInput);
}

TEST(Json, SolutionCarriesConfiguration) {
  const Region region = testing::square_region(1);
  const MultistartReport rep = run_multistart(region, 1, 2, 3);
  const std::string text = solution_to_json(rep);
  const Configuration c = config_from_solution_json(text);
  EXPECT_EQ(c.radius, rep.best.cfg.radius);
  EXPECT_EQ(c.centers, rep.best.cfg.centers);
  EXPECT_NE(text.find("\"status\": \"converged\""), std::string::npos);
}

TEST(Json, EvaluationHessianIsSymmetric) {
  const Region region = get_instance("cesaro");
  const Configuration cfg = random_screened_config(region, 3, 1, 0);
  const DiagnosticsReport rep = screen_nondegenerate(region, cfg);
  const std::string text = evaluation_to_json(evaluate(region, cfg, Order::Hessian), true, true, &rep);
  EXPECT_NE(text.find("\"hess\""), std::string::npos);
  EXPECT_NE(text.find("\"screen\""), std::string::npos);
}

std::string group(const std::string& svg, const std::string& id) {
  const std::size_t at = svg.find("<g id=\"" + id + "\"");
  if (at == std::string::npos) return {};
  return svg.substr(at, svg.find("</g>", at) - at);
}

TEST(Render, RegionOnly) {
  const Region region = get_instance("nonconvex_holes");
  const std::string svg = render_svg(region, std::nullopt);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(group(svg, "region"), "<path"), static_cast<int>(region.size()));
  EXPECT_EQ(count(svg, "<circle"), 0);
  EXPECT_EQ(count(svg, "<g "), count(svg, "</g>"));
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Render, CircumcircleEnclosesSquare) {
  const Region region = testing::square_region(1);
  const std::string svg = render_svg(region, Configuration{{{0.5, 0.5}}, std::sqrt(0.5)});
  std::smatch m;
  const std::string balls = group(svg, "balls");
  ASSERT_TRUE(std::regex_search(balls, m, std::regex(R"re(cx="([0-9.]+)" cy="([0-9.]+)" r="([0-9.]+)")re")));
  const double cx = std::stod(m[1]), cy = std::stod(m[2]), r = std::stod(m[3]);
  const std::string square = group(svg, "region");
  const std::regex vertex(R"(([0-9.]+),([0-9.]+))");
  int seen = 0;
  for (auto it = std::sregex_iterator(square.begin(), square.end(), vertex); it != std::sregex_iterator(); ++it, ++seen)
    EXPECT_LE(std::hypot(std::stod((*it)[1]) - cx, std::stod((*it)[2]) - cy), r + 0.01);
  EXPECT_EQ(seen, 4);
  // Nothing of the circle lies uncovered inside the square.
  EXPECT_EQ(count(group(svg, "arcs"), "<path"), 0);
}

TEST(Render, DeterministicBytes) {
  const Region region = get_instance("minkowski");
  const Configuration cfg = random_screened_config(region, 10, 4, 0);
  RenderOptions opt;
  opt.partition = true;
  const std::string svg = render_svg(region, cfg, opt);
  EXPECT_EQ(svg, render_svg(region, cfg, opt));
  EXPECT_EQ(count(group(svg, "balls"), "<circle"), 10);
  EXPECT_EQ(count(group(svg, "cells"), "<path"), static_cast<int>(restricted_cells(region, cfg).size()));
}

}  // namespace
}  // namespace cover
