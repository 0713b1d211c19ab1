#pragma once

#include <optional>
#include <string>

#include "cover/geometry.hpp"

namespace cover {

struct RenderOptions {
  int size = 1024;        // longer side in pixels
  double margin = 0.04;   // fraction of `size` left blank on each side
  bool partition = false; // draw the Voronoi-restricted cells W_ij
  bool arcs = true;       // highlight the covered set's boundary inside A
};

/// SVG 1.1 drawing of the region and, when given, the balls. Output depends
/// only on the inputs.
std::string render_svg(const Region& region, const std::optional<Configuration>& cfg, const RenderOptions& options = {});

}  // namespace cover
