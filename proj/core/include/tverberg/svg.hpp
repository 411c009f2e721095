#pragma once

#include <optional>
#include <string>

#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"

namespace tverberg {

struct SvgOptions {
  double width = 480.0;
  double height = 480.0;
  double margin = 24.0;
  bool draw_disks = true;
  bool draw_labels = false;
  /// Draws the unit circle around this center (scaled to a fraction of the
  /// drawing) with the projections of S on it.
  std::optional<Point> projection_center;
};

/// SVG 1.1 document. Elements carry a class attribute (point, edge, disk,
/// witness, unit-circle, projection) so they can be counted or styled.
std::string render_svg(const PointSet& s, const GeoGraph& g, const std::optional<Point>& witness,
                       const SvgOptions& options = {});

}  // namespace tverberg
