#pragma once

#include <string>
#include <string_view>

#include "tverberg/geom.hpp"

namespace tverberg {

/// One point per line, whitespace-separated coordinates. An optional header
/// "# d=<k>" fixes the dimension; other '#' lines and blank lines are skipped.
/// Throws Parse with the offending line number.
PointSet parse_points(std::string_view text);

/// Canonical text: a "# d=<k>" header when d != 2, 17 significant digits.
std::string format_points(const PointSet& s);

PointSet read_points_file(const std::string& path);

/// %.17g, the lossless round-trip form used by every text output.
std::string format_double(double v);

}  // namespace tverberg
