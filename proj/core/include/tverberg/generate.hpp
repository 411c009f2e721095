#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "tverberg/geom.hpp"

namespace tverberg {

struct Bbox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 1.0;
  double max_y = 1.0;
};

enum class GenKind { Uniform, Convex, GridPerturbed };
std::string_view to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenOptions {
  Bbox bbox;
  /// Lattice spacing for GridPerturbed.
  double grid_step = 0.1;
  /// Dimension for Uniform (other kinds are planar).
  std::size_t dim = 2;
};

/// Sets up to this size are checked with the full general-position test;
/// larger ones with the local test only.
inline constexpr std::size_t kFullCheckLimit = 15;

/// Deterministic for fixed arguments. Uniform draws in the box, Convex places
/// points at random angles on the ellipse inscribed in the box, and
/// GridPerturbed jitters distinct lattice nodes. Each result passes the
/// general-position check (redrawing or perturbing as needed).
PointSet generate(GenKind kind, std::size_t m, std::uint64_t seed, const GenOptions& options = {});

}  // namespace tverberg
