#include "tverberg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tverberg/error.hpp"
#include "tverberg/solver.hpp"

namespace tverberg {

namespace {

constexpr int kDraws = 256;

GpLevel level_for(std::size_t m) { return m <= kFullCheckLimit ? GpLevel::Full : GpLevel::Local; }

std::optional<PointSet> accept(std::vector<Point> pts) {
  try {
    PointSet s(std::move(pts));
    if (in_general_position(s, kDefaultTol, level_for(s.size()))) return s;
  } catch (const Error&) {
    // duplicate draw
  }
  return std::nullopt;
}

PointSet uniform(std::size_t m, std::mt19937_64& rng, const GenOptions& o) {
  std::uniform_real_distribution<double> ux(o.bbox.min_x, o.bbox.max_x);
  std::uniform_real_distribution<double> uy(o.bbox.min_y, o.bbox.max_y);
  for (int draw = 0; draw < kDraws; ++draw) {
    std::vector<Point> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (o.dim == 2) {
        const double x = ux(rng);
        pts.push_back(Point{x, uy(rng)});
      } else {
        std::vector<double> c(o.dim);
        for (double& v : c) v = ux(rng);
        pts.emplace_back(std::move(c));
      }
    }
    if (auto s = accept(std::move(pts))) return *s;
  }
  fail(ErrorKind::PerturbFailed, "no general-position uniform draw found");
}

PointSet convex(std::size_t m, std::mt19937_64& rng, const GenOptions& o) {
  const double cx = 0.5 * (o.bbox.min_x + o.bbox.max_x);
  const double cy = 0.5 * (o.bbox.min_y + o.bbox.max_y);
  const double rx = 0.5 * (o.bbox.max_x - o.bbox.min_x);
  const double ry = 0.5 * (o.bbox.max_y - o.bbox.min_y);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int draw = 0; draw < kDraws; ++draw) {
    std::vector<double> th(m);
    for (double& t : th) t = angle(rng);
    std::sort(th.begin(), th.end());
    std::vector<Point> pts;
    pts.reserve(m);
    for (double t : th) pts.push_back(Point{cx + rx * std::cos(t), cy + ry * std::sin(t)});
    auto s = accept(std::move(pts));
    if (s && in_convex_position(*s)) return *s;
  }
  fail(ErrorKind::PerturbFailed, "no general-position convex draw found");
}

PointSet grid(std::size_t m, std::mt19937_64& rng, const GenOptions& o) {
  if (!(o.grid_step > 0.0)) fail(ErrorKind::Usage, "grid step must be positive");
  const auto nx = static_cast<std::size_t>(std::floor((o.bbox.max_x - o.bbox.min_x) / o.grid_step + 1e-9)) + 1;
  const auto ny = static_cast<std::size_t>(std::floor((o.bbox.max_y - o.bbox.min_y) / o.grid_step + 1e-9)) + 1;
  if (m > nx * ny) {
    fail(ErrorKind::Usage, std::to_string(m) + " points do not fit a " + std::to_string(nx) + "x" + std::to_string(ny) +
                               " grid");
  }
  std::uniform_real_distribution<double> jitter(-0.25 * o.grid_step, 0.25 * o.grid_step);
  for (int draw = 0; draw < kDraws; ++draw) {
    std::vector<std::size_t> cells(nx * ny);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(m);
    std::sort(cells.begin(), cells.end());
    std::vector<Point> pts;
    pts.reserve(m);
    for (std::size_t c : cells) {
      const double x = o.bbox.min_x + static_cast<double>(c % nx) * o.grid_step + jitter(rng);
      const double y = o.bbox.min_y + static_cast<double>(c / nx) * o.grid_step + jitter(rng);
      pts.push_back(Point{x, y});
    }
    if (auto s = accept(std::move(pts))) return *s;
  }
  fail(ErrorKind::PerturbFailed, "no general-position grid draw found");
}

}  // namespace

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Uniform: return "uniform";
    case GenKind::Convex: return "convex";
    case GenKind::GridPerturbed: return "grid_perturbed";
  }
  return "unknown";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  if (name == "uniform") return GenKind::Uniform;
  if (name == "convex") return GenKind::Convex;
  if (name == "grid_perturbed" || name == "grid") return GenKind::GridPerturbed;
  return std::nullopt;
}

PointSet generate(GenKind kind, std::size_t m, std::uint64_t seed, const GenOptions& options) {
  if (m < 2) fail(ErrorKind::Usage, "generators need m >= 2");
  if (options.bbox.max_x <= options.bbox.min_x || options.bbox.max_y <= options.bbox.min_y) {
    fail(ErrorKind::Usage, "empty bounding box");
  }
  if (kind != GenKind::Uniform && options.dim != 2) fail(ErrorKind::Usage, "only uniform sets may be non-planar");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case GenKind::Uniform: return uniform(m, rng, options);
    case GenKind::Convex: return convex(m, rng, options);
    case GenKind::GridPerturbed: return grid(m, rng, options);
  }
  fail(ErrorKind::Usage, "unknown generator");
}

}  // namespace tverberg
