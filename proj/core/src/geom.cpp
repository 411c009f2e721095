#include "tverberg/geom.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorKind::Usage, "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

using IndexPair = std::array<std::size_t, 2>;

std::vector<IndexPair> all_pairs(std::size_t m) {
  std::vector<IndexPair> pairs;
  pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

struct Circle {
  Vec2 center;
  double radius;
};

// Up to two intersection points of two circles; none when they are disjoint,
// nested or concentric.
std::vector<Vec2> circle_intersections(const Circle& a, const Circle& b) {
  const Vec2 delta = b.center - a.center;
  const double d = norm(delta);
  if (d == 0.0 || d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) return {};
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const Vec2 u = delta / d;
  const Vec2 base = a.center + along * u;
  const Vec2 perp{-u.y, u.x};
  if (h == 0.0) return {base};
  return {base + h * perp, base - h * perp};
}

bool pairs_share_point(const IndexPair& a, const IndexPair& b, const IndexPair& c) {
  for (std::size_t v : a) {
    if ((v == b[0] || v == b[1]) && (v == c[0] || v == c[1])) return true;
  }
  return false;
}

// Distance from the lowest point of the triple to the line through the other
// two: the smallest altitude of the triangle.
double smallest_altitude(const Point& a, const Point& b, const Point& c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const Point bc = c - b;
  const double longest = std::max({norm(ab), norm(ac), norm(bc)});
  if (longest == 0.0) return 0.0;
  // |ab x ac| generalised to d dimensions via the Gram determinant.
  const double gram = dot(ab, ab) * dot(ac, ac) - dot(ab, ac) * dot(ab, ac);
  return std::sqrt(std::max(0.0, gram)) / longest;
}

Point random_offset(std::mt19937_64& rng, std::size_t dim, double delta) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(dim);
  double len = 0.0;
  do {
    for (double& c : v) c = gauss(rng);
    len = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  } while (len == 0.0);
  const double radius = delta * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
  for (double& c : v) c *= radius / len;
  return Point(std::move(v));
}

}  // namespace

// --- Point ------------------------------------------------------------------

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(ErrorKind::Usage, "point must have at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) fail(ErrorKind::Usage, "point coordinates must be finite");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Point(std::move(out));
}

Point operator*(double s, const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return Point(std::move(out));
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

Point midpoint(const Point& a, const Point& b) { return 0.5 * (a + b); }

std::string to_string(const Point& p) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < p.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out + ")";
}

// --- PointSet ---------------------------------------------------------------

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dim_ = points_.front().dim();
  for (const Point& p : points_) {
    if (p.dim() != dim_) fail(ErrorKind::Usage, "all points must share one dimension");
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = points_[a].coords();
    const auto cb = points_[b].coords();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k]] == points_[order[k - 1]]) {
      const auto [lo, hi] = std::minmax(order[k], order[k - 1]);
      fail(ErrorKind::Usage, "duplicate points at indices " + std::to_string(lo) + " and " + std::to_string(hi));
    }
  }
}

PointSet PointSet::planar(std::span<const Vec2> points) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (Vec2 v : points) out.emplace_back(v);
  return PointSet(std::move(out));
}

std::vector<Vec2> PointSet::planar_coords() const {
  if (dim_ != 2 && !points_.empty()) fail(ErrorKind::Usage, "planar point set required");
  std::vector<Vec2> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(p.xy());
  return out;
}

Point PointSet::centroid() const {
  if (points_.empty()) fail(ErrorKind::Usage, "centroid of an empty set");
  std::vector<double> acc(dim_, 0.0);
  for (const Point& p : points_) {
    for (std::size_t i = 0; i < dim_; ++i) acc[i] += p[i];
  }
  for (double& c : acc) c /= static_cast<double>(points_.size());
  return Point(std::move(acc));
}

double PointSet::circumradius() const {
  const Point c = centroid();
  double r = 0.0;
  for (const Point& p : points_) r = std::max(r, distance(p, c));
  return r;
}

// --- Lens / Membership ------------------------------------------------------

Lens::Lens(std::size_t a_, std::size_t b_, double alpha_) : a(a_), b(b_), alpha(alpha_) {
  if (a == b) fail(ErrorKind::DegenerateSegment, "lens endpoints must differ");
  if (!(alpha > 0.0 && alpha < kPi)) fail(ErrorKind::Usage, "lens angle must lie in (0, pi)");
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

// --- Predicates -------------------------------------------------------------

double angle_at(const Point& vertex, const Point& a, const Point& b) {
  const Point u = a - vertex;
  const Point v = b - vertex;
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) fail(ErrorKind::UndefinedAngle, "an endpoint coincides with the vertex");
  const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
  return std::acos(c);
}

Ball diametral_ball(const Point& x, const Point& y) {
  if (x == y) fail(ErrorKind::DegenerateSegment, "diametral ball of a single point");
  return Ball{midpoint(x, y), 0.5 * distance(x, y)};
}

double ball_depth(const Ball& ball, const Point& p) { return ball.radius - distance(ball.center, p); }

Membership classify_angle(const Point& p, const Point& x, const Point& y, double alpha, double tol) {
  if (x == y) fail(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  if (p == x || p == y) return Membership::Inside;
  const double angle = angle_at(p, x, y);
  if (std::abs(angle - alpha) <= tol) return Membership::Boundary;
  return angle > alpha ? Membership::Inside : Membership::Outside;
}

Membership in_diametral_ball(const Point& p, const Point& x, const Point& y, double tol) {
  return classify_angle(p, x, y, kHalfPi, tol);
}

Membership in_lens(const Point& p, const Lens& lens, const PointSet& s, double tol) {
  return classify_angle(p, s[lens.a], s[lens.b], lens.alpha, tol);
}

// --- General position -------------------------------------------------------

GeneralPositionReport check_general_position(const PointSet& s, double tol, GpLevel level) {
  GeneralPositionReport report;
  const std::size_t m = s.size();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (smallest_altitude(s[i], s[j], s[k]) <= tol) report.collinear_triples.push_back({{i, j, k}});
      }
    }
  }
  if (s.dim() != 2) return report;

  const std::vector<IndexPair> pairs = all_pairs(m);
  std::vector<Circle> circles;
  circles.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const Vec2 pa = s[a].xy();
    const Vec2 pb = s[b].xy();
    circles.push_back({0.5 * (pa + pb), 0.5 * norm(pb - pa)});
  }

  for (const auto& [a, b] : pairs) {
    for (std::size_t z = 0; z < m; ++z) {
      if (z == a || z == b) continue;
      if (std::abs(angle_at(s[z], s[a], s[b]) - kHalfPi) <= tol) report.boundary_incidences.push_back({z, {a, b}});
    }
  }
  if (level == GpLevel::Local) return report;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const double d = norm(circles[i].center - circles[j].center);
      const double outer = std::abs(d - (circles[i].radius + circles[j].radius));
      const double inner = std::abs(d - std::abs(circles[i].radius - circles[j].radius));
      if (outer <= tol || inner <= tol) report.tangent_pairs.push_back({{pairs[i], pairs[j]}});
    }
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const std::vector<Vec2> meets = circle_intersections(circles[i], circles[j]);
      if (meets.empty()) continue;
      for (std::size_t k = j + 1; k < pairs.size(); ++k) {
        if (pairs_share_point(pairs[i], pairs[j], pairs[k])) continue;
        const bool hit = std::any_of(meets.begin(), meets.end(), [&](Vec2 q) {
          return std::abs(norm(q - circles[k].center) - circles[k].radius) <= tol;
        });
        if (hit) report.triple_boundary_meets.push_back({{pairs[i], pairs[j], pairs[k]}});
      }
    }
  }
  return report;
}

bool in_general_position(const PointSet& s, double tol, GpLevel level) {
  return check_general_position(s, tol, level).empty();
}

PointSet perturb(const PointSet& s, double delta, std::uint64_t seed, double tol, GpLevel level) {
  if (!(delta > 0.0)) fail(ErrorKind::Usage, "perturbation radius must be positive");
  std::mt19937_64 rng(seed);
  std::size_t last_violations = 0;
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    std::vector<Point> moved;
    moved.reserve(s.size());
    for (const Point& p : s) moved.push_back(p + random_offset(rng, s.dim(), delta));
    try {
      PointSet candidate(std::move(moved));
      const GeneralPositionReport report = check_general_position(candidate, tol, level);
      if (report.empty()) return candidate;
      last_violations = report.violation_count();
    } catch (const Error&) {
      // Two points landed on each other; draw again.
    }
  }
  fail(ErrorKind::PerturbFailed, "no general-position perturbation found after " + std::to_string(kPerturbRetries) +
                                     " attempts (delta " + std::to_string(delta) + ", last attempt had " +
                                     std::to_string(last_violations) + " violations)");
}

}  // namespace tverberg
