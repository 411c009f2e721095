#include "tverberg/cycle.hpp"

#include <algorithm>
#include <numeric>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTouchSlack = 1e-12;

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Rotates a direction clockwise by t radians.
Vec2 rotate_clockwise(Vec2 v, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return {v.x * c + v.y * s, -v.x * s + v.y * c};
}

struct Projection {
  std::size_t index;
  Vec2 dir;
  double key;
};

void check_ties(const std::vector<Projection>& sorted, double tol) {
  if (sorted.size() < 2) return;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Projection& a = sorted[i];
    const Projection& b = sorted[(i + 1) % sorted.size()];
    const double gap = angle_between(a.dir, b.dir);
    if (gap <= tol) {
      fail(ErrorKind::RadialDegeneracy, "points " + std::to_string(a.index) + " and " + std::to_string(b.index) +
                                            " project to the same direction");
    }
  }
}

CyclePlan plan_from_order(const PointSet& s, RadialOrder order, CycleKind kind) {
  const std::size_t m = order.size();
  if (m < 3 || m % 2 == 0) fail(ErrorKind::Usage, "type I/II cycles need an odd number of points >= 3");
  const std::size_t n = (m - 1) / 2;
  GeoGraph cycle(s.size());
  for (std::size_t i = 0; i < m; ++i) cycle.add_edge(order.labels[i], order.labels[(i + n) % m]);
  return CyclePlan{std::move(order), std::move(cycle), kind};
}

}  // namespace

double clockwise_key(Vec2 dir) { return wrap(kPi - std::atan2(dir.y, dir.x)); }

double clockwise_sweep(Vec2 from, Vec2 to) { return wrap(clockwise_key(to) - clockwise_key(from)); }

RadialOrder radial_order(const PointSet& s, Vec2 p, std::optional<Vec2> rep_dir, double tol) {
  if (s.dim() != 2) fail(ErrorKind::Usage, "radial orders are planar");
  std::optional<std::size_t> center_index;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (norm(s[i].xy() - p) <= tol) {
      if (center_index) fail(ErrorKind::Usage, "center coincides with two points of S");
      center_index = i;
    }
  }
  if (center_index && !rep_dir) {
    fail(ErrorKind::Usage, "center coincides with point " + std::to_string(*center_index) +
                               "; a representative direction is required");
  }
  if (!center_index && rep_dir) fail(ErrorKind::Usage, "representative direction given for a center outside S");

  std::vector<Projection> proj;
  proj.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (center_index && i == *center_index) continue;
    const Vec2 dir = normalized(s[i].xy() - p);
    proj.push_back({i, dir, rep_dir ? clockwise_sweep(*rep_dir, dir) : clockwise_key(dir)});
  }
  std::sort(proj.begin(), proj.end(), [](const Projection& a, const Projection& b) { return a.key < b.key; });
  check_ties(proj, tol);

  RadialOrder order;
  order.center = p;
  order.center_index = center_index;
  if (rep_dir) {
    const Vec2 rep = normalized(*rep_dir);
    if (!proj.empty() &&
        (angle_between(rep, proj.front().dir) <= tol || angle_between(rep, proj.back().dir) <= tol)) {
      fail(ErrorKind::RepresentativeDegeneracy, "representative direction coincides with a projected point");
    }
    order.representative_dir = rep;
  }
  for (const Projection& pr : proj) {
    order.labels.push_back(pr.index);
    order.directions.push_back(pr.dir);
  }
  if (center_index) {
    order.labels.push_back(*center_index);
    order.directions.push_back(*order.representative_dir);
  }
  return order;
}

CyclePlan type1_cycle(const PointSet& s, Vec2 p, double tol) {
  RadialOrder order = radial_order(s, p, std::nullopt, tol);
  return plan_from_order(s, std::move(order), CycleKind::TypeI);
}

CyclePlan type2_cycle(const PointSet& s, std::size_t p_index, Vec2 rep_dir, double tol) {
  if (p_index >= s.size()) fail(ErrorKind::Usage, "center index out of range");
  RadialOrder order = radial_order(s, s[p_index].xy(), rep_dir, tol);
  return plan_from_order(s, std::move(order), CycleKind::TypeII);
}

// --- Arc --------------------------------------------------------------------

Arc Arc::between(Vec2 center, Vec2 a, Vec2 b) {
  a = normalized(a);
  b = normalized(b);
  const double sweep = clockwise_sweep(a, b);
  if (sweep <= kPi) return Arc(center, a, b, sweep);
  return Arc(center, b, a, kTwoPi - sweep);
}

Arc Arc::clockwise(Vec2 center, Vec2 start, double measure) {
  start = normalized(start);
  return Arc(center, start, rotate_clockwise(start, measure), measure);
}

Vec2 Arc::midpoint_dir() const { return rotate_clockwise(start_, 0.5 * measure_); }

Vec2 Arc::direction_at_offset(double t) const { return rotate_clockwise(start_, t); }

bool Arc::contains(Vec2 dir, double tol) const {
  const double off = clockwise_sweep(start_, dir);
  return off <= measure_ + tol || off >= kTwoPi - tol;
}

std::optional<Arc> arcs_common_intersection(std::span<const Arc> arcs) {
  if (arcs.empty()) return std::nullopt;
  if (arcs.size() == 1) return arcs.front();

  // Find a direction covered by no arc to unroll the circle at.
  std::vector<double> keys;
  keys.reserve(2 * arcs.size());
  for (const Arc& a : arcs) {
    keys.push_back(clockwise_key(a.start_dir()));
    keys.push_back(clockwise_key(a.end_dir()));
  }
  std::sort(keys.begin(), keys.end());
  std::optional<Vec2> cut;
  for (std::size_t i = 0; i < keys.size() && !cut; ++i) {
    const double lo = keys[i];
    const double hi = i + 1 < keys.size() ? keys[i + 1] : keys.front() + kTwoPi;
    if (hi - lo <= 0.0) continue;
    const double mid = 0.5 * (lo + hi);
    const Vec2 dir = direction_at(kPi - mid);
    const bool covered = std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.contains(dir, 0.0); });
    if (!covered) cut = dir;
  }
  if (!cut) return std::nullopt;

  double lo = -1.0;
  double hi = kTwoPi * 2.0;
  const Arc* lo_arc = nullptr;
  const Arc* hi_arc = nullptr;
  for (const Arc& a : arcs) {
    const double s = clockwise_sweep(*cut, a.start_dir());
    const double e = s + a.measure();
    if (s > lo) {
      lo = s;
      lo_arc = &a;
    }
    if (e < hi) {
      hi = e;
      hi_arc = &a;
    }
  }
  // Arcs that share only an endpoint meet in a single direction.
  if (lo > hi + kTouchSlack) return std::nullopt;
  if (lo >= hi) return Arc(arcs.front().center(), lo_arc->start_dir(), lo_arc->start_dir(), 0.0);
  return Arc(arcs.front().center(), lo_arc->start_dir(), hi_arc->end_dir(), hi - lo);
}

std::size_t slots_in_arc(const RadialOrder& order, const Arc& arc, double tol) {
  return static_cast<std::size_t>(std::count_if(order.directions.begin(), order.directions.end(),
                                                [&](Vec2 d) { return arc.contains(d, tol); }));
}

// --- Profile ----------------------------------------------------------------

bool better_profile(const ViolationProfile& a, const ViolationProfile& b) {
  if (a.ell != b.ell) return a.ell < b.ell;
  return a.f > b.f;
}

ViolationProfile violation_profile(const CyclePlan& plan, double tol) {
  const RadialOrder& order = plan.order;
  const std::size_t m = order.size();
  const std::size_t n = plan.half();
  const bool exempt_last = plan.kind == CycleKind::TypeII;
  ViolationProfile profile;
  profile.pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + n) % m;
    if (exempt_last && (i == m - 1 || j == m - 1)) continue;
    const PairAngle pa{i, j, angle_between(order.directions[i], order.directions[j])};
    profile.pairs.push_back(pa);
    if (pa.angle < kHalfPi - tol) {
      ++profile.ell;
      profile.f += pa.angle;
      profile.short_pairs.push_back(pa);
      profile.short_arcs.push_back(Arc::between(order.center, order.directions[i], order.directions[j]));
    } else if (std::abs(pa.angle - kHalfPi) <= tol) {
      ++profile.boundary_count;
    }
  }
  return profile;
}

}  // namespace tverberg
