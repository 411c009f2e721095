#include "tverberg/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Disk {
  Vec2 c;
  double r;
};

double excess_at(std::span<const Disk> disks, Vec2 q) {
  double worst = -kInf;
  for (const Disk& d : disks) worst = std::max(worst, norm(q - d.c) - d.r);
  return worst;
}

// Points q with |q - c_i| = r_i + t for the three disks (Apollonius points).
void apollonius_candidates(const Disk& d1, const Disk& d2, const Disk& d3, std::vector<Vec2>& out) {
  const Vec2 a2 = d2.c - d1.c;
  const Vec2 a3 = d3.c - d1.c;
  const double det = 4.0 * cross(a2, a3);
  const double scale = std::max(dot(a2, a2), dot(a3, a3));
  if (std::abs(det) <= 1e-14 * scale) return;
  // 2 a_i . q = |a_i|^2 + r1^2 - r_i^2 + 2 t (r1 - r_i), q relative to c1.
  const double u2 = dot(a2, a2) + d1.r * d1.r - d2.r * d2.r;
  const double u3 = dot(a3, a3) + d1.r * d1.r - d3.r * d3.r;
  const double v2 = 2.0 * (d1.r - d2.r);
  const double v3 = 2.0 * (d1.r - d3.r);
  auto solve = [&](double b2, double b3) {
    // [2 a2; 2 a3] q = [b2; b3]
    return Vec2{(b2 * 2.0 * a3.y - b3 * 2.0 * a2.y) / det, (2.0 * a2.x * b3 - 2.0 * a3.x * b2) / det};
  };
  const Vec2 base = solve(u2, u3);
  const Vec2 slope = solve(v2, v3);
  // |base + slope t|^2 = (r1 + t)^2
  const double qa = dot(slope, slope) - 1.0;
  const double qb = 2.0 * (dot(base, slope) - d1.r);
  const double qc = dot(base, base) - d1.r * d1.r;
  auto emit = [&](double t) {
    if (d1.r + t < 0.0 || d2.r + t < 0.0 || d3.r + t < 0.0) return;
    out.push_back(d1.c + base + slope * t);
  };
  if (std::abs(qa) <= 1e-14) {
    if (qb != 0.0) emit(-qc / qb);
    return;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return;
  const double root = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double qq = -0.5 * (qb + std::copysign(root, qb));
  emit(qq / qa);
  if (qq != 0.0) emit(qc / qq);
}

struct Deepest2 {
  Vec2 point;
  double excess;
};

Deepest2 deepest_planar(std::span<const Disk> disks) {
  Deepest2 best{disks.front().c, kInf};
  auto consider = [&](Vec2 q) {
    const double e = excess_at(disks, q);
    if (e < best.excess) best = {q, e};
  };
  const std::size_t k = disks.size();
  for (const Disk& d : disks) consider(d.c);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec2 delta = disks[j].c - disks[i].c;
      const double len = norm(delta);
      if (len == 0.0) continue;
      const double s = std::clamp(0.5 * (len + disks[i].r - disks[j].r), 0.0, len);
      consider(disks[i].c + (s / len) * delta);
    }
  }
  std::vector<Vec2> cand;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        cand.clear();
        apollonius_candidates(disks[i], disks[j], disks[l], cand);
        for (Vec2 q : cand) consider(q);
      }
    }
  }
  return best;
}

// Any pair of disjoint disks rules out a common point immediately.
bool pairwise_disjoint_found(std::span<const Disk> disks, double tol) {
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (norm(disks[i].c - disks[j].c) > disks[i].r + disks[j].r + 2.0 * tol) return true;
    }
  }
  return false;
}

// --- d >= 3: smoothed minimax descent -------------------------------------

double excess_at(std::span<const Ball> balls, const std::vector<double>& q) {
  double worst = -kInf;
  for (const Ball& b : balls) {
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double d = q[i] - b.center[i];
      acc += d * d;
    }
    worst = std::max(worst, std::sqrt(acc) - b.radius);
  }
  return worst;
}

// Log-sum-exp smoothing of the max with temperature mu; returns the value and
// writes the gradient.
double smoothed(std::span<const Ball> balls, const std::vector<double>& q, double mu, std::vector<double>& grad) {
  const std::size_t dim = q.size();
  std::vector<double> vals(balls.size());
  std::vector<std::vector<double>> units(balls.size(), std::vector<double>(dim, 0.0));
  double top = -kInf;
  for (std::size_t k = 0; k < balls.size(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = q[i] - balls[k].center[i];
      units[k][i] = d;
      acc += d * d;
    }
    const double len = std::sqrt(acc);
    for (double& u : units[k]) u = len > 0.0 ? u / len : 0.0;
    vals[k] = len - balls[k].radius;
    top = std::max(top, vals[k]);
  }
  double total = 0.0;
  std::vector<double> w(balls.size());
  for (std::size_t k = 0; k < balls.size(); ++k) {
    w[k] = std::exp((vals[k] - top) / mu);
    total += w[k];
  }
  std::fill(grad.begin(), grad.end(), 0.0);
  for (std::size_t k = 0; k < balls.size(); ++k) {
    for (std::size_t i = 0; i < dim; ++i) grad[i] += (w[k] / total) * units[k][i];
  }
  return top + mu * std::log(total);
}

DeepestPoint deepest_by_descent(std::span<const Ball> balls) {
  const std::size_t dim = balls.front().center.dim();
  double scale = 0.0;
  for (const Ball& b : balls) scale = std::max(scale, b.radius);
  for (const Ball& b : balls) scale = std::max(scale, distance(b.center, balls.front().center));
  if (scale == 0.0) scale = 1.0;

  std::vector<std::vector<double>> starts;
  {
    std::vector<double> mean(dim, 0.0);
    for (const Ball& b : balls) {
      for (std::size_t i = 0; i < dim; ++i) mean[i] += b.center[i] / static_cast<double>(balls.size());
    }
    starts.push_back(mean);
  }
  for (std::size_t k = 0; k < balls.size() && starts.size() < 16; ++k) {
    const auto c = balls[k].center.coords();
    starts.emplace_back(c.begin(), c.end());
  }

  std::vector<double> best_q = starts.front();
  double best = excess_at(balls, best_q);
  std::vector<double> grad(dim);
  std::vector<double> trial(dim);
  for (std::vector<double> q : starts) {
    for (double mu = 0.1 * scale; mu >= 1e-13 * scale; mu *= 0.1) {
      double step = 0.1 * scale;
      double val = smoothed(balls, q, mu, grad);
      for (int it = 0; it < 400; ++it) {
        const double g2 = std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0);
        if (g2 <= 1e-30) break;
        bool accepted = false;
        std::vector<double> tg(dim);
        while (step > 1e-16 * scale) {
          for (std::size_t i = 0; i < dim; ++i) trial[i] = q[i] - step * grad[i];
          const double tv = smoothed(balls, trial, mu, tg);
          if (tv <= val - 0.25 * step * g2) {
            q = trial;
            val = tv;
            grad = tg;
            step *= 2.0;
            accepted = true;
            break;
          }
          step *= 0.5;
        }
        if (!accepted) break;
      }
      const double e = excess_at(balls, q);
      if (e < best) {
        best = e;
        best_q = q;
      }
    }
  }
  return DeepestPoint{Point(std::move(best_q)), best, false};
}

std::vector<Ball> edge_balls(const PointSet& s, const GeoGraph& g) {
  std::vector<Ball> balls;
  balls.reserve(g.edge_count());
  for (const Edge& e : g.edges()) balls.push_back(diametral_ball(s[e.u], s[e.v]));
  return balls;
}

// --- lenses -----------------------------------------------------------------

struct LensEval {
  std::vector<std::array<Vec2, 2>> segments;

  double min_angle(Vec2 q) const {
    double least = kPi;
    for (const auto& [a, b] : segments) {
      const Vec2 u = a - q;
      const Vec2 v = b - q;
      if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0)) continue;
      least = std::min(least, angle_between(u, v));
    }
    return least;
  }
};

Vec2 pattern_ascent(const LensEval& eval, Vec2 q, double step, double floor) {
  static constexpr std::array<Vec2, 8> kDirs{{{1, 0},
                                              {-1, 0},
                                              {0, 1},
                                              {0, -1},
                                              {0.70710678118654752, 0.70710678118654752},
                                              {-0.70710678118654752, 0.70710678118654752},
                                              {0.70710678118654752, -0.70710678118654752},
                                              {-0.70710678118654752, -0.70710678118654752}}};
  double value = eval.min_angle(q);
  int guard = 0;
  while (step > floor && guard++ < 20000) {
    Vec2 best_q = q;
    double best_v = value;
    for (Vec2 d : kDirs) {
      const Vec2 t = q + step * d;
      const double v = eval.min_angle(t);
      if (v > best_v) {
        best_v = v;
        best_q = t;
      }
    }
    if (best_v > value) {
      q = best_q;
      value = best_v;
    } else {
      step *= 0.5;
    }
  }
  return q;
}

// --- enumeration ------------------------------------------------------------

std::size_t factorial(std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

std::vector<std::vector<std::size_t>> hamiltonian_orders(std::size_t m, EnumerationMode mode) {
  std::vector<std::vector<std::size_t>> out;
  if (mode == EnumerationMode::Cycles) {
    std::vector<std::size_t> rest(m - 1);
    std::iota(rest.begin(), rest.end(), std::size_t{1});
    do {
      if (rest.front() < rest.back()) {
        std::vector<std::size_t> order{0};
        order.insert(order.end(), rest.begin(), rest.end());
        out.push_back(std::move(order));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      if (order.front() < order.back()) out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

}  // namespace

double WitnessCertificate::min_margin() const {
  double least = kInf;
  for (const EdgeMargin& e : per_edge_margin) least = std::min(least, e.depth);
  return least;
}

double LensWitness::min_angle() const {
  double least = kInf;
  for (const LensEdgeAngle& e : per_edge) least = std::min(least, e.angle);
  return least;
}

DeepestPoint deepest_point(std::span<const Ball> balls) {
  if (balls.empty()) fail(ErrorKind::Usage, "deepest point of an empty ball family");
  const std::size_t dim = balls.front().center.dim();
  for (const Ball& b : balls) {
    if (b.center.dim() != dim) fail(ErrorKind::Usage, "balls of mixed dimension");
  }
  if (dim != 2) return deepest_by_descent(balls);
  std::vector<Disk> disks;
  disks.reserve(balls.size());
  for (const Ball& b : balls) disks.push_back({b.center.xy(), b.radius});
  const Deepest2 d = deepest_planar(disks);
  return DeepestPoint{Point(d.point), d.excess, true};
}

std::optional<BallFamilyWitness> disks_common_point(std::span<const Ball> balls, double tol) {
  if (balls.empty()) fail(ErrorKind::Usage, "disks_common_point needs at least one ball");
  if (balls.front().center.dim() != 2) fail(ErrorKind::Usage, "disks_common_point is planar");
  const DeepestPoint d = deepest_point(balls);
  if (d.excess > tol) return std::nullopt;
  BallFamilyWitness w{d.point, {}};
  w.depths.reserve(balls.size());
  for (const Ball& b : balls) w.depths.push_back(ball_depth(b, d.point));
  return w;
}

WitnessCertificate certify(const PointSet& s, const GeoGraph& g, const Point& witness) {
  WitnessCertificate cert{witness, {}};
  cert.per_edge_margin.reserve(g.edge_count());
  for (const Edge& e : g.edges()) cert.per_edge_margin.push_back({e, ball_depth(diametral_ball(s[e.u], s[e.v]), witness)});
  return cert;
}

TverbergDecision decide_tverberg(const PointSet& s, const GeoGraph& g, double tol) {
  if (g.edge_count() == 0) fail(ErrorKind::Usage, "Tverberg test over an empty edge set");
  if (g.vertex_count() != s.size()) fail(ErrorKind::Usage, "graph and point set sizes differ");
  TverbergDecision out;
  if (s.dim() == 2) {
    std::vector<Disk> disks;
    disks.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      const Vec2 a = s[e.u].xy();
      const Vec2 b = s[e.v].xy();
      disks.push_back({0.5 * (a + b), 0.5 * norm(b - a)});
    }
    if (pairwise_disjoint_found(disks, tol)) {
      out.deepest = DeepestPoint{Point(disks.front().c), kInf, true};
      return out;
    }
    const Deepest2 d = deepest_planar(disks);
    out.deepest = DeepestPoint{Point(d.point), d.excess, true};
  } else {
    const std::vector<Ball> balls = edge_balls(s, g);
    out.deepest = deepest_point(balls);
  }
  if (out.deepest.excess <= tol) {
    out.certificate = certify(s, g, out.deepest.point);
  } else {
    out.numerical = !out.deepest.exact;
  }
  return out;
}

std::optional<WitnessCertificate> is_tverberg_graph(const PointSet& s, const GeoGraph& g, double tol) {
  return decide_tverberg(s, g, tol).certificate;
}

std::optional<WitnessCertificate> matching_common_point(const PointSet& s, const GeoGraph& matching, double tol) {
  if (!is_perfect_matching(matching) || matching.vertex_count() != s.size()) {
    fail(ErrorKind::Usage, "graph is not a perfect matching of the point set");
  }
  return is_tverberg_graph(s, matching, tol);
}

LensDecision lens_family_search(const PointSet& s, const GeoGraph& g, double alpha, double tol,
                                const LensSearchOptions& options) {
  if (s.dim() != 2) fail(ErrorKind::Usage, "lens search is planar");
  if (!(alpha > 0.0 && alpha < kPi)) fail(ErrorKind::Usage, "alpha must lie in (0, pi)");
  if (g.edge_count() == 0) fail(ErrorKind::Usage, "lens search over an empty edge set");

  LensEval eval;
  for (const Edge& e : g.edges()) eval.segments.push_back({s[e.u].xy(), s[e.v].xy()});

  const std::vector<Vec2> pts = s.planar_coords();
  Vec2 lo = pts.front();
  Vec2 hi = pts.front();
  for (Vec2 p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double extent = std::max({hi.x - lo.x, hi.y - lo.y, 1e-300});
  const double grid_step = options.grid_fraction * extent;
  const double floor = 1e-13 * extent;

  Vec2 best_q = pts.front();
  double best_v = -kInf;
  auto keep = [&](Vec2 q) {
    const double v = eval.min_angle(q);
    if (v > best_v) {
      best_v = v;
      best_q = q;
    }
  };

  // Cheap seeds first: the centroid and the deepest point of the disk family.
  {
    const Vec2 c = s.centroid().xy();
    keep(pattern_ascent(eval, c, 0.05 * extent, floor));
    const DeepestPoint d = deepest_point(edge_balls(s, g));
    keep(pattern_ascent(eval, d.point.xy(), 0.05 * extent, floor));
    // Closed lenses contain their endpoints; on flat sets a vertex may be the only common point.
    for (Vec2 p : pts) keep(p);
  }

  if (!(options.grid_only_if_needed && alpha - best_v <= tol)) {
    struct Cell {
      double value;
      Vec2 q;
    };
    const auto k = static_cast<std::size_t>(std::max(1, options.local_starts));
    std::vector<Cell> top;
    const auto nx = static_cast<std::size_t>(std::ceil((hi.x - lo.x) / grid_step)) + 1;
    const auto ny = static_cast<std::size_t>(std::ceil((hi.y - lo.y) / grid_step)) + 1;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      for (std::size_t iy = 0; iy < ny; ++iy) {
        const Vec2 q{std::min(hi.x, lo.x + grid_step * static_cast<double>(ix)),
                     std::min(hi.y, lo.y + grid_step * static_cast<double>(iy))};
        const double v = eval.min_angle(q);
        if (top.size() < k) {
          top.push_back({v, q});
          std::push_heap(top.begin(), top.end(), [](const Cell& a, const Cell& b) { return a.value > b.value; });
        } else if (v > top.front().value) {
          std::pop_heap(top.begin(), top.end(), [](const Cell& a, const Cell& b) { return a.value > b.value; });
          top.back() = {v, q};
          std::push_heap(top.begin(), top.end(), [](const Cell& a, const Cell& b) { return a.value > b.value; });
        }
      }
    }
    std::sort(top.begin(), top.end(), [](const Cell& a, const Cell& b) { return a.value > b.value; });
    for (const Cell& cell : top) keep(pattern_ascent(eval, cell.q, grid_step, floor));
  }

  LensDecision out;
  out.best_point = Point(best_q);
  out.objective = alpha - best_v;
  if (out.objective <= tol) {
    LensWitness w{out.best_point, alpha, {}};
    for (const Edge& e : g.edges()) {
      const Point& a = s[e.u];
      const Point& b = s[e.v];
      const double angle = (a == out.best_point || b == out.best_point) ? kPi : angle_at(out.best_point, a, b);
      w.per_edge.push_back({e, angle});
    }
    out.witness = std::move(w);
    out.numerical = false;
  }
  return out;
}

std::optional<LensWitness> lens_family_common_point(const PointSet& s, const GeoGraph& g, double alpha, double tol,
                                                    const LensSearchOptions& options) {
  return lens_family_search(s, g, alpha, tol, options).witness;
}

bool EnumerationReport::contains(const GeoGraph& g) const {
  return std::any_of(tverberg.begin(), tverberg.end(), [&](const CertifiedGraph& c) { return c.graph.same_edges(g); });
}

EnumerationReport enumerate_hamiltonian(const PointSet& s, EnumerationMode mode, double tol, unsigned jobs) {
  const std::size_t m = s.size();
  if (s.dim() != 2) fail(ErrorKind::Usage, "enumeration is planar");
  if (m > kEnumerationCap) {
    fail(ErrorKind::Usage, "enumeration is capped at " + std::to_string(kEnumerationCap) + " points");
  }
  if (mode == EnumerationMode::Cycles && m < 3) fail(ErrorKind::Usage, "cycles need at least 3 points");
  if (mode == EnumerationMode::Paths && m < 2) fail(ErrorKind::Usage, "paths need at least 2 points");

  const auto orders = hamiltonian_orders(m, mode);
  EnumerationReport report;
  report.mode = mode;
  report.total = orders.size();
  const std::size_t expected = mode == EnumerationMode::Cycles ? factorial(m - 1) / 2 : factorial(m) / 2;
  if (report.total != expected) fail(ErrorKind::ProofViolation, "enumeration count mismatch");

  std::vector<std::optional<CertifiedGraph>> results(orders.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      GeoGraph g = mode == EnumerationMode::Cycles ? cycle_from_order(m, orders[k]) : path_from_order(m, orders[k]);
      if (auto cert = is_tverberg_graph(s, g, tol)) results[k] = CertifiedGraph{std::move(g), std::move(*cert)};
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(orders.size())));
  if (jobs == 1) {
    work(0, orders.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (orders.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(orders.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  for (auto& r : results) {
    if (r) report.tverberg.push_back(std::move(*r));
  }
  report.counterexample = report.tverberg.empty();
  return report;
}

}  // namespace tverberg
