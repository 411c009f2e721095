#include "tverberg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

constexpr double kMinStepFraction = 1e-14;
constexpr double kWindows[] = {5e-2, 1e-3, 1e-5, 0.0};

Vec2 perp_left(Vec2 v) { return {-v.y, v.x}; }
Vec2 perp_right(Vec2 v) { return {v.y, -v.x}; }

bool recoverable(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Stalled:
    case ErrorKind::RadialDegeneracy:
    case ErrorKind::RepresentativeDegeneracy:
    case ErrorKind::ArcHellyFailure:
    case ErrorKind::UndefinedAngle:
      return true;
    default:
      return false;
  }
}

void require_planar(const PointSet& s) {
  if (s.dim() != 2) fail(ErrorKind::Usage, "the planar solver needs two-dimensional points");
}

double length_scale(const PointSet& s) {
  const double r = s.circumradius();
  return r > 0.0 ? r : 1.0;
}

std::optional<std::size_t> near_point(const PointSet& s, Vec2 q, double radius, std::optional<std::size_t> skip) {
  std::optional<std::size_t> best;
  double best_d = radius;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (skip && *skip == i) continue;
    const double d = norm(s[i].xy() - q);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

SolverState type1_state(const PointSet& s, Vec2 p, double tol) {
  SolverState st;
  st.p = p;
  st.plan = type1_cycle(s, p, tol);
  st.profile = violation_profile(st.plan, tol);
  return st;
}

SolverState type2_state(const PointSet& s, std::size_t j, double tol) {
  CenterChoice choice = handle_center_on_point(s, j, tol);
  SolverState st;
  st.p = s[j].xy();
  st.center_index = j;
  st.rep_dir = choice.rep_dir;
  st.plan = std::move(choice.plan);
  st.profile = std::move(choice.profile);
  return st;
}

// Profile comparison used by the line search. Snapping onto a point of S is
// allowed when it is no worse; every other move must strictly improve.
bool accepts(const SolverState& candidate, const SolverState& current) {
  if (candidate.center_index && !current.center_index) return !better_profile(current.profile, candidate.profile);
  return better_profile(candidate.profile, current.profile);
}

std::optional<SolverState> evaluate_at(const PointSet& s, Vec2 q, const SolverState& from, const SolverConfig& cfg) {
  try {
    if (auto j = near_point(s, q, cfg.near_radius, from.center_index)) return type2_state(s, *j, cfg.tol);
    if (from.center_index && norm(s[*from.center_index].xy() - q) < cfg.near_radius) return std::nullopt;
    return type1_state(s, q, cfg.tol);
  } catch (const Error& e) {
    if (recoverable(e.kind())) return std::nullopt;
    throw;
  }
}

void push_unique(std::vector<Vec2>& dirs, Vec2 d) {
  for (Vec2 e : dirs) {
    if (angle_between(e, d) <= 1e-12) return;
  }
  dirs.push_back(d);
}

// Midpoints of the common intersection of the short arcs, widened by the arcs
// of nearly right pairs so that moves do not shorten them.
std::vector<Vec2> candidate_directions(const SolverState& st, double tol) {
  std::vector<Vec2> dirs;
  if (st.rep_dir) push_unique(dirs, -*st.rep_dir);
  const RadialOrder& order = st.plan.order;
  for (double w : kWindows) {
    std::vector<Arc> arcs = st.profile.short_arcs;
    for (const PairAngle& pa : st.profile.pairs) {
      if (pa.angle >= kHalfPi - tol && pa.angle <= kHalfPi + tol + w) {
        arcs.push_back(Arc::between(order.center, order.directions[pa.slot_a], order.directions[pa.slot_b]));
      }
    }
    if (auto q = arcs_common_intersection(arcs)) push_unique(dirs, q->midpoint_dir());
  }
  if (auto q = arcs_common_intersection(st.profile.short_arcs)) {
    push_unique(dirs, q->midpoint_dir());
  } else if (!st.rep_dir) {
    fail(ErrorKind::ArcHellyFailure, "short arcs around the center have no common point");
  }
  return dirs;
}

struct TrialResult {
  std::optional<SolverState> state;
  std::size_t iterations = 0;
};

TrialResult run_trial(const PointSet& s, Vec2 start, const SolverConfig& cfg, bool observe) {
  TrialResult out;
  try {
    SolverState st = initial_state(s, start, cfg);
    if (observe && cfg.observer) cfg.observer(st);
    while (st.profile.ell > 0) {
      if (st.iterations >= cfg.max_iters) {
        out.iterations = st.iterations;
        return out;
      }
      st = ascent_step(s, st, cfg);
      if (observe && cfg.observer) cfg.observer(st);
    }
    out.iterations = st.iterations;
    out.state = std::move(st);
  } catch (const Error& e) {
    if (!recoverable(e.kind())) throw;
  }
  return out;
}

Vec2 trial_start(const PointSet& s, std::uint64_t seed, std::size_t trial) {
  if (trial == 0) return s.centroid().xy();
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (const Point& p : s) {
    lo_x = std::min(lo_x, p.x());
    hi_x = std::max(hi_x, p.x());
    lo_y = std::min(lo_y, p.y());
    hi_y = std::max(hi_y, p.y());
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> ux(lo_x, hi_x);
  std::uniform_real_distribution<double> uy(lo_y, hi_y);
  const double x = ux(rng);
  return {x, uy(rng)};
}

// The final certificate is always computed against the caller's points.
std::optional<SolveResult> certified(const PointSet& s, const GeoGraph& g, const Point& preferred, double tol) {
  SolveResult result;
  result.graph = g;
  std::vector<CertificateEntry> entries = certificate_for(s, g, preferred);
  double worst = std::numeric_limits<double>::infinity();
  for (const CertificateEntry& e : entries) worst = std::min(worst, e.depth);
  if (worst >= 0.0) {
    result.witness = preferred;
    result.certificate = std::move(entries);
    return result;
  }
  const TverbergDecision decision = decide_tverberg(s, g, tol);
  if (!decision.certificate) return std::nullopt;
  if (worst >= decision.certificate->min_margin()) {
    result.witness = preferred;
    result.certificate = std::move(entries);
  } else {
    result.witness = decision.certificate->witness;
    result.certificate = certificate_for(s, g, result.witness);
  }
  return result;
}

Point state_witness(const PointSet& s, const SolverState& st) {
  if (st.center_index) return s[*st.center_index];
  return Point(st.p);
}

std::optional<SolveResult> brute_force(const PointSet& s, EnumerationMode mode, double tol, unsigned jobs) {
  if (s.size() > kEnumerationCap) return std::nullopt;
  const EnumerationReport report = enumerate_hamiltonian(s, mode, tol, jobs);
  if (report.tverberg.empty()) return std::nullopt;
  const CertifiedGraph& first = report.tverberg.front();
  return certified(s, first.graph, first.certificate.witness, tol);
}

std::vector<std::size_t> hull_ccw(const PointSet& s) {
  std::vector<std::size_t> idx(s.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return s[a].x() < s[b].x() || (s[a].x() == s[b].x() && s[a].y() < s[b].y());
  });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    return cross(s[a].xy() - s[o].xy(), s[b].xy() - s[o].xy());
  };
  for (std::size_t i : idx) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t t = idx.size() - 1; t-- > 0;) {
    const std::size_t i = idx[t];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

bool has_collinear_triple(const PointSet& s, double tol) {
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vec2 a = s[i].xy();
        const Vec2 b = s[j].xy();
        const Vec2 c = s[k].xy();
        const double area2 = std::abs(cross(b - a, c - a));
        const double longest = std::max({norm(b - a), norm(c - a), norm(c - b)});
        if (area2 / longest <= tol) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::OddCycle: return "odd-cycle";
    case SolveMode::EvenPath: return "even-path";
    case SolveMode::ConvexFast: return "convex-fast";
    case SolveMode::FourPoint: return "four-point";
    case SolveMode::BruteForceFallback: return "brute-force-fallback";
  }
  return "unknown";
}

double SolveResult::min_depth() const {
  double m = std::numeric_limits<double>::infinity();
  for (const CertificateEntry& e : certificate) m = std::min(m, e.depth);
  return m;
}

double SolveResult::min_angle() const {
  double m = std::numeric_limits<double>::infinity();
  for (const CertificateEntry& e : certificate) m = std::min(m, e.angle);
  return m;
}

std::vector<CertificateEntry> certificate_for(const PointSet& s, const GeoGraph& g, const Point& witness) {
  std::vector<CertificateEntry> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.canonical_edges()) {
    const Point& x = s[e.u];
    const Point& y = s[e.v];
    const double angle = (witness == x || witness == y) ? kPi : angle_at(witness, x, y);
    out.push_back({e, angle, ball_depth(diametral_ball(x, y), witness)});
  }
  return out;
}

// --- Center on a point of S ---------------------------------------------------

CenterChoice handle_center_on_point(const PointSet& s, std::size_t p_index, double tol) {
  require_planar(s);
  const std::size_t m = s.size();
  if (m < 3 || m % 2 == 0) fail(ErrorKind::Usage, "center handling needs an odd number of points >= 3");
  if (p_index >= m) fail(ErrorKind::Usage, "center index out of range");
  const Vec2 p = s[p_index].xy();
  const std::size_t n = (m - 1) / 2;

  std::vector<Vec2> dirs;
  dirs.reserve(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i != p_index) dirs.push_back(normalized(s[i].xy() - p));
  }
  std::sort(dirs.begin(), dirs.end(), [](Vec2 a, Vec2 b) { return clockwise_key(a) < clockwise_key(b); });

  std::optional<CenterChoice> best;
  auto rank_better = [](const CenterChoice& a, const CenterChoice& b) {
    if (a.profile.ell != b.profile.ell) return a.profile.ell < b.profile.ell;
    if (a.movable != b.movable) return a.movable;
    return a.profile.f > b.profile.f;
  };

  for (std::size_t g = 0; g < dirs.size(); ++g) {
    const Vec2 a = dirs[g];
    const Vec2 b = dirs[(g + 1) % dirs.size()];
    const double gap = clockwise_sweep(a, b);
    if (gap <= 2.0 * tol) fail(ErrorKind::RadialDegeneracy, "two points project to the same direction");
    const Arc span = Arc::clockwise(p, a, gap);

    CenterChoice choice;
    choice.rep_dir = span.midpoint_dir();
    choice.plan = type2_cycle(s, p_index, choice.rep_dir, tol);
    choice.profile = violation_profile(choice.plan, tol);

    // Cells of the gap cut by the movability constraints.
    const std::vector<Vec2>& slot = choice.plan.order.directions;
    const Vec2 partner_a = slot[n - 1];
    const Vec2 partner_b = slot[n];
    const std::optional<Arc> q = arcs_common_intersection(choice.profile.short_arcs);
    const bool need_q = choice.profile.ell > 0;
    if (!need_q || q) {
      std::vector<double> cuts{0.0, gap};
      auto add_cut = [&](Vec2 c) {
        const double off = clockwise_sweep(a, c);
        if (off > 0.0 && off < gap) cuts.push_back(off);
      };
      for (Vec2 v : {partner_a, partner_b}) {
        add_cut(perp_left(v));
        add_cut(perp_right(v));
      }
      if (need_q) {
        add_cut(-q->start_dir());
        add_cut(-q->end_dir());
      }
      std::sort(cuts.begin(), cuts.end());
      double widest = 0.0;
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double width = cuts[c + 1] - cuts[c];
        if (width <= 2.0 * tol || width <= widest) continue;
        const Vec2 r = span.direction_at_offset(0.5 * (cuts[c] + cuts[c + 1]));
        const bool long_pairs = angle_between(r, partner_a) > kHalfPi + tol && angle_between(r, partner_b) > kHalfPi + tol;
        const bool inside_q = !need_q || q->contains(-r, 0.0);
        if (long_pairs && inside_q) {
          widest = width;
          choice.rep_dir = r;
          choice.movable = true;
        }
      }
    }
    if (!best || rank_better(choice, *best)) best = std::move(choice);
  }
  return std::move(*best);
}

// --- Ascent -------------------------------------------------------------------

SolverState initial_state(const PointSet& s, Vec2 p, const SolverConfig& config) {
  require_planar(s);
  SolverState st;
  if (auto j = near_point(s, p, config.near_radius, std::nullopt)) {
    st = type2_state(s, *j, config.tol);
  } else {
    st = type1_state(s, p, config.tol);
  }
  st.step = config.initial_step * length_scale(s);
  return st;
}

SolverState ascent_step(const PointSet& s, const SolverState& state, const SolverConfig& config) {
  if (state.profile.ell == 0) fail(ErrorKind::Usage, "ascent step requested at a solution");
  const double scale = length_scale(s);
  const double cap = scale;
  double min_step = kMinStepFraction * scale;
  if (state.center_index) min_step = std::max(min_step, 2.0 * config.near_radius);
  const double start = std::min(state.step > 0.0 ? state.step : config.initial_step * scale, cap);

  for (Vec2 u : candidate_directions(state, config.tol)) {
    for (double t = start; t >= min_step; t *= 0.5) {
      std::optional<SolverState> next = evaluate_at(s, state.p + t * u, state, config);
      if (next && accepts(*next, state)) {
        next->step = std::min(2.0 * t, cap);
        next->iterations = state.iterations + 1;
        return std::move(*next);
      }
    }
  }
  fail(ErrorKind::Stalled, "line search found no improving step after " + std::to_string(state.iterations) +
                               " iterations (ell = " + std::to_string(state.profile.ell) + ")");
}

// --- Odd sets -------------------------------------------------------------------

SolveResult solve_odd(const PointSet& s, std::uint64_t seed, const SolverConfig& config) {
  require_planar(s);
  const std::size_t m = s.size();
  if (m < 3 || m % 2 == 0) fail(ErrorKind::Usage, "solve_odd needs an odd number of points >= 3");
  const double tol = config.tol;
  SolveStats stats;

  auto finish = [&](SolveResult r, SolveMode mode) {
    r.mode = mode;
    r.stats = stats;
    return r;
  };

  // First attempt on the input itself so that degenerate but solvable sets
  // keep their exact witness.
  {
    TrialResult t = run_trial(s, trial_start(s, seed, 0), config, true);
    stats.iterations += t.iterations;
    if (t.state) {
      if (auto r = certified(s, t.state->plan.cycle, state_witness(s, *t.state), tol)) return finish(*r, SolveMode::OddCycle);
    }
  }

  PointSet work = s;
  if (!in_general_position(s, tol, GpLevel::Local)) {
    try {
      work = perturb(s, 1e-6 * length_scale(s), seed, tol, GpLevel::Local);
      stats.perturbed = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PerturbFailed) throw;
    }
  }

  const std::size_t trials = config.restarts + 1;
  std::vector<TrialResult> results(trials);
  // Trial 0 on the unperturbed set was already run.
  const std::size_t first = stats.perturbed ? 0 : 1;
  std::atomic<std::size_t> found{trials};
  std::atomic<std::size_t> next{first};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&](bool observe) {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= trials || k > found.load()) return;
      try {
        results[k] = run_trial(work, trial_start(work, seed, k), config, observe);
        if (results[k].state) {
          if (certified(s, results[k].state->plan.cycle, state_witness(work, *results[k].state), tol)) {
            std::size_t cur = found.load();
            while (k < cur && !found.compare_exchange_weak(cur, k)) {
            }
          } else {
            results[k].state.reset();
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        found.store(0);
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker(true);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, false);
  }
  if (error) std::rethrow_exception(error);

  const std::size_t winner = found.load();
  for (std::size_t k = first; k < std::min(winner + 1, trials); ++k) stats.iterations += results[k].iterations;
  if (winner < trials) {
    stats.restarts = winner;
    const SolverState& st = *results[winner].state;
    auto r = certified(s, st.plan.cycle, state_witness(work, st), tol);
    return finish(*r, SolveMode::OddCycle);
  }
  stats.restarts = config.restarts;

  if (config.brute_force_fallback) {
    if (auto r = brute_force(s, EnumerationMode::Cycles, tol, jobs)) {
      stats.used_fallback = true;
      return finish(*r, SolveMode::BruteForceFallback);
    }
    if (m <= kEnumerationCap) fail(ErrorKind::TheoremViolation, "no Hamiltonian cycle of S is a Tverberg graph");
  }
  fail(ErrorKind::SearchFailed, "no Tverberg cycle found after " + std::to_string(trials) + " trials");
}

// --- Even sets -------------------------------------------------------------------

SolveResult solve_even_path(const PointSet& s, std::uint64_t seed, const SolverConfig& config) {
  require_planar(s);
  const std::size_t m = s.size();
  if (m < 2 || m % 2 == 1) fail(ErrorKind::Usage, "solve_even_path needs an even number of points >= 2");
  const double tol = config.tol;

  if (m == 2) {
    SolveResult r;
    r.graph = GeoGraph(2);
    r.graph.add_edge(0, 1);
    r.witness = midpoint(s[0], s[1]);
    r.certificate = certificate_for(s, r.graph, r.witness);
    r.mode = SolveMode::EvenPath;
    return r;
  }

  const double scale = length_scale(s);
  const Vec2 c = s.centroid().xy();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;
  const bool base_gp = in_general_position(s, tol, GpLevel::Local);
  std::optional<PointSet> augmented;
  std::optional<PointSet> fallback_aug;
  for (int attempt = 0; attempt < kPerturbRetries && !augmented; ++attempt) {
    Vec2 x = c;
    if (attempt > 0) {
      const Vec2 g{gauss(rng), gauss(rng)};
      x += (1e-3 * scale * std::sqrt(unit(rng))) * normalized(g);
    }
    if (near_point(s, x, 1e-6 * scale, std::nullopt)) continue;
    std::vector<Point> pts = s.points();
    pts.emplace_back(x);
    PointSet aug(std::move(pts));
    if (!base_gp) {
      if (!fallback_aug) fallback_aug = aug;
      if (in_general_position(aug, tol, GpLevel::Local)) augmented = std::move(aug);
      continue;
    }
    if (in_general_position(aug, tol, GpLevel::Local)) augmented = std::move(aug);
  }
  if (!augmented) augmented = fallback_aug;

  if (augmented) {
    SolverConfig inner = config;
    inner.brute_force_fallback = config.brute_force_fallback;
    try {
      SolveResult cyc = solve_odd(*augmented, seed, inner);
      GeoGraph path(m);
      for (const Edge& e : cyc.graph.edges()) {
        if (e.v != m) path.add_edge(e.u, e.v);
      }
      if (auto r = certified(s, path, cyc.witness, tol)) {
        r->mode = SolveMode::EvenPath;
        r->stats = cyc.stats;
        return *r;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchFailed && e.kind() != ErrorKind::TheoremViolation) throw;
    }
  }

  if (config.brute_force_fallback) {
    if (auto r = brute_force(s, EnumerationMode::Paths, tol, std::max(1u, config.jobs))) {
      r->mode = SolveMode::BruteForceFallback;
      r->stats.used_fallback = true;
      return *r;
    }
    if (m <= kEnumerationCap) fail(ErrorKind::TheoremViolation, "no Hamiltonian path of S is a Tverberg graph");
  }
  fail(ErrorKind::SearchFailed, "no Tverberg path found");
}

SolveResult solve(const PointSet& s, std::uint64_t seed, const SolverConfig& config) {
  if (s.size() % 2 == 1) return solve_odd(s, seed, config);
  return solve_even_path(s, seed, config);
}

// --- Closed-form cases ------------------------------------------------------------

bool in_convex_position(const PointSet& s, double tol) {
  require_planar(s);
  if (s.size() < 3) return false;
  if (hull_ccw(s).size() != s.size()) return false;
  return !has_collinear_triple(s, tol);
}

std::vector<std::size_t> clockwise_hull_order(const PointSet& s) {
  if (!in_convex_position(s)) fail(ErrorKind::Usage, "points are not in strict convex position");
  std::vector<std::size_t> order = hull_ccw(s);
  std::reverse(order.begin(), order.end());
  return order;
}

SolveResult convex_position_cycle(const PointSet& s, double tol, bool validate_lens) {
  require_planar(s);
  const std::size_t m = s.size();
  if (m < 3 || m % 2 == 0) fail(ErrorKind::Usage, "the convex construction needs an odd number of points >= 3");
  if (!in_convex_position(s, tol)) fail(ErrorKind::Usage, "points are not in strict convex position");
  const std::vector<std::size_t> order = clockwise_hull_order(s);
  const std::size_t n = (m - 1) / 2;
  GeoGraph g(m);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(order[i], order[(i + n) % m]);

  std::vector<Ball> balls;
  balls.reserve(m);
  for (const Edge& e : g.edges()) balls.push_back(diametral_ball(s[e.u], s[e.v]));
  const std::optional<BallFamilyWitness> w = disks_common_point(balls, tol);
  if (!w) fail(ErrorKind::ProofViolation, "diametral disks of the convex-position cycle share no point");

  SolveResult r;
  r.graph = std::move(g);
  r.witness = w->witness;
  r.certificate = certificate_for(s, r.graph, r.witness);
  r.mode = SolveMode::ConvexFast;
  if (validate_lens) r.lens_witness = lens_family_common_point(s, r.graph, kConvexLensAlpha, tol);
  return r;
}

SolveResult four_point_cycle(const PointSet& s, double tol) {
  require_planar(s);
  if (s.size() != 4) fail(ErrorKind::Usage, "four_point_cycle needs exactly four points");
  if (has_collinear_triple(s, tol)) fail(ErrorKind::Usage, "three of the four points are collinear");

  const std::vector<std::size_t> hull = hull_ccw(s);
  SolveResult r;
  r.mode = SolveMode::FourPoint;
  r.graph = GeoGraph(4);

  if (hull.size() == 3) {
    std::size_t w = 0;
    while (std::find(hull.begin(), hull.end(), w) != hull.end()) ++w;
    std::vector<std::size_t> tri = hull;
    std::sort(tri.begin(), tri.end());
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t x = tri[k];
      const std::size_t y = tri[(k + 1) % 3];
      const std::size_t z = tri[(k + 2) % 3];
      if (in_closed(in_diametral_ball(s[w], s[x], s[y], tol)) && in_closed(in_diametral_ball(s[w], s[x], s[z], tol))) {
        const std::size_t cyc[] = {w, y, x, z};
        r.graph = cycle_from_order(4, cyc);
        r.witness = s[w];
        r.certificate = certificate_for(s, r.graph, r.witness);
        return r;
      }
    }
    fail(ErrorKind::ProofViolation, "no hull vertex sees the interior point across both incident sides");
  }

  // Convex quadrilateral a b c d: diagonals x-y and w-z cross at p.
  const std::size_t x = hull[0];
  const std::size_t w = hull[1];
  const std::size_t y = hull[2];
  const std::size_t z = hull[3];
  const Vec2 px = s[x].xy();
  const Vec2 py = s[y].xy();
  const Vec2 pw = s[w].xy();
  const Vec2 pz = s[z].xy();
  const double t = cross(pw - px, pz - pw) / cross(py - px, pz - pw);
  const Point p(px + t * (py - px));
  if (angle_at(p, s[x], s[w]) >= kHalfPi) {
    const std::size_t cyc[] = {x, w, z, y};
    r.graph = cycle_from_order(4, cyc);
  } else {
    const std::size_t cyc[] = {w, y, x, z};
    r.graph = cycle_from_order(4, cyc);
  }
  r.witness = p;
  r.certificate = certificate_for(s, r.graph, r.witness);
  return r;
}

}  // namespace tverberg
