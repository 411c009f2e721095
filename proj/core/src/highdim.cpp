#include "tverberg/highdim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>

#include "tverberg/error.hpp"
#include "tverberg/simplex.hpp"

namespace tverberg {

namespace {

using Rgs = std::vector<std::uint8_t>;

// Restricted-growth strings of length m using exactly r labels, in
// lexicographic order.
void collect_rgs(std::size_t m, std::size_t r, Rgs& cur, std::size_t used, std::vector<Rgs>& out) {
  const std::size_t i = cur.size();
  if (i == m) {
    if (used == r) out.push_back(cur);
    return;
  }
  if (r - used > m - i) return;
  const std::size_t top = std::min(used + 1, r);
  for (std::size_t label = 0; label < top; ++label) {
    cur.push_back(static_cast<std::uint8_t>(label));
    collect_rgs(m, r, cur, std::max(used, label + 1), out);
    cur.pop_back();
  }
}

std::vector<IndexSet> parts_of(const Rgs& rgs, std::size_t r) {
  std::vector<IndexSet> parts(r);
  for (std::size_t i = 0; i < rgs.size(); ++i) parts[rgs[i]].push_back(i);
  return parts;
}

double inner(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::optional<HullsIntersection> hulls_common_point(const PointSet& s, const std::vector<IndexSet>& parts, double tol) {
  if (parts.empty()) fail(ErrorKind::Usage, "at least one part is required");
  std::vector<bool> seen(s.size(), false);
  for (const IndexSet& part : parts) {
    if (part.empty()) fail(ErrorKind::Usage, "parts must be nonempty");
    for (std::size_t i : part) {
      if (i >= s.size()) fail(ErrorKind::Usage, "part index out of range");
      if (seen[i]) fail(ErrorKind::Usage, "parts must be disjoint");
      seen[i] = true;
    }
  }
  const std::size_t d = s.dim();
  const std::size_t r = parts.size();
  std::vector<std::size_t> offset(r + 1, 0);
  for (std::size_t j = 0; j < r; ++j) offset[j + 1] = offset[j] + parts[j].size();
  const std::size_t vars = offset[r];

  Matrix a;
  std::vector<double> b;
  for (std::size_t j = 1; j < r; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<double> row(vars, 0.0);
      for (std::size_t t = 0; t < parts[j].size(); ++t) row[offset[j] + t] = s[parts[j][t]][k];
      for (std::size_t t = 0; t < parts[0].size(); ++t) row[offset[0] + t] -= s[parts[0][t]][k];
      a.push_back(std::move(row));
      b.push_back(0.0);
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> row(vars, 0.0);
    for (std::size_t t = 0; t < parts[j].size(); ++t) row[offset[j] + t] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }

  const std::optional<std::vector<double>> x = feasible_point(a, b, tol);
  if (!x) return std::nullopt;

  HullsIntersection out;
  out.coefficients.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    out.coefficients[j].assign(x->begin() + static_cast<std::ptrdiff_t>(offset[j]),
                               x->begin() + static_cast<std::ptrdiff_t>(offset[j + 1]));
  }
  std::vector<double> p(d, 0.0);
  for (std::size_t t = 0; t < parts[0].size(); ++t) {
    for (std::size_t k = 0; k < d; ++k) p[k] += out.coefficients[0][t] * s[parts[0][t]][k];
  }
  out.point = Point(std::move(p));
  return out;
}

std::size_t TverbergPartition::part_of(std::size_t i) const {
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (std::find(parts[j].begin(), parts[j].end(), i) != parts[j].end()) return j;
  }
  fail(ErrorKind::Usage, "point " + std::to_string(i) + " is in no part");
}

std::size_t max_tverberg_r(std::size_t m, std::size_t d) {
  if (m == 0) fail(ErrorKind::Usage, "empty point set");
  return (m - 1) / (d + 1) + 1;
}

TverbergPartition tverberg_partition(const PointSet& s, std::size_t r, double tol, unsigned jobs) {
  const std::size_t m = s.size();
  const std::size_t d = s.dim();
  if (r == 0) fail(ErrorKind::Usage, "r must be at least 1");
  if (m > kPartitionCap) {
    fail(ErrorKind::Usage, "exhaustive partition search is capped at " + std::to_string(kPartitionCap) + " points");
  }
  if (m < (r - 1) * (d + 1) + 1) {
    fail(ErrorKind::Usage, "need at least (r-1)(d+1)+1 = " + std::to_string((r - 1) * (d + 1) + 1) + " points");
  }

  std::vector<Rgs> all;
  Rgs cur;
  collect_rgs(m, r, cur, 0, all);

  std::vector<std::optional<HullsIntersection>> found(all.size());
  const std::size_t block = 64;
  const unsigned workers = std::max(1u, jobs);
  for (std::size_t start = 0; start < all.size(); start += block * workers) {
    const std::size_t stop = std::min(all.size(), start + block * workers);
    std::atomic<std::size_t> best{stop};
    auto run = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi && k < best.load(); ++k) {
        found[k] = hulls_common_point(s, parts_of(all[k], r), tol);
        if (found[k]) {
          std::size_t b = best.load();
          while (k < b && !best.compare_exchange_weak(b, k)) {
          }
          return;
        }
      }
    };
    if (workers == 1) {
      run(start, stop);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t lo = start; lo < stop; lo += block) pool.emplace_back(run, lo, std::min(stop, lo + block));
    }
    const std::size_t k = best.load();
    if (k < stop) {
      TverbergPartition out;
      out.parts = parts_of(all[k], r);
      out.common_point = found[k]->point;
      out.barycentric_witnesses = found[k]->coefficients;
      return out;
    }
  }
  fail(ErrorKind::TheoremViolation, "no partition into " + std::to_string(r) + " parts has intersecting hulls");
}

double HalfSpace::signed_excess(const Point& x) const { return inner(x.coords(), normal) - offset; }

HalfSpace obtuse_half_space(const Point& q, const Point& p) {
  const Point n = q - p;
  if (norm(n) == 0.0) fail(ErrorKind::Usage, "half-space normal vanishes");
  HalfSpace h;
  h.normal.assign(n.coords().begin(), n.coords().end());
  h.offset = dot(p, n);
  return h;
}

Theorem3Result theorem3_graph(const PointSet& s, const TverbergPartition& partition, double tol) {
  const Point& p = partition.common_point;
  const double scale = std::max(1.0, s.circumradius());
  GeoGraph g(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    const double qp = distance(s[q], p);
    for (const IndexSet& part : partition.parts) {
      std::optional<std::size_t> pick;
      if (qp <= tol) {
        for (std::size_t x : part) {
          if (x != q) {
            pick = x;
            break;
          }
        }
        if (!pick) continue;  // q alone in its own part
      } else {
        const HalfSpace h = obtuse_half_space(s[q], p);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t x : part) {
          const double e = h.signed_excess(s[x]);
          if (e <= tol * qp * scale && e < best) {
            best = e;
            pick = x;
          }
        }
        if (!pick) fail(ErrorKind::ProofViolation, "a part misses the half-space of point " + std::to_string(q));
      }
      g.add_edge(q, *pick);
    }
  }
  Theorem3Result out;
  out.certificate = certify(s, g, p);
  out.graph = std::move(g);
  out.partition = partition;
  return out;
}

Theorem3Result theorem3_graph(const PointSet& s, std::size_t r, double tol, unsigned jobs) {
  return theorem3_graph(s, tverberg_partition(s, r, tol, jobs), tol);
}

bool min_degree_check(const GeoGraph& g, const PointSet& s, std::size_t d) {
  return static_cast<double>(g.min_degree()) * static_cast<double>(d + 1) >= static_cast<double>(s.size());
}

}  // namespace tverberg
