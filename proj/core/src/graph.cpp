#include "tverberg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tverberg/error.hpp"

namespace tverberg {

Edge::Edge(std::size_t a, std::size_t b) : u(std::min(a, b)), v(std::max(a, b)) {}

GeoGraph::GeoGraph(std::size_t n_vertices, std::span<const Edge> edges) : n_(n_vertices) {
  for (const Edge& e : edges) {
    if (!add_edge(e.u, e.v)) {
      fail(ErrorKind::Usage, "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
}

bool GeoGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) fail(ErrorKind::Usage, "self-loop at vertex " + std::to_string(a));
  if (a >= n_ || b >= n_) {
    fail(ErrorKind::Usage, "edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range for " +
                               std::to_string(n_) + " vertices");
  }
  if (has_edge(a, b)) return false;
  edges_.emplace_back(a, b);
  return true;
}

void GeoGraph::remove_vertex_edges(std::size_t v) {
  std::erase_if(edges_, [v](const Edge& e) { return e.u == v || e.v == v; });
}

bool GeoGraph::has_edge(std::size_t a, std::size_t b) const {
  const Edge key(a, b);
  return std::find(edges_.begin(), edges_.end(), key) != edges_.end();
}

std::size_t GeoGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<std::size_t> GeoGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const Edge& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GeoGraph::min_degree() const {
  if (n_ == 0) return 0;
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return *std::min_element(deg.begin(), deg.end());
}

std::vector<Edge> GeoGraph::canonical_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool GeoGraph::same_edges(const GeoGraph& other) const {
  return n_ == other.n_ && canonical_edges() == other.canonical_edges();
}

GeoGraph GeoGraph::subgraph(std::span<const Edge> keep) const {
  GeoGraph out(n_);
  for (const Edge& e : keep) {
    if (!has_edge(e.u, e.v)) fail(ErrorKind::Usage, "subgraph edge not present in the graph");
    out.add_edge(e.u, e.v);
  }
  return out;
}

GeoGraph cycle_from_order(std::size_t n_vertices, std::span<const std::size_t> order) {
  GeoGraph g(n_vertices);
  if (order.size() < 3) fail(ErrorKind::Usage, "a cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.add_edge(order[i], order[(i + 1) % order.size()])) {
      fail(ErrorKind::Usage, "cycle order repeats an edge");
    }
  }
  return g;
}

GeoGraph path_from_order(std::size_t n_vertices, std::span<const std::size_t> order) {
  GeoGraph g(n_vertices);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.add_edge(order[i], order[i + 1])) fail(ErrorKind::Usage, "path order repeats an edge");
  }
  return g;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> degrees(const GeoGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

}  // namespace

bool is_connected(const GeoGraph& g) {
  if (g.vertex_count() == 0) return true;
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  const std::size_t root = uf.find(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v) {
    if (uf.find(v) != root) return false;
  }
  return true;
}

bool is_hamiltonian_cycle(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  const auto deg = degrees(g);
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d != 2; })) return false;
  return is_connected(g);
}

bool is_hamiltonian_path(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  const auto deg = degrees(g);
  const auto ends = std::count(deg.begin(), deg.end(), std::size_t{1});
  if (ends != 2) return false;
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 0 || d > 2; })) return false;
  return is_connected(g);
}

bool is_perfect_matching(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || n % 2 != 0 || g.edge_count() != n / 2) return false;
  const auto deg = degrees(g);
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 1; });
}

std::vector<std::size_t> traversal_order(const GeoGraph& g) {
  const bool cycle = is_hamiltonian_cycle(g);
  if (!cycle && !is_hamiltonian_path(g)) return {};
  std::size_t start = 0;
  if (!cycle) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 1) {
        start = v;
        break;
      }
    }
  }
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = start;
  while (order.size() < g.vertex_count()) {
    const auto nb = g.neighbors(cur);
    // From the start, take the smaller neighbour.
    const std::size_t next = (order.size() == 1 || nb.front() != prev) ? nb.front() : nb.back();
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

std::string format_edge_list(const GeoGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

GeoGraph parse_edge_list(std::size_t n_vertices, const std::string& text) {
  GeoGraph g(n_vertices);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_index = [&](std::size_t& out) {
    skip_space();
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr == first) {
      fail(ErrorKind::Parse, "bad edge list near offset " + std::to_string(pos) + " in \"" + text + "\"");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
  };
  while (pos < text.size()) {
    std::size_t a = 0;
    std::size_t b = 0;
    parse_index(a);
    if (pos >= text.size() || text[pos] != '-') fail(ErrorKind::Parse, "expected '-' in edge list \"" + text + "\"");
    ++pos;
    parse_index(b);
    if (!g.add_edge(a, b)) fail(ErrorKind::Usage, "duplicate edge in edge list \"" + text + "\"");
    if (pos < text.size()) {
      if (text[pos] != ',') fail(ErrorKind::Parse, "expected ',' in edge list \"" + text + "\"");
      ++pos;
    }
  }
  return g;
}

namespace {

void extend_matching(std::vector<bool>& used, std::vector<Edge>& current, std::vector<GeoGraph>& out) {
  const std::size_t m = used.size();
  const auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    out.emplace_back(m, current);
    return;
  }
  const auto a = static_cast<std::size_t>(first - used.begin());
  used[a] = true;
  for (std::size_t b = a + 1; b < m; ++b) {
    if (used[b]) continue;
    used[b] = true;
    current.emplace_back(a, b);
    extend_matching(used, current, out);
    current.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

std::vector<GeoGraph> all_perfect_matchings(std::size_t m) {
  if (m == 0 || m % 2 != 0) fail(ErrorKind::Usage, "perfect matchings need an even, nonzero vertex count");
  std::vector<bool> used(m, false);
  std::vector<Edge> current;
  std::vector<GeoGraph> out;
  extend_matching(used, current, out);
  return out;
}

std::vector<GeoGraph> all_hamiltonian_cycles(std::size_t m) {
  if (m < 3) fail(ErrorKind::Usage, "Hamiltonian cycles need at least 3 vertices");
  std::vector<std::size_t> rest(m - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  std::vector<GeoGraph> out;
  std::vector<std::size_t> order(m);
  do {
    if (rest.front() > rest.back()) continue;
    order[0] = 0;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    out.push_back(cycle_from_order(m, order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<GeoGraph> all_hamiltonian_paths(std::size_t m) {
  if (m < 2) fail(ErrorKind::Usage, "Hamiltonian paths need at least 2 vertices");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<GeoGraph> out;
  do {
    if (order.front() > order.back()) continue;
    out.push_back(path_from_order(m, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace tverberg
