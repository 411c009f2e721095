#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tverberg {

/// Undirected edge stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over point indices 0..n-1. No self-loops, no
/// duplicate edges.
class GeoGraph {
 public:
  GeoGraph() = default;
  explicit GeoGraph(std::size_t n_vertices) : n_(n_vertices) {}
  /// Throws Usage on self-loops, duplicates or out-of-range indices.
  GeoGraph(std::size_t n_vertices, std::span<const Edge> edges);

  /// Returns false (and leaves the graph unchanged) for a duplicate edge.
  bool add_edge(std::size_t a, std::size_t b);
  void remove_vertex_edges(std::size_t v);

  [[nodiscard]] std::size_t vertex_count() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t degree(std::size_t v) const;
  [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t v) const;
  [[nodiscard]] std::size_t min_degree() const;

  /// Sorted edge list; equal across graphs with the same edge set.
  [[nodiscard]] std::vector<Edge> canonical_edges() const;
  [[nodiscard]] bool same_edges(const GeoGraph& other) const;

  /// Graph on the same vertices with `keep` edges only.
  [[nodiscard]] GeoGraph subgraph(std::span<const Edge> keep) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Cycle visiting order[0], order[1], ..., back to order[0].
GeoGraph cycle_from_order(std::size_t n_vertices, std::span<const std::size_t> order);
GeoGraph path_from_order(std::size_t n_vertices, std::span<const std::size_t> order);

[[nodiscard]] bool is_connected(const GeoGraph& g);
[[nodiscard]] bool is_hamiltonian_cycle(const GeoGraph& g);
[[nodiscard]] bool is_hamiltonian_path(const GeoGraph& g);
[[nodiscard]] bool is_perfect_matching(const GeoGraph& g);

/// Vertex order of a Hamiltonian cycle starting at vertex 0, or of a
/// Hamiltonian path starting at its smaller endpoint. Empty when g is neither.
std::vector<std::size_t> traversal_order(const GeoGraph& g);

/// "0-1,1-2,2-0" format.
std::string format_edge_list(const GeoGraph& g);
/// Throws Parse on malformed input and Usage on invalid edges.
GeoGraph parse_edge_list(std::size_t n_vertices, const std::string& text);

/// All perfect matchings of K_m, m even; (m-1)!! graphs.
std::vector<GeoGraph> all_perfect_matchings(std::size_t m);

/// Every Hamiltonian cycle on m >= 3 vertices, once each: (m-1)!/2 graphs.
std::vector<GeoGraph> all_hamiltonian_cycles(std::size_t m);

/// Every Hamiltonian path on m >= 2 vertices, once each: m!/2 graphs.
std::vector<GeoGraph> all_hamiltonian_paths(std::size_t m);

}  // namespace tverberg
