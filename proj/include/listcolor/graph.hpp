#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace listcolor {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; the edge list is sorted
/// lexicographically. Construction rejects self-loops, duplicate edges and
/// out-of-range endpoints with InvalidParameters.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Sorted list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws InvalidParameters unless `sorted_ids` is strictly increasing and non-negative.
  explicit VertexSet(std::vector<Vertex> sorted_ids);
  static VertexSet from_unsorted(std::vector<Vertex> ids);
  static VertexSet all(int n);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  /// Position of `v` in the set, if present.
  std::optional<int> index_of(Vertex v) const;
  const std::vector<Vertex>& ids() const noexcept { return ids_; }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  VertexSet without(Vertex v) const;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

/// Induced subgraph with its relabeling: local vertex i is host vertex to_host[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  std::optional<Vertex> to_local(Vertex host) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Component id per vertex, ids assigned in order of smallest member.
std::vector<int> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Deterministic generators.
Graph power_cycle(int n, int r);
Graph clique_union(int n, int delta);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph complete_bipartite(int a, int b);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen();
Graph disjoint_union(const Graph& a, const Graph& b);

// Text format: "n=<count>" header, then one "<u> <v>" edge per line.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

}  // namespace listcolor
