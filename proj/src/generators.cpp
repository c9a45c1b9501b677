#include <numeric>

#include "listcolor/errors.hpp"
#include "listcolor/graph.hpp"

namespace listcolor {

Graph power_cycle(int n, int r) {
  if (n < 3) throw InvalidParameters("power_cycle needs n >= 3");
  if (r < 1 || 2 * r >= n) throw InvalidParameters("power_cycle needs 1 <= r < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= r; ++d) {
      int j = (i + d) % n;
      edges.push_back({std::min(i, j), std::max(i, j)});
    }
  return Graph(n, std::move(edges));
}

Graph clique_union(int n, int delta) {
  if (delta < 1 || delta + 1 > n) throw InvalidParameters("clique_union needs n >= delta+1 >= 2");
  const int block = delta + 1;
  std::vector<Edge> edges;
  for (int b = 0; b + block <= n; b += block)
    for (int i = b; i < b + block; ++i)
      for (int j = i + 1; j < b + block; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.size() < 2) throw InvalidParameters("complete_multipartite needs at least 2 parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw InvalidParameters("every part needs at least one vertex");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_graph(int n) {
  if (n < 1) throw InvalidParameters("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameters("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidParameters("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace listcolor
