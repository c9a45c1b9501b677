#include "listcolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "listcolor/errors.hpp"

namespace listcolor {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidParameters("graph order must be non-negative");
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidParameters("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidParameters("edge endpoint out of range: " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidParameters("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  edges_ = std::move(edges);

  std::vector<std::size_t> deg(n + 1, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
    max_degree_ = std::max(max_degree_, degree(v));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet::VertexSet(std::vector<Vertex> sorted_ids) : ids_(std::move(sorted_ids)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw InvalidParameters("negative vertex id in vertex set");
    if (i > 0 && ids_[i - 1] >= ids_[i]) throw InvalidParameters("vertex set must be strictly increasing");
  }
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return VertexSet(std::move(ids));
}

VertexSet VertexSet::all(int n) {
  std::vector<Vertex> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::optional<int> VertexSet::index_of(Vertex v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

VertexSet VertexSet::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(ids_.size());
  for (Vertex x : ids_)
    if (x != v) out.push_back(x);
  return VertexSet(std::move(out));
}

std::optional<Vertex> InducedSubgraph::to_local(Vertex host) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
  if (it == to_host.end() || *it != host) return std::nullopt;
  return static_cast<Vertex>(it - to_host.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  const int m = static_cast<int>(vs.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) {
    if (vs[i] >= g.order()) throw InvalidParameters("vertex " + std::to_string(vs[i]) + " not in graph");
    local[vs[i]] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (Vertex w : g.neighbors(vs[i]))
      if (local[w] > i) edges.push_back({i, local[w]});
  return {Graph(m, std::move(edges)), vs.ids()};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    q = {};
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace listcolor
