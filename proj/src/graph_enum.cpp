#include "listcolor/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "listcolor/errors.hpp"

namespace listcolor {

namespace {

int pair_index(int n, int p, int q) { return p * n - p * (p + 1) / 2 + (q - p - 1); }

// Iterated degree refinement; returns the colour class of every vertex with
// classes numbered in an isomorphism-invariant order.
std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InvalidParameters("canonical_code supports at most 11 vertices");
  auto color = refine(g);
  const int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<Vertex>> cells(classes);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

  // order[pos] = vertex placed at position pos
  std::vector<Vertex> order;
  for (auto& c : cells) order.insert(order.end(), c.begin(), c.end());
  std::vector<int> cell_start;
  {
    int s = 0;
    for (auto& c : cells) {
      cell_start.push_back(s);
      s += static_cast<int>(c.size());
    }
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&] {
    std::uint64_t code = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (g.adjacent(order[p], order[q])) code |= std::uint64_t{1} << (63 - pair_index(n, p, q));
    best = std::min(best, code);
  };
  // Odometer over the permutations of every cell.
  for (auto& c : cells) std::sort(c.begin(), c.end());
  auto recurse = [&](auto& self, int cell) -> void {
    if (cell == classes) {
      encode();
      return;
    }
    auto& c = cells[cell];
    std::sort(c.begin(), c.end());
    do {
      std::copy(c.begin(), c.end(), order.begin() + cell_start[cell]);
      self(self, cell + 1);
    } while (std::next_permutation(c.begin(), c.end()));
  };
  recurse(recurse, 0);
  return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (code & (std::uint64_t{1} << (63 - pair_index(n, p, q)))) edges.push_back({p, q});
  return Graph(n, std::move(edges));
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw InvalidParameters("connected_graphs supports 1 <= n <= 8");
  if (n == 1) return {Graph(1)};
  // Every connected graph has a non-cut vertex, so it arises from a connected
  // graph on n-1 vertices plus one vertex with a non-empty neighbourhood.
  std::unordered_set<std::uint64_t> seen;
  for (const Graph& base : connected_graphs(n - 1)) {
    const int m = n - 1;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int v = 0; v < m; ++v)
        if (mask & (1u << v)) edges.push_back({v, m});
      seen.insert(canonical_code(Graph(n, std::move(edges))));
    }
  }
  std::vector<std::uint64_t> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace listcolor
