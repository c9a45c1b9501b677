#include "listcolor/alternating.hpp"

#include <deque>

#include "listcolor/errors.hpp"

namespace listcolor {

std::vector<int> find_alternating_paths(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                                        Vertex origin) {
  if (origin < 0 || origin >= g.order()) throw ContractViolation("origin out of range");
  if (!verify_coloring_except(g, lists, phi, origin))
    throw ContractViolation("phi is not an L-coloring of g - origin");
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{origin};
  dist[origin] = 0;
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop_front();
    for (Vertex x : g.neighbors(w)) {
      if (dist[x] >= 0 || !lists.contains(w, phi[x])) continue;
      dist[x] = dist[w] + 1;
      queue.push_back(x);
    }
  }
  return dist;
}

std::vector<int> induced_rank(const Graph& g, const ListAssignment& lists, const Coloring& phi, Vertex origin) {
  auto dist = find_alternating_paths(g, lists, phi, origin);
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] < 0) throw NotACertificate("vertex " + std::to_string(v) + " is not alternately reachable");
  return dist;
}

bool is_alternating_path(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                         const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex w = path[i];
    if (w < 0 || w >= g.order() || seen[w]) return false;
    seen[w] = 1;
    if (i == 0) continue;
    if (!g.adjacent(path[i - 1], w)) return false;
    if (!lists.contains(path[i - 1], phi[w])) return false;
  }
  return true;
}

}  // namespace listcolor
