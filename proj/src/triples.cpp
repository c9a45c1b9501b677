#include "listcolor/triples.hpp"

#include <algorithm>

#include "listcolor/alternating.hpp"
#include "listcolor/errors.hpp"

namespace listcolor {

namespace {

// Visits every L-coloring of f - skip until `visit` returns true.
bool for_each_coloring_except(const Graph& f, const ListAssignment& lists, Vertex skip,
                              const std::function<bool(const Coloring&)>& visit) {
  Coloring phi(f.order(), kUncolored);
  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    if (v == f.order()) return visit(phi);
    if (v == skip) return rec(v + 1);
    for (Color c : lists.list(v)) {
      bool clash = false;
      for (Vertex w : f.neighbors(v))
        if (w < v && w != skip && phi[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      phi[v] = c;
      if (rec(v + 1)) return true;
    }
    phi[v] = kUncolored;
    return false;
  };
  return rec(0);
}

// Ranks when phi satisfies conditions (i)-(iii) at root v1.
std::optional<std::vector<int>> qualifying_rank(const Graph& f, const ListAssignment& lists, const Coloring& phi,
                                                Vertex v1) {
  auto rank = find_alternating_paths(f, lists, phi, v1);
  if (std::find(rank.begin(), rank.end(), -1) != rank.end()) return std::nullopt;
  for (Color c : lists.list(v1)) {
    auto nb = f.neighbors(v1);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return phi[w] == c; })) return std::nullopt;
  }
  for (Vertex x = 0; x < f.order(); ++x) {
    if (x == v1) continue;
    for (Color c : lists.list(x)) {
      if (c == phi[x]) continue;
      bool ok = false;
      for (Vertex y : f.neighbors(x)) {
        if ((y != v1 && phi[y] == c) || (lists.contains(y, c) && rank[y] < rank[x])) {
          ok = true;
          break;
        }
      }
      if (!ok) return std::nullopt;
    }
  }
  return rank;
}

Coloring to_host_coloring(const Coloring& local, const std::vector<Vertex>& to_host, int n, Vertex skip) {
  Coloring out(n, kUncolored);
  for (std::size_t i = 0; i < local.size(); ++i)
    if (static_cast<Vertex>(i) != skip) out[to_host[i]] = local[i];
  return out;
}

}  // namespace

int ProperTriple::rank_of(Vertex v) const {
  auto idx = vertices.index_of(v);
  if (!idx) throw ContractViolation("vertex not in triple");
  return rank[*idx];
}

bool is_proper(const Graph& g, const ProperTriple& t) {
  const int m = static_cast<int>(t.vertices.size());
  if (m == 0 || static_cast<int>(t.rank.size()) != m) return false;
  if (t.vertices.ids().back() >= g.order()) return false;
  auto root = t.vertices.index_of(t.root);
  if (!root || t.rank[*root] != 0) return false;
  for (int i = 0; i < m; ++i) {
    const int s = t.rank[i];
    if (i == *root) continue;
    if (s <= 0 || s >= m) return false;
    bool ladder = false;
    for (Vertex x : g.neighbors(t.vertices[i])) {
      auto j = t.vertices.index_of(x);
      if (j && t.rank[*j] == s - 1) {
        ladder = true;
        break;
      }
    }
    if (!ladder) return false;
  }
  return true;
}

TripleCheck check_bad_triple(const Graph& g, const ListAssignment& lists, const ProperTriple& triple) {
  if (!is_proper(g, triple)) throw ContractViolation("triple is not proper");
  if (static_cast<int>(triple.order()) > kMaxTripleOrder)
    throw GuardExceeded("triple has more than " + std::to_string(kMaxTripleOrder) + " vertices");
  auto sub = induced_subgraph(g, triple.vertices);
  auto local = lists.restricted(sub.to_host);
  TripleCheck result;
  if (is_colorable(sub.graph, local)) return result;
  const Vertex v1 = *triple.vertices.index_of(triple.root);
  for_each_coloring_except(sub.graph, local, v1, [&](const Coloring& phi) {
    auto rank = qualifying_rank(sub.graph, local, phi, v1);
    if (!rank || *rank != triple.rank) return false;
    result.bad = true;
    result.witness = to_host_coloring(phi, sub.to_host, g.order(), v1);
    return true;
  });
  return result;
}

void enumerate_proper_triples(const Graph& g, int max_m, const std::function<void(const ProperTriple&)>& visit) {
  if (max_m < 1) return;
  std::uint64_t emitted = 0;
  std::vector<Vertex> members;
  std::vector<int> ranks;
  std::vector<char> used(g.order(), 0);
  Vertex root = 0;

  auto emit = [&] {
    if (++emitted > kMaxEnumeratedTriples) throw GuardExceeded("proper triple enumeration exceeds guard");
    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return members[a] < members[b]; });
    ProperTriple t;
    std::vector<Vertex> ids;
    for (auto i : order) {
      ids.push_back(members[i]);
      t.rank.push_back(ranks[i]);
    }
    t.vertices = VertexSet(std::move(ids));
    t.root = root;
    visit(t);
  };

  // Members [level_begin, end) form the deepest level.
  std::function<void(std::size_t)> extend = [&](std::size_t level_begin) {
    emit();
    const int room = max_m - static_cast<int>(members.size());
    if (room == 0) return;
    const std::size_t level_end = members.size();
    const int next_rank = ranks[level_begin] + 1;
    std::vector<Vertex> cand;
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Vertex x : g.neighbors(members[i]))
        if (!used[x]) cand.push_back(x);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      for (std::size_t i = start; i < cand.size(); ++i) {
        members.push_back(cand[i]);
        ranks.push_back(next_rank);
        used[cand[i]] = 1;
        extend(level_end);
        if (static_cast<int>(members.size() - level_end) < room) choose(i + 1);
        used[cand[i]] = 0;
        members.pop_back();
        ranks.pop_back();
      }
    };
    choose(0);
  };

  for (root = 0; root < g.order(); ++root) {
    members = {root};
    ranks = {0};
    used[root] = 1;
    extend(0);
    used[root] = 0;
  }
}

std::vector<std::uint64_t> count_proper_triples(const Graph& g, int max_m) {
  std::vector<std::uint64_t> counts(std::max(max_m, 0) + 1, 0);
  enumerate_proper_triples(g, max_m, [&](const ProperTriple& t) { ++counts[t.order()]; });
  return counts;
}

std::optional<BadTriple> find_bad_triple(const Graph& g, const ListAssignment& lists) {
  if (is_colorable(g, lists)) return std::nullopt;
  auto crit = extract_critical(g, lists);
  if (static_cast<int>(crit.vertices.size()) > kMaxTripleOrder)
    throw GuardExceeded("critical subgraph has more than " + std::to_string(kMaxTripleOrder) + " vertices");
  auto local = lists.restricted(crit.vertices.ids());
  for (Vertex v1 = 0; v1 < crit.graph.order(); ++v1) {
    std::optional<BadTriple> found;
    for_each_coloring_except(crit.graph, local, v1, [&](const Coloring& phi) {
      auto rank = qualifying_rank(crit.graph, local, phi, v1);
      if (!rank) return false;
      found = BadTriple{ProperTriple{crit.vertices, crit.vertices[v1], std::move(*rank)},
                        to_host_coloring(phi, crit.vertices.ids(), g.order(), v1)};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace listcolor
