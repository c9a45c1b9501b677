#include "listcolor/solver.hpp"

#include <algorithm>
#include <bit>

#include "listcolor/errors.hpp"

namespace listcolor {

namespace {

class Search {
 public:
  enum class Outcome { Sat, Unsat, UnsatFinal, Aborted };

  Search(const Graph& g, const ListAssignment& lists, const SolveLimits& limits, SolveStats& stats)
      : g_(g), lists_(lists), limits_(limits), stats_(stats), color_(g.order(), kUncolored) {
    if (lists.k() > 64) throw InvalidParameters("solver supports list sizes up to 64");
    if (lists.order() != g.order()) throw ContractViolation("list assignment does not cover the graph");
    full_ = lists.k() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lists.k()) - 1;
    live_.assign(g.order(), full_);
  }

  Outcome run_component(std::vector<Vertex> comp) {
    comp_ = std::move(comp);
    for (Vertex v : comp_)
      if (std::popcount(live_[v]) == 1) queue_.push_back(v);
    if (!propagate()) return Outcome::Unsat;
    return dfs();
  }

  Coloring& coloring() { return color_; }

 private:
  bool assign(Vertex v, int pos) {
    const Color c = lists_.list(v)[pos];
    color_[v] = c;
    assigned_.push_back(v);
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] != kUncolored) continue;
      int p = lists_.position(w, c);
      if (p < 0 || !(live_[w] >> p & 1)) continue;
      trail_.emplace_back(w, live_[w]);
      live_[w] &= ~(std::uint64_t{1} << p);
      if (live_[w] == 0) return false;
      if (std::popcount(live_[w]) == 1) queue_.push_back(w);
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Vertex w = queue_.back();
      queue_.pop_back();
      if (color_[w] != kUncolored) continue;
      if (live_[w] == 0) return false;
      ++stats_.propagations;
      if (!assign(w, std::countr_zero(live_[w]))) return false;
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t assigned_mark) {
    while (trail_.size() > trail_mark) {
      live_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    while (assigned_.size() > assigned_mark) {
      color_[assigned_.back()] = kUncolored;
      assigned_.pop_back();
    }
    queue_.clear();
  }

  bool out_of_budget() {
    if (limits_.node_limit && stats_.nodes > limits_.node_limit) return true;
    if (limits_.deadline && (stats_.nodes & 1023) == 0 && std::chrono::steady_clock::now() > *limits_.deadline)
      return true;
    return false;
  }

  Outcome dfs() {
    ++stats_.nodes;
    if (out_of_budget()) return Outcome::Aborted;
    Vertex pick = -1;
    int best = 65;
    bool independent = true;
    for (Vertex v : comp_) {
      if (color_[v] != kUncolored) continue;
      int live = std::popcount(live_[v]);
      if (live_[v] != full_) independent = false;
      if (live < best) {
        best = live;
        pick = v;
      }
    }
    if (pick < 0) return Outcome::Sat;
    const std::uint64_t options = live_[pick];
    for (int p = 0; p < lists_.k(); ++p) {
      if (!(options >> p & 1)) continue;
      const auto tm = trail_.size();
      const auto am = assigned_.size();
      if (assign(pick, p) && propagate()) {
        Outcome r = dfs();
        if (r == Outcome::Sat || r == Outcome::Aborted) return r;
        if (r == Outcome::UnsatFinal) {
          undo(tm, am);
          return r;
        }
      }
      undo(tm, am);
    }
    return independent ? Outcome::UnsatFinal : Outcome::Unsat;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  const SolveLimits& limits_;
  SolveStats& stats_;
  Coloring color_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> live_;
  std::vector<std::pair<Vertex, std::uint64_t>> trail_;
  std::vector<Vertex> assigned_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> comp_;
};

// First uncolourable component of G[S], as host ids.
std::optional<VertexSet> uncolorable_component(const Graph& g, const ListAssignment& lists, const VertexSet& s) {
  auto sub = induced_subgraph(g, s);
  auto comp = connected_components(sub.graph);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> groups(count);
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) groups[comp[i]].push_back(sub.to_host[i]);
  for (auto& group : groups) {
    VertexSet vs(std::move(group));
    auto part = induced_subgraph(g, vs);
    if (!is_colorable(part.graph, lists.restricted(part.to_host))) return vs;
  }
  return std::nullopt;
}

}  // namespace

SolveResult solve(const Graph& g, const ListAssignment& lists, const SolveLimits& limits) {
  SolveResult result;
  Search search(g, lists, limits, result.stats);
  auto comp = connected_components(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> groups(count);
  for (Vertex v = 0; v < g.order(); ++v) groups[comp[v]].push_back(v);
  for (auto& group : groups) {
    auto outcome = search.run_component(std::move(group));
    if (outcome == Search::Outcome::Aborted) {
      result.status = SolveStatus::Aborted;
      return result;
    }
    if (outcome != Search::Outcome::Sat) {
      result.status = SolveStatus::Uncolorable;
      return result;
    }
  }
  result.status = SolveStatus::Colorable;
  result.coloring = std::move(search.coloring());
  return result;
}

bool is_colorable(const Graph& g, const ListAssignment& lists) { return solve(g, lists).colorable(); }

bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!lists.contains(v, phi[v])) return false;
  for (const auto& e : g.edges())
    if (phi[e.u] == phi[e.v]) return false;
  return true;
}

bool verify_coloring_except(const Graph& g, const ListAssignment& lists, const Coloring& phi, Vertex skip) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != skip && !lists.contains(v, phi[v])) return false;
  for (const auto& e : g.edges())
    if (e.u != skip && e.v != skip && phi[e.u] == phi[e.v]) return false;
  return true;
}

CriticalSubgraph extract_critical(const Graph& g, const ListAssignment& lists) {
  auto start = uncolorable_component(g, lists, VertexSet::all(g.order()));
  if (!start) throw ContractViolation("extract_critical called on an L-colourable instance");
  VertexSet current = *start;
  const std::vector<Vertex> candidates = current.ids();
  for (Vertex v : candidates) {
    if (!current.contains(v)) continue;
    if (auto smaller = uncolorable_component(g, lists, current.without(v))) current = *smaller;
  }
  auto sub = induced_subgraph(g, current);
  return {std::move(current), std::move(sub.graph)};
}

bool is_critical(const Graph& f, const ListAssignment& lists) {
  if (is_colorable(f, lists)) return false;
  for (Vertex v = 0; v < f.order(); ++v) {
    auto rest = induced_subgraph(f, VertexSet::all(f.order()).without(v));
    if (!is_colorable(rest.graph, lists.restricted(rest.to_host))) return false;
  }
  return true;
}

}  // namespace listcolor
