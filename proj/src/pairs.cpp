#include "listcolor/pairs.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "listcolor/errors.hpp"

namespace listcolor {

namespace {

void require_two_lists(const ListAssignment& lists) {
  if (lists.k() != 2) throw InvalidParameters("ordered-sequence machinery needs 2-list assignments");
}

Color other_color(const ListAssignment& lists, Vertex v, Color c) {
  auto l = lists.list(v);
  return l[0] == c ? l[1] : l[0];
}

Vertex target_of(const OrderedSeq& seq) { return seq.path[seq.close_to]; }

}  // namespace

bool is_ordered_seq(const Graph& g, const OrderedSeq& seq) {
  const int d = static_cast<int>(seq.path.size());
  if (seq.kind == SeqKind::Cycle) {
    if (d < 3 || seq.close_to != 0) return false;
  } else if (d < 4 || seq.close_to < 1 || seq.close_to > d - 3) {
    return false;
  }
  std::set<Vertex> seen;
  for (int i = 0; i < d; ++i) {
    Vertex v = seq.path[i];
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
    if (i > 0 && !g.adjacent(seq.path[i - 1], v)) return false;
  }
  return g.adjacent(seq.path.back(), target_of(seq));
}

std::optional<std::vector<Color>> alternating_chain(const OrderedSeq& seq, const ListAssignment& lists,
                                                    Color first) {
  require_two_lists(lists);
  const int d = static_cast<int>(seq.path.size());
  if (d < 3 || !lists.contains(seq.path[0], first)) return std::nullopt;
  std::vector<Color> chain{first};
  for (int i = 1; i + 1 < d; ++i) {
    Vertex v = seq.path[i];
    if (!lists.contains(v, chain.back())) return std::nullopt;
    chain.push_back(other_color(lists, v, chain.back()));
  }
  Vertex last = seq.path.back();
  Color closing = chain[seq.close_to];
  if (!lists.contains(last, chain.back()) || other_color(lists, last, chain.back()) != closing) return std::nullopt;
  return chain;
}

AlternatingCheck is_L_alternating(const Graph& g, const OrderedSeq& seq, const ListAssignment& lists) {
  require_two_lists(lists);
  if (!is_ordered_seq(g, seq)) return {};
  for (Color c : lists.list(seq.first()))
    if (auto chain = alternating_chain(seq, lists, c)) return {true, std::move(*chain)};
  return {};
}

bool is_2bad_pair(const Graph& g, const ListAssignment& lists, const ProperPair& pair) {
  require_two_lists(lists);
  if (!is_ordered_seq(g, pair.h1) || !is_ordered_seq(g, pair.h2)) return false;
  const Vertex v = pair.h1.first();
  if (pair.h2.first() != v || pair.c1 == pair.c2) return false;
  if (!lists.contains(v, pair.c1) || !lists.contains(v, pair.c2)) return false;
  if (pair.h1.second() == pair.h2.second()) return false;
  return alternating_chain(pair.h1, lists, pair.c1) && alternating_chain(pair.h2, lists, pair.c2);
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const Graph& g, const ListAssignment& lists) : g_(g), lists_(lists), on_path_(g.order(), 0) {}

  // First alternating sequence starting v, second, with the given first colour.
  std::optional<OrderedSeq> find(Vertex v, Vertex second, Color first) {
    if (!lists_.contains(second, first)) return std::nullopt;
    path_ = {v, second};
    chain_ = {first};
    on_path_[v] = on_path_[second] = 1;
    std::optional<OrderedSeq> found;
    dfs(found);
    on_path_[v] = on_path_[second] = 0;
    for (Vertex x : path_) on_path_[x] = 0;
    return found;
  }

 private:
  // path_ = v1..vd, chain_ = c1..c_{d-1}, c_{d-1} in L(vd).
  void dfs(std::optional<OrderedSeq>& found) {
    if (++expansions_ > kMaxPairExpansions) throw GuardExceeded("2-bad pair search exceeds expansion guard");
    const int d = static_cast<int>(path_.size());
    const Vertex last = path_.back();
    const Color out = other_color(lists_, last, chain_.back());
    if (d >= 3 && out == chain_[0] && g_.adjacent(last, path_[0])) {
      found = OrderedSeq{SeqKind::Cycle, path_, 0};
      return;
    }
    for (int j = 1; j <= d - 3; ++j) {
      if (out == chain_[j] && g_.adjacent(last, path_[j])) {
        found = OrderedSeq{SeqKind::Lollipop, path_, j};
        return;
      }
    }
    for (Vertex x : g_.neighbors(last)) {
      if (on_path_[x] || !lists_.contains(x, out)) continue;
      path_.push_back(x);
      chain_.push_back(out);
      on_path_[x] = 1;
      dfs(found);
      on_path_[x] = 0;
      path_.pop_back();
      chain_.pop_back();
      if (found) return;
    }
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<Color> chain_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

std::optional<ProperPair> find_2bad_pair(const Graph& g, const ListAssignment& lists) {
  require_two_lists(lists);
  ChainSearch search(g, lists);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Color a = lists.list(v)[0];
    const Color b = lists.list(v)[1];
    std::vector<std::pair<Vertex, OrderedSeq>> with_a, with_b;
    for (Vertex s : g.neighbors(v)) {
      if (auto seq = search.find(v, s, a)) with_a.emplace_back(s, std::move(*seq));
      if (auto seq = search.find(v, s, b)) with_b.emplace_back(s, std::move(*seq));
    }
    for (const auto& [s1, h1] : with_a)
      for (const auto& [s2, h2] : with_b)
        if (s1 != s2) return ProperPair{h1, h2, a, b};
  }
  return std::nullopt;
}

int count_nonconsecutive(const ProperPair& pair) {
  const auto& p1 = pair.h1.path;
  const auto& p2 = pair.h2.path;
  std::set<std::pair<Vertex, Vertex>> edges1;
  auto add = [&](Vertex a, Vertex b) { edges1.insert({std::min(a, b), std::max(a, b)}); };
  for (std::size_t i = 1; i < p1.size(); ++i) add(p1[i - 1], p1[i]);
  add(p1.back(), p1[pair.h1.close_to]);
  std::set<Vertex> in1(p1.begin(), p1.end());
  int r = 0;
  for (std::size_t i = 1; i < p2.size(); ++i) {
    Vertex x = p2[i];
    if (x == pair.h2.first() || !in1.count(x)) continue;
    Vertex u = p2[i - 1];
    if (!edges1.count({std::min(u, x), std::max(u, x)})) ++r;
  }
  return r;
}

VertexSet pair_vertices(const ProperPair& pair) {
  std::vector<Vertex> ids(pair.h1.path);
  ids.insert(ids.end(), pair.h2.path.begin(), pair.h2.path.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return VertexSet(std::move(ids));
}

}  // namespace listcolor
