#include "listcolor/trees.hpp"

#include <algorithm>
#include <set>

#include "listcolor/errors.hpp"

namespace listcolor {

std::uint64_t Q(int k, int g) {
  if (k < 2) throw InvalidParameters("Q needs k >= 2");
  if (g < 3 || (g % 2 == 0 && g < 4)) throw InvalidParameters("Q needs g >= 3");
  const int terms = g % 2 ? (g - 3) / 2 + 1 : (g - 2) / 2 + 1;
  std::uint64_t sum = 0, power = 1;
  for (int i = 0; i < terms; ++i) {
    if (__builtin_add_overflow(sum, power, &sum)) throw InvalidParameters("Q overflows 64 bits");
    if (i + 1 < terms && __builtin_mul_overflow(power, static_cast<std::uint64_t>(k - 1), &power))
      throw InvalidParameters("Q overflows 64 bits");
  }
  std::uint64_t out = 0;
  if (g % 2) {
    if (__builtin_mul_overflow(sum, static_cast<std::uint64_t>(k), &out) || out == UINT64_MAX)
      throw InvalidParameters("Q overflows 64 bits");
    return out + 1;
  }
  if (__builtin_mul_overflow(sum, std::uint64_t{2}, &out)) throw InvalidParameters("Q overflows 64 bits");
  return out;
}

namespace {

struct Shape {
  int g = 0;
  int k = 0;
  bool odd() const { return g % 2 == 1; }
  int leaf_depth() const { return odd() ? (g - 1) / 2 : (g - 2) / 2; }
  int children(int depth) const {
    if (depth >= leaf_depth()) return 0;
    return depth == 0 && odd() ? k : k - 1;
  }
  bool conditioned(int depth, bool semiroot_side) const {
    if (odd()) return depth >= 1 && depth <= (g - 3) / 2;
    if (!semiroot_side) return depth >= 1 && depth <= (g - 4) / 2;
    return g >= 6 && depth <= (g - 4) / 2;
  }
};

Shape shape_of(const RootedProperTree& t) { return {t.girth, t.k}; }

}  // namespace

std::optional<Vertex> RootedProperTree::semiroot() const {
  if (parity == TreeParity::Even && nodes.size() > 1) return nodes[1].vertex;
  return std::nullopt;
}

VertexSet RootedProperTree::vertex_set() const {
  std::vector<Vertex> ids;
  for (const auto& n : nodes) ids.push_back(n.vertex);
  return VertexSet::from_unsorted(std::move(ids));
}

bool is_rooted_proper_tree(const Graph& g, const RootedProperTree& t) {
  if (t.k < 2 || t.girth < 3 || t.nodes.empty()) return false;
  auto actual = girth(g);
  if (!actual || *actual != t.girth) return false;
  const Shape s = shape_of(t);
  if ((t.parity == TreeParity::Odd) != s.odd()) return false;
  std::set<Vertex> seen;
  std::vector<int> child_count(t.nodes.size(), 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (n.vertex < 0 || n.vertex >= g.order() || !seen.insert(n.vertex).second) return false;
    if (i == 0) {
      if (n.parent != -1 || n.depth != 0 || n.semiroot_side) return false;
      continue;
    }
    if (n.parent < 0 || n.parent >= static_cast<int>(i)) return false;
    const auto& p = t.nodes[n.parent];
    if (!g.adjacent(p.vertex, n.vertex)) return false;
    if (!s.odd() && i == 1) {
      if (n.parent != 0 || n.depth != 0 || !n.semiroot_side) return false;
      continue;
    }
    if (n.depth != p.depth + 1 || n.semiroot_side != p.semiroot_side) return false;
    ++child_count[n.parent];
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (child_count[i] != s.children(t.nodes[i].depth)) return false;
  return t.nodes.size() == Q(t.k, t.girth);
}

void build_proper_trees(const Graph& g, int k, Vertex v, const std::function<void(const RootedProperTree&)>& visit) {
  if (k < 2) throw InvalidParameters("rooted proper trees need k >= 2");
  if (v < 0 || v >= g.order()) throw InvalidParameters("root out of range");
  auto gg = girth(g);
  if (!gg) return;
  const Shape s{*gg, k};
  RootedProperTree tree;
  tree.parity = s.odd() ? TreeParity::Odd : TreeParity::Even;
  tree.girth = *gg;
  tree.k = k;
  std::vector<char> used(g.order(), 0);
  std::uint64_t emitted = 0;

  std::function<void(std::size_t)> expand = [&](std::size_t i) {
    if (i == tree.nodes.size()) {
      if (++emitted > kMaxTrees) throw GuardExceeded("tree enumeration exceeds guard");
      visit(tree);
      return;
    }
    const TreeNode node = tree.nodes[i];
    const int need = s.children(node.depth);
    if (need == 0) return expand(i + 1);
    std::vector<Vertex> cand;
    for (Vertex y : g.neighbors(node.vertex))
      if (!used[y]) cand.push_back(y);
    std::vector<Vertex> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (static_cast<int>(pick.size()) == need) {
        for (Vertex y : pick) {
          tree.nodes.push_back({y, static_cast<int>(i), node.depth + 1, node.semiroot_side});
          used[y] = 1;
        }
        expand(i + 1);
        for (Vertex y : pick) {
          used[y] = 0;
          tree.nodes.pop_back();
        }
        return;
      }
      for (std::size_t j = start; j < cand.size(); ++j) {
        if (used[cand[j]]) continue;
        pick.push_back(cand[j]);
        choose(j + 1);
        pick.pop_back();
      }
    };
    choose(0);
  };

  used[v] = 1;
  if (s.odd()) {
    tree.nodes = {{v, -1, 0, false}};
    expand(0);
    return;
  }
  for (Vertex u : g.neighbors(v)) {
    tree.nodes = {{v, -1, 0, false}, {u, 0, 0, true}};
    used[u] = 1;
    expand(0);
    used[u] = 0;
  }
}

TreeCheck check_tree_bad(const Graph& g, const ListAssignment& lists, const RootedProperTree& tree) {
  if (!is_rooted_proper_tree(g, tree) || lists.k() != tree.k)
    throw ContractViolation("not a rooted proper tree for these lists");
  const Shape s = shape_of(tree);
  const auto& nodes = tree.nodes;
  const std::size_t n = nodes.size();
  std::vector<std::vector<int>> kids(n);
  for (std::size_t i = 1; i < n; ++i) kids[nodes[i].parent].push_back(static_cast<int>(i));
  auto cond = [&](int i) { return i != 0 && s.conditioned(nodes[i].depth, nodes[i].semiroot_side); };
  std::vector<Color> phi(n, kUncolored);

  auto satisfied = [&] {
    auto colors_of = [&](int i) {
      std::set<Color> out;
      for (int c : kids[i]) out.insert(phi[c]);
      return out;
    };
    auto root_list = lists.list(nodes[0].vertex);
    if (colors_of(0) != std::set<Color>(root_list.begin(), root_list.end())) return false;
    for (std::size_t i = 1; i < n; ++i) {
      if (!cond(static_cast<int>(i))) continue;
      std::set<Color> rest;
      for (Color c : lists.list(nodes[i].vertex))
        if (c != phi[i]) rest.insert(c);
      if (colors_of(static_cast<int>(i)) != rest) return false;
    }
    return true;
  };

  TreeCheck result;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return satisfied();
    const int p = nodes[i].parent;
    for (Color c : lists.list(nodes[i].vertex)) {
      if (p != 0 && c == phi[p]) continue;
      if (p == 0 && !lists.contains(nodes[0].vertex, c)) continue;
      if (cond(p) && !lists.contains(nodes[p].vertex, c)) continue;
      if (p == 0 || cond(p)) {
        bool repeat = false;
        for (int sib : kids[p])
          if (sib < static_cast<int>(i) && phi[sib] == c) repeat = true;
        if (repeat) continue;
      }
      phi[i] = c;
      if (rec(i + 1)) return true;
    }
    phi[i] = kUncolored;
    return false;
  };
  if (rec(1)) {
    result.bad = true;
    result.witness.assign(g.order(), kUncolored);
    for (std::size_t i = 1; i < n; ++i) result.witness[nodes[i].vertex] = phi[i];
  }
  return result;
}

namespace {

// Maximum matching of colours onto candidate vertices; match[c] is a
// candidate index or -1.
std::vector<int> match_colors(const std::vector<std::vector<char>>& ok, std::size_t cand_count) {
  std::vector<int> of_color(ok.size(), -1), of_cand(cand_count, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t c, std::vector<char>& seen) {
    for (std::size_t y = 0; y < cand_count; ++y) {
      if (!ok[c][y] || seen[y]) continue;
      seen[y] = 1;
      if (of_cand[y] < 0 || augment(of_cand[y], seen)) {
        of_cand[y] = static_cast<int>(c);
        of_color[c] = static_cast<int>(y);
        return true;
      }
    }
    return false;
  };
  for (std::size_t c = 0; c < ok.size(); ++c) {
    std::vector<char> seen(cand_count, 0);
    augment(c, seen);
  }
  return of_color;
}

class TreeSearch {
 public:
  using Kids = std::vector<std::pair<Vertex, Color>>;

  TreeSearch(const Graph& g, const ListAssignment& lists, Shape shape) : g_(g), lists_(lists), s_(shape) {}

  std::optional<TreeBad> odd_root(Vertex v) {
    auto l = lists_.list(v);
    auto kids = match(v, -1, -1, 0, false, {l.begin(), l.end()});
    if (!kids) return std::nullopt;
    start(v);
    attach(v, 0, 0, false, *kids);
    return finish(TreeParity::Odd);
  }

  std::optional<TreeBad> even_root(Vertex v, Vertex u) {
    for (Color cu : lists_.list(u)) {
      if (!lists_.contains(v, cu) || !feasible(u, v, 0, true, cu)) continue;
      std::vector<Color> need;
      for (Color c : lists_.list(v))
        if (c != cu) need.push_back(c);
      auto kids = match(v, -1, u, 0, false, need);
      if (!kids) continue;
      start(v);
      nodes_.push_back({u, 0, 0, true});
      phi_[u] = cu;
      attach(v, 0, 0, false, *kids);
      grow(u, v, 0, true, cu, 1);
      return finish(TreeParity::Even);
    }
    return std::nullopt;
  }

 private:
  std::vector<Vertex> candidates(Vertex x, Vertex from, Vertex exclude) const {
    std::vector<Vertex> out;
    for (Vertex y : g_.neighbors(x))
      if (y != from && y != exclude) out.push_back(y);
    return out;
  }

  // Children of x taking exactly the colours `need`, one each.
  std::optional<Kids> match(Vertex x, Vertex from, Vertex exclude, int depth, bool side,
                            const std::vector<Color>& need) {
    auto cand = candidates(x, from, exclude);
    std::vector<std::vector<char>> ok(need.size(), std::vector<char>(cand.size(), 0));
    for (std::size_t c = 0; c < need.size(); ++c)
      for (std::size_t y = 0; y < cand.size(); ++y)
        ok[c][y] = lists_.contains(cand[y], need[c]) && feasible(cand[y], x, depth + 1, side, need[c]);
    auto m = match_colors(ok, cand.size());
    Kids kids;
    for (std::size_t c = 0; c < need.size(); ++c) {
      if (m[c] < 0) return std::nullopt;
      kids.emplace_back(cand[m[c]], need[c]);
    }
    return kids;
  }

  // First k-1 children, each with some feasible colour other than c.
  std::optional<Kids> free_children(Vertex x, Vertex from, int depth, bool side, Color c) {
    Kids kids;
    for (Vertex y : candidates(x, from, from)) {
      if (static_cast<int>(kids.size()) == s_.k - 1) break;
      for (Color d : lists_.list(y)) {
        if (d == c || !feasible(y, x, depth + 1, side, d)) continue;
        kids.emplace_back(y, d);
        break;
      }
    }
    if (static_cast<int>(kids.size()) < s_.k - 1) return std::nullopt;
    return kids;
  }

  std::optional<Kids> kids_of(Vertex x, Vertex from, int depth, bool side, Color c) {
    if (!s_.conditioned(depth, side)) return free_children(x, from, depth, side, c);
    std::vector<Color> need;
    for (Color d : lists_.list(x))
      if (d != c) need.push_back(d);
    return match(x, from, from, depth, side, need);
  }

  bool feasible(Vertex x, Vertex from, int depth, bool side, Color c) {
    return depth >= s_.leaf_depth() || kids_of(x, from, depth, side, c).has_value();
  }

  void start(Vertex v) {
    phi_.assign(g_.order(), kUncolored);
    nodes_ = {{v, -1, 0, false}};
  }

  void attach(Vertex x, int me, int depth, bool side, const Kids& kids) {
    const std::size_t first = nodes_.size();
    for (auto [y, d] : kids) {
      nodes_.push_back({y, me, depth + 1, side});
      phi_[y] = d;
    }
    for (std::size_t i = 0; i < kids.size(); ++i)
      grow(kids[i].first, x, depth + 1, side, kids[i].second, static_cast<int>(first + i));
  }

  void grow(Vertex x, Vertex from, int depth, bool side, Color c, int me) {
    if (depth >= s_.leaf_depth()) return;
    attach(x, me, depth, side, *kids_of(x, from, depth, side, c));
  }

  TreeBad finish(TreeParity parity) { return {RootedProperTree{parity, s_.g, s_.k, nodes_}, phi_}; }

  const Graph& g_;
  const ListAssignment& lists_;
  Shape s_;
  Coloring phi_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

std::optional<TreeBad> find_tree_bad(const Graph& g, const ListAssignment& lists) {
  if (lists.k() < 2) throw InvalidParameters("tree-bad search needs k >= 2");
  auto gg = girth(g);
  if (!gg) return std::nullopt;
  Q(lists.k(), *gg);  // overflow check
  TreeSearch search(g, lists, Shape{*gg, lists.k()});
  for (Vertex v = 0; v < g.order(); ++v) {
    if (*gg % 2) {
      if (auto t = search.odd_root(v)) return t;
      continue;
    }
    for (Vertex u : g.neighbors(v))
      if (auto t = search.even_root(v, u)) return t;
  }
  return std::nullopt;
}

}  // namespace listcolor
