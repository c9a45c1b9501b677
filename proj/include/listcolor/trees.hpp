#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/solver.hpp"

namespace listcolor {

/// Vertex count of a rooted k-proper tree for girth g. Throws
/// InvalidParameters for k < 2, g < 3 or overflow.
std::uint64_t Q(int k, int g);

enum class TreeParity { Odd, Even };

struct TreeNode {
  Vertex vertex = 0;
  int parent = -1;  // node index; -1 for the root
  int depth = 0;    // distance from the root of its side
  bool semiroot_side = false;
  bool operator==(const TreeNode&) const = default;
};

/// Node 0 is the root v. For even trees node 1 is the semiroot u, whose
/// parent is the root and whose depth is 0 on its own side.
struct RootedProperTree {
  TreeParity parity = TreeParity::Odd;
  int girth = 0;
  int k = 0;
  std::vector<TreeNode> nodes;

  Vertex root() const { return nodes.front().vertex; }
  std::optional<Vertex> semiroot() const;
  VertexSet vertex_set() const;
  std::size_t order() const noexcept { return nodes.size(); }
  bool operator==(const RootedProperTree&) const = default;
};

/// Structure check against g: edges of g, distinct vertices, child counts,
/// leaf depth and parity matching the tree's girth.
bool is_rooted_proper_tree(const Graph& g, const RootedProperTree& tree);

inline constexpr std::uint64_t kMaxTrees = 1'000'000;

/// All rooted k-proper trees of g at root v, for the parity of girth(g).
/// Odd g: v has k children. Even g: every semiroot u in N(v) ascending.
/// Forests yield nothing. Throws GuardExceeded after kMaxTrees trees.
void build_proper_trees(const Graph& g, int k, Vertex v, const std::function<void(const RootedProperTree&)>& visit);

struct TreeCheck {
  bool bad = false;
  Coloring witness;  // host-indexed, kUncolored off T - v
};

/// Exhaustive scan of L-colorings of T - v (proper along tree edges) for the
/// tree-bad conditions: L(v) is the colour set of N_T(v), and each conditioned
/// vertex x has L(x) minus its colour equal to its children's colours.
/// Conditioned: depths 1..(g-3)/2 for odd trees; for even trees depths
/// 1..(g-4)/2 on the root side and 0..(g-4)/2 on the semiroot side when g >= 6.
TreeCheck check_tree_bad(const Graph& g, const ListAssignment& lists, const RootedProperTree& tree);
inline bool is_tree_bad(const Graph& g, const ListAssignment& lists, const RootedProperTree& tree) {
  return check_tree_bad(g, lists, tree).bad;
}

struct TreeBad {
  RootedProperTree tree;
  Coloring witness;
};

/// Tree-bad tree for the exact girth of g, over roots in ascending order.
/// Children are matched to required colours by bipartite matching.
std::optional<TreeBad> find_tree_bad(const Graph& g, const ListAssignment& lists);

}  // namespace listcolor
