#include <doctest.h>

#include <functional>

#include "listcolor/alternating.hpp"
#include "listcolor/cert_json.hpp"
#include "listcolor/errors.hpp"
#include "listcolor/graph_enum.hpp"
#include "listcolor/pairs.hpp"
#include "listcolor/trees.hpp"
#include "listcolor/triples.hpp"

using namespace listcolor;

namespace {

ListAssignment same_lists(int n, int sigma, std::vector<Color> l) {
  return ListAssignment(sigma, static_cast<int>(l.size()), std::vector<std::vector<Color>>(n, l));
}

// Shortest alternating distances by enumerating simple paths from the origin.
std::vector<int> distances_by_paths(const Graph& g, const ListAssignment& l, const Coloring& phi, Vertex origin) {
  std::vector<int> best(g.order(), -1);
  std::vector<Vertex> path{origin};
  std::vector<bool> on(g.order(), false);
  on[origin] = true;
  std::function<void()> grow = [&] {
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (is_alternating_path(g, l, phi, path) && (best[last] < 0 || len < best[last])) best[last] = len;
    for (Vertex w : g.neighbors(last))
      if (!on[w]) {
        on[w] = true;
        path.push_back(w);
        grow();
        path.pop_back();
        on[w] = false;
      }
  };
  grow();
  return best;
}

// Some L-coloring of g - origin, if one exists.
std::optional<Coloring> coloring_without(const Graph& g, const ListAssignment& l, Vertex origin) {
  auto rest = VertexSet::all(g.order()).without(origin);
  auto sub = induced_subgraph(g, rest);
  auto res = solve(sub.graph, l.restricted(sub.to_host));
  if (!res.colorable()) return std::nullopt;
  Coloring phi(g.order(), kUncolored);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) phi[sub.to_host[i]] = res.coloring[i];
  return phi;
}

}  // namespace

TEST_CASE("alternating paths on a path") {
  auto g = path_graph(3);
  ListAssignment l(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  auto d = find_alternating_paths(g, l, {kUncolored, 1, 3}, 0);
  CHECK(d == std::vector<int>{0, 1, 2});
  CHECK(induced_rank(g, l, {kUncolored, 1, 3}, 0) == std::vector<int>{0, 1, 2});
  auto blocked = find_alternating_paths(g, l, {kUncolored, 3, 2}, 0);
  CHECK(blocked == std::vector<int>{0, -1, -1});
  CHECK_THROWS_AS(induced_rank(g, l, {kUncolored, 3, 2}, 0), NotACertificate);
  CHECK_THROWS_AS(find_alternating_paths(g, l, {kUncolored, 2, 2}, 0), ContractViolation);
}

TEST_CASE("star centre gives rank one everywhere") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto l = same_lists(4, 3, {1, 2});
  CHECK(induced_rank(star, l, {kUncolored, 1, 2, 1}, 0) == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("alternating distances agree with path enumeration") {
  int compared = 0;
  for (int n = 2; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); i += (n == 7 ? 37 : 1)) {
      const auto& g = graphs[i];
      auto l = sample_assignment(g, 2, 3, SeedSpec{static_cast<std::uint64_t>(n), i});
      for (Vertex origin = 0; origin < n; origin += 2) {
        auto phi = coloring_without(g, l, origin);
        if (!phi) continue;
        CHECK(find_alternating_paths(g, l, *phi, origin) == distances_by_paths(g, l, *phi, origin));
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("induced ranks satisfy the ladder property") {
  int checked = 0;
  for (std::uint64_t t = 0; checked < 500 && t < 20000; ++t) {
    const auto& graphs = connected_graphs(5);
    const auto& g = graphs[t % graphs.size()];
    auto l = sample_assignment(g, 2, 3, SeedSpec{404, t});
    auto phi = coloring_without(g, l, 0);
    if (!phi) continue;
    auto d = find_alternating_paths(g, l, *phi, 0);
    if (std::count(d.begin(), d.end(), -1) > 0) continue;
    ProperTriple triple{VertexSet::all(g.order()), 0, induced_rank(g, l, *phi, 0)};
    CHECK(is_proper(g, triple));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("bad triples") {
  auto k3 = complete_graph(3);
  auto same = same_lists(3, 2, {1, 2});
  ProperTriple t{VertexSet({0, 1, 2}), 0, {0, 1, 1}};
  auto check = check_bad_triple(k3, same, t);
  CHECK(check.bad);
  CHECK(verify_coloring_except(k3, same, check.witness, 0));

  ListAssignment colorable(3, 2, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(is_bad_triple(k3, colorable, t));

  ProperTriple wrong{VertexSet({0, 1, 2}), 0, {0, 1, 2}};
  CHECK(is_proper(k3, wrong));
  CHECK_FALSE(is_bad_triple(k3, same, wrong));

  ProperTriple improper{VertexSet({0, 1, 2}), 0, {0, 2, 2}};
  CHECK_FALSE(is_proper(k3, improper));
  CHECK_THROWS_AS(check_bad_triple(k3, same, improper), ContractViolation);
}

TEST_CASE("proper triple enumeration") {
  auto edge = path_graph(2);
  auto counts = count_proper_triples(edge, 2);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 2);

  std::vector<ProperTriple> seen;
  enumerate_proper_triples(complete_graph(3), 3, [&](const ProperTriple& t) {
    CHECK(is_proper(complete_graph(3), t));
    for (const auto& s : seen) CHECK_FALSE(s == t);
    seen.push_back(t);
  });
  auto k3 = count_proper_triples(complete_graph(3), 3);
  CHECK(k3[1] == 3);
  CHECK(k3[3] <= 54);
  CHECK(seen.size() == k3[1] + k3[2] + k3[3]);

  for (int n = 1; n <= 6; ++n)
    for (const auto& g : connected_graphs(n)) CHECK(count_proper_triples(g, 1)[1] == static_cast<std::uint64_t>(n));
}

TEST_CASE("find bad triple") {
  auto c5 = cycle_graph(5);
  auto l = same_lists(5, 2, {1, 2});
  auto cert = find_bad_triple(c5, l);
  REQUIRE(cert);
  CHECK(is_bad_triple(c5, l, cert->triple));
  CHECK_FALSE(find_bad_triple(cycle_graph(4), same_lists(4, 2, {1, 2})));
  auto k3 = find_bad_triple(complete_graph(3), same_lists(3, 3, {1, 2}));
  REQUIRE(k3);
  CHECK(k3->triple.order() == 3);

  auto j = to_json(*cert);
  CHECK(j["kind"] == "bad_triple");
  CHECK(j["vertices"].size() == cert->triple.order());
}

TEST_CASE("ordered sequences") {
  auto k3 = complete_graph(3);
  auto same = same_lists(3, 3, {1, 2});
  OrderedSeq tri{SeqKind::Cycle, {0, 1, 2}, 0};
  CHECK(is_ordered_seq(k3, tri));
  auto chain = alternating_chain(tri, same, 1);
  REQUIRE(chain);
  CHECK(*chain == std::vector<Color>{1, 2});

  ListAssignment broken(3, 2, {{1, 2}, {1, 2}, {1, 3}});
  CHECK_FALSE(is_L_alternating(k3, tri, broken).alternating);

  CHECK_FALSE(is_ordered_seq(k3, OrderedSeq{SeqKind::Cycle, {0}, 0}));
  CHECK_FALSE(is_ordered_seq(k3, OrderedSeq{SeqKind::Cycle, {0, 1}, 0}));
  CHECK_THROWS_AS(alternating_chain(tri, same_lists(3, 3, {1, 2, 3}), 1), InvalidParameters);

  // lollipop 0-1-2-3 closing to 1; closing to the predecessor is not allowed
  Graph lolli(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(is_ordered_seq(lolli, OrderedSeq{SeqKind::Lollipop, {0, 1, 2, 3}, 1}));
  CHECK_FALSE(is_ordered_seq(lolli, OrderedSeq{SeqKind::Lollipop, {0, 1, 2, 3}, 2}));
}

TEST_CASE("2-bad pairs") {
  auto c5 = cycle_graph(5);
  auto l = same_lists(5, 2, {1, 2});
  auto pair = find_2bad_pair(c5, l);
  REQUIRE(pair);
  CHECK(is_2bad_pair(c5, l, *pair));
  CHECK(pair->c1 == 1);
  CHECK(pair->c2 == 2);
  CHECK(pair->h1.second() != pair->h2.second());
  CHECK(is_L_alternating(c5, pair->h1, l).alternating);
  CHECK(is_L_alternating(c5, pair->h2, l).alternating);

  // the opposite traversal of C5 from vertex 0
  ProperPair manual{OrderedSeq{SeqKind::Cycle, {0, 1, 2, 3, 4}, 0}, OrderedSeq{SeqKind::Cycle, {0, 4, 3, 2, 1}, 0}, 1, 2};
  CHECK(is_2bad_pair(c5, l, manual));

  CHECK_FALSE(find_2bad_pair(cycle_graph(4), same_lists(4, 2, {1, 2})));
  CHECK_THROWS_AS(find_2bad_pair(c5, same_lists(5, 3, {1, 2, 3})), InvalidParameters);

  Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto d = find_2bad_pair(diamond, same_lists(4, 2, {1, 2}));
  REQUIRE(d);
  CHECK(is_2bad_pair(diamond, same_lists(4, 2, {1, 2}), *d));
  CHECK(pair_vertices(*d).size() == 3);

  auto j = to_json(*pair);
  CHECK(j["kind"] == "two_bad_pair");
}

TEST_CASE("2-bad pairs exist exactly for uncolorable instances") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : connected_graphs(n))
      for (std::uint64_t t = 0; t < 10; ++t) {
        auto l = sample_assignment(g, 2, 3, SeedSpec{808, t});
        auto pair = find_2bad_pair(g, l);
        CHECK(pair.has_value() == !is_colorable(g, l));
        if (pair) CHECK(is_2bad_pair(g, l, *pair));
      }
}

TEST_CASE("non-consecutive common vertices") {
  ProperPair bowtie{OrderedSeq{SeqKind::Cycle, {0, 1, 2}, 0}, OrderedSeq{SeqKind::Cycle, {0, 3, 4}, 0}, 1, 2};
  CHECK(count_nonconsecutive(bowtie) == 0);
  ProperPair retrace{OrderedSeq{SeqKind::Cycle, {0, 1, 2}, 0}, OrderedSeq{SeqKind::Cycle, {0, 2, 1}, 0}, 1, 2};
  CHECK(count_nonconsecutive(retrace) == 0);
  // H2 enters H1 through the chord 4-2
  ProperPair chord{OrderedSeq{SeqKind::Cycle, {0, 1, 2, 3}, 0}, OrderedSeq{SeqKind::Cycle, {0, 4, 2, 1}, 0}, 1, 2};
  CHECK(count_nonconsecutive(chord) == 1);
  CHECK(pair_vertices(chord).size() == 5);
}

TEST_CASE("Q values") {
  CHECK(Q(3, 5) == 10);
  CHECK(Q(3, 4) == 6);
  CHECK(Q(4, 6) == 26);
  CHECK(Q(2, 5) == 5);
  CHECK(Q(2, 4) == 4);
  CHECK(Q(3, 3) == 4);
  for (int k = 2; k <= 6; ++k)
    for (int g = 3; g <= 12; ++g) {
      std::uint64_t closed;
      std::uint64_t p = 1;
      for (int i = 0; i < (g % 2 ? (g - 1) / 2 : g / 2); ++i) p *= k - 1;
      if (k == 2) closed = g % 2 ? 1 + 2 * ((g - 1) / 2) : 2 * (g / 2);
      else closed = g % 2 ? 1 + k * (p - 1) / (k - 2) : 2 * (p - 1) / (k - 2);
      CHECK(Q(k, g) == closed);
    }
  CHECK_THROWS_AS(Q(1, 5), InvalidParameters);
  CHECK_THROWS_AS(Q(3, 2), InvalidParameters);
}

TEST_CASE("rooted proper trees") {
  auto p = petersen();
  for (Vertex v = 0; v < 10; ++v) {
    int trees = 0;
    build_proper_trees(p, 3, v, [&](const RootedProperTree& t) {
      ++trees;
      CHECK(t.order() == 10);
      CHECK(t.parity == TreeParity::Odd);
      CHECK(is_rooted_proper_tree(p, t));
    });
    CHECK(trees >= 1);
  }

  int c5_trees = 0;
  build_proper_trees(cycle_graph(5), 2, 0, [&](const RootedProperTree& t) {
    ++c5_trees;
    CHECK(t.order() == 5);
  });
  CHECK(c5_trees == 1);

  auto k33 = complete_bipartite(3, 3);
  int even = 0;
  build_proper_trees(k33, 3, 0, [&](const RootedProperTree& t) {
    ++even;
    CHECK(t.parity == TreeParity::Even);
    CHECK(t.order() == 6);
    REQUIRE(t.semiroot());
    CHECK(k33.adjacent(t.root(), *t.semiroot()));
  });
  CHECK(even == 3);

  int none = 0;
  build_proper_trees(path_graph(5), 2, 0, [&](const RootedProperTree&) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("tree-bad trees") {
  auto c5 = cycle_graph(5);
  auto l = same_lists(5, 2, {1, 2});
  auto cert = find_tree_bad(c5, l);
  REQUIRE(cert);
  CHECK(is_tree_bad(c5, l, cert->tree));
  CHECK(to_json(*cert)["kind"] == "tree_bad");

  auto p = petersen();
  std::vector<std::vector<Color>> lists(10, std::vector<Color>{4, 5, 6});
  lists[0] = {1, 2, 3};
  ListAssignment apart(6, 3, lists);
  build_proper_trees(p, 3, 0, [&](const RootedProperTree& t) { CHECK_FALSE(is_tree_bad(p, apart, t)); });

  // K_{3,3} with a non-colourable 2-list assignment
  auto k33 = complete_bipartite(3, 3);
  std::optional<ListAssignment> hard;
  for (std::uint64_t t = 0; t < 100000 && !hard; ++t) {
    auto cand = sample_assignment(k33, 2, 3, SeedSpec{33, t});
    if (!is_colorable(k33, cand)) hard = cand;
  }
  REQUIRE(hard);
  auto even = find_tree_bad(k33, *hard);
  REQUIRE(even);
  CHECK(even->tree.parity == TreeParity::Even);
  CHECK(is_tree_bad(k33, *hard, even->tree));
}

TEST_CASE("tree-bad search on girth 4 and 5 instances") {
  int uncolorable = 0;
  for (const auto& g : {cycle_graph(5), cycle_graph(7), petersen(), complete_bipartite(3, 3), complete_bipartite(2, 4),
                        cycle_graph(4), cycle_graph(6)})
    for (std::uint64_t t = 0; t < 300; ++t) {
      auto l = sample_assignment(g, 2, 3, SeedSpec{5150, t});
      auto cert = find_tree_bad(g, l);
      if (cert) {
        CHECK(is_rooted_proper_tree(g, cert->tree));
        CHECK(is_tree_bad(g, l, cert->tree));
      }
      if (!is_colorable(g, l)) {
        ++uncolorable;
        CHECK(cert.has_value());
      }
    }
  CHECK(uncolorable > 0);
}
