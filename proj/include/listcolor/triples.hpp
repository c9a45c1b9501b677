#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/solver.hpp"

namespace listcolor {

/// (F, v1, R) with F given by its host vertex set; rank[i] belongs to vertices[i].
struct ProperTriple {
  VertexSet vertices;
  Vertex root = 0;
  std::vector<int> rank;

  int rank_of(Vertex v) const;
  std::size_t order() const noexcept { return vertices.size(); }
  bool operator==(const ProperTriple&) const = default;
};

/// R(root) = 0, all other ranks positive and every vertex of rank s > 0 has a
/// neighbour in F of rank s - 1. Also requires rank values below |F|.
bool is_proper(const Graph& g, const ProperTriple& triple);

/// Result of a badness check; `witness` is indexed by host vertex and is
/// kUncolored outside F - v1.
struct TripleCheck {
  bool bad = false;
  Coloring witness;
};

inline constexpr int kMaxTripleOrder = 12;

/// Exhaustive badness check over colorings of F - v1. Throws ContractViolation
/// for improper triples and GuardExceeded when |F| > kMaxTripleOrder.
TripleCheck check_bad_triple(const Graph& g, const ListAssignment& lists, const ProperTriple& triple);
inline bool is_bad_triple(const Graph& g, const ListAssignment& lists, const ProperTriple& triple) {
  return check_bad_triple(g, lists, triple).bad;
}

inline constexpr std::uint64_t kMaxEnumeratedTriples = 10'000'000;

/// Every proper triple with at most `max_m` vertices, each exactly once.
/// Throws GuardExceeded after kMaxEnumeratedTriples triples.
void enumerate_proper_triples(const Graph& g, int max_m, const std::function<void(const ProperTriple&)>& visit);

/// counts[m] = number of proper triples on m vertices, m = 0..max_m.
std::vector<std::uint64_t> count_proper_triples(const Graph& g, int max_m);

struct BadTriple {
  ProperTriple triple;
  Coloring witness;
};

/// Bad triple inside a critical subgraph, trying roots in ascending order.
/// Returns nullopt for L-colourable instances.
std::optional<BadTriple> find_bad_triple(const Graph& g, const ListAssignment& lists);

}  // namespace listcolor
