#pragma once

#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/solver.hpp"

namespace listcolor {

/// Shortest alternating distances from `origin` under an L-coloring `phi` of
/// g - origin. A step w -> x is allowed when x is adjacent to w, x is not the
/// origin and phi(x) lies in L(w). Entry -1 marks unreachable vertices.
/// Throws ContractViolation when phi is not an L-coloring of g - origin.
std::vector<int> find_alternating_paths(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                                        Vertex origin);

/// Rank function induced by L and phi. Throws NotACertificate when some
/// vertex is not alternately reachable.
std::vector<int> induced_rank(const Graph& g, const ListAssignment& lists, const Coloring& phi, Vertex origin);

/// Literal check of the alternating-path definition for a vertex sequence.
bool is_alternating_path(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                         const std::vector<Vertex>& path);

}  // namespace listcolor
