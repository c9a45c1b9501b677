#pragma once

#include <cstdint>
#include <vector>

#include "listcolor/graph.hpp"

namespace listcolor {

/// Canonical adjacency code of a graph with at most 11 vertices: equal iff
/// the graphs are isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Graph on n vertices decoded from a canonical code.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class of connected graphs on exactly
/// n vertices (1 <= n <= 8), relabeled canonically and sorted by code.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(1) ++ ... ++ connected_graphs(max_n).
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace listcolor
