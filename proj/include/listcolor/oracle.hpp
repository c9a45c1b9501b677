#pragma once

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"

namespace listcolor {

/// Exhaustive scan of the product of all lists. Independent of the solver;
/// used to cross-check it. Throws GuardExceeded when the product of list
/// sizes exceeds `max_product`.
bool brute_force_colorable(const Graph& g, const ListAssignment& lists, double max_product = 1e7);

}  // namespace listcolor
