#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"

namespace listcolor {

/// Per-vertex colour; kUncolored marks vertices without a colour.
using Coloring = std::vector<Color>;
inline constexpr Color kUncolored = 0;

enum class SolveStatus { Colorable, Uncolorable, Aborted };

struct SolveStats {
  std::uint64_t nodes = 0;         // branching decisions
  std::uint64_t propagations = 0;  // forced assignments
};

/// Optional budget. The library itself never imposes one; callers such as
/// the trial runner do. An exhausted budget yields SolveStatus::Aborted.
struct SolveLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::Uncolorable;
  Coloring coloring;  // total L-coloring when Colorable
  SolveStats stats;

  bool colorable() const noexcept { return status == SolveStatus::Colorable; }
};

/// Exact L-colorability decision.
///
/// Backtracking per connected component with forward checking: assigning a
/// colour removes it from neighbouring live lists, a list of size one forces
/// its colour, an empty list fails. Branching picks the uncoloured vertex with
/// the fewest live colours (ties by id) and tries colours in ascending order.
/// When every uncoloured vertex still has its full list, the residual problem
/// no longer depends on earlier choices, so its failure is final for the
/// component.
SolveResult solve(const Graph& g, const ListAssignment& lists, const SolveLimits& limits = {});

bool is_colorable(const Graph& g, const ListAssignment& lists);

/// True iff `phi` is total, proper and respects every list.
bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi);

/// True iff `phi` is an L-coloring of g - skip (skip's entry is ignored).
bool verify_coloring_except(const Graph& g, const ListAssignment& lists, const Coloring& phi, Vertex skip);

struct CriticalSubgraph {
  VertexSet vertices;  // host ids
  Graph graph;         // induced on `vertices`, relabeled 0..|F|-1
};

/// Connected induced L-critical subgraph of an uncolourable instance: tries
/// deleting vertices in ascending id order, keeping a deletion whenever some
/// component of the remainder stays uncolourable (then shrinking to the
/// first such component). Throws ContractViolation on colourable input.
CriticalSubgraph extract_critical(const Graph& g, const ListAssignment& lists);

/// True iff F is not L-colourable but F - v is for every v.
bool is_critical(const Graph& f, const ListAssignment& lists);

}  // namespace listcolor
