#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/lists.hpp"

namespace listcolor {

enum class SeqKind { Cycle, Lollipop };

/// Ordered cycle v1..vd v1 or ordered lollipop v1..vj..vd vj.
/// `close_to` is the 0-based index of the closing target: 0 for cycles,
/// 1..d-3 for lollipops.
struct OrderedSeq {
  SeqKind kind = SeqKind::Cycle;
  std::vector<Vertex> path;
  int close_to = 0;

  Vertex first() const { return path.front(); }
  Vertex second() const { return path.at(1); }
  bool operator==(const OrderedSeq&) const = default;
};

/// Structural validity in g: distinct path vertices, consecutive ones
/// adjacent, closing edge present, d >= 3 for cycles and a target index in
/// 1..d-3 for lollipops.
bool is_ordered_seq(const Graph& g, const OrderedSeq& seq);

/// Colour chain c1..c_{d-1} with the given first colour, if the sequence is
/// L-alternating with it. Throws InvalidParameters unless k = 2.
std::optional<std::vector<Color>> alternating_chain(const OrderedSeq& seq, const ListAssignment& lists, Color first);

struct AlternatingCheck {
  bool alternating = false;
  std::vector<Color> chain;  // chain.front() is the first colour
};

/// Tries the colours of L(v1) in ascending order.
AlternatingCheck is_L_alternating(const Graph& g, const OrderedSeq& seq, const ListAssignment& lists);

struct ProperPair {
  OrderedSeq h1;
  OrderedSeq h2;
  Color c1 = 0;  // first colour of h1
  Color c2 = 0;  // first colour of h2
};

/// Both sequences valid, common first vertex v with L(v) = {c1, c2}, c1 != c2,
/// h_i alternating with first colour c_i, distinct second vertices.
bool is_2bad_pair(const Graph& g, const ListAssignment& lists, const ProperPair& pair);

inline constexpr std::uint64_t kMaxPairExpansions = 5'000'000;

/// Depth-first search over alternating chains from every vertex. h1 takes the
/// smaller colour of L(v). Throws InvalidParameters unless k = 2 and
/// GuardExceeded after kMaxPairExpansions path extensions.
std::optional<ProperPair> find_2bad_pair(const Graph& g, const ListAssignment& lists);

/// Common vertices other than the first vertex whose predecessor along h2 is
/// not joined to them by an edge of h1. The predecessor of a vertex is the
/// one before it on the path of h2.
int count_nonconsecutive(const ProperPair& pair);

/// Union of the vertices of both sequences.
VertexSet pair_vertices(const ProperPair& pair);

}  // namespace listcolor
