#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/rng.hpp"

namespace listcolor {

/// Colours are positive integers 1..sigma.
using Color = int;

/// A k-list assignment over the colour universe {1..sigma}: every vertex gets
/// a sorted list of exactly k distinct colours.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Validates sizes and ranges (InvalidParameters) and sorts every list.
  ListAssignment(int sigma, int k, const std::vector<std::vector<Color>>& lists);

  int sigma() const noexcept { return sigma_; }
  int k() const noexcept { return k_; }
  int order() const noexcept { return n_; }

  std::span<const Color> list(Vertex v) const {
    return {colors_.data() + static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_)};
  }
  bool contains(Vertex v, Color c) const;
  /// Position of `c` in L(v), or -1.
  int position(Vertex v, Color c) const;

  /// Lists of the host vertices `to_host[0..]`, in that order.
  ListAssignment restricted(std::span<const Vertex> to_host) const;

  bool operator==(const ListAssignment&) const = default;

 private:
  int sigma_ = 0;
  int k_ = 0;
  int n_ = 0;
  std::vector<Color> colors_;
};

/// Random (k, {1..sigma})-list assignment for `n` vertices: every list is an
/// independent uniform k-subset. Deterministic in `seed`.
ListAssignment sample_assignment(int n, int k, int sigma, SeedSpec seed);
inline ListAssignment sample_assignment(const Graph& g, int k, int sigma, SeedSpec seed) {
  return sample_assignment(g.order(), k, sigma, seed);
}

/// Probability that all lists on a clique of the given size coincide,
/// C(sigma,k)^-(clique_size-1).
double prob_identical_lists(int clique_size, int k, int sigma);

// Text format: "sigma=<s> k=<k>" header, then "<vertex>: c1 ... ck" lines.
ListAssignment read_lists(std::string_view text, const Graph& g);
ListAssignment read_lists(std::string_view text, int n);
std::string write_lists(const ListAssignment& lists);
ListAssignment read_lists_file(const std::string& path, const Graph& g);

}  // namespace listcolor
