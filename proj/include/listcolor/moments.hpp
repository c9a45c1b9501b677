#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "listcolor/logvalue.hpp"

namespace listcolor {

enum class Interpretation { Expectation, UpperBound, LowerBound, Probability, Threshold };

std::string to_string(Interpretation i);

struct BoundReport {
  std::string quantity;
  std::vector<std::pair<std::string, double>> params;
  LogValue value;
  Interpretation interpretation = Interpretation::UpperBound;
  bool divergent = false;
  std::vector<std::pair<std::string, LogValue>> extras;
  std::string note;
  std::optional<double> threshold;      // sigma threshold, for regime reports
  std::optional<bool> clears_threshold;

  double numeric() const { return value.value(); }
  std::optional<LogValue> extra(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// n * Delta^k * C(sigma,k)^-k.
BoundReport expected_identical_cliques_bound(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma);

/// floor(n/(Delta+1)) * C(Delta+1,k+1) * C(sigma,k)^-k for clique_union(n, Delta).
BoundReport expected_identical_cliques_exact(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma);

/// sum_{r=r_min}^{r_max} n Delta^{r-1} k^{2r} / sigma^{r-1}, evaluated in closed
/// form. Extras: ratio = Delta k^2 / sigma, tail = the sum continued to infinity
/// (absent when divergent).
BoundReport alternating_path_expectation(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                                         std::int64_t r_min, std::int64_t r_max);

/// sigma^{m-1} C(Delta,k) C(Delta k, k-1)^{m-1} / C(sigma,k)^m.
BoundReport bad_triple_probability_bound(std::int64_t m, std::int64_t delta, std::int64_t k, std::int64_t sigma);

/// n Delta^{m-1} (m-1)!.
BoundReport proper_triple_count_bound(std::int64_t n, std::int64_t delta, std::int64_t m);

inline constexpr std::int64_t kMaxSummedTerms = 1'000'000;

/// sum_m n Delta^{2m-2} (m-1)! p_m with p_m the bad-triple probability bound.
/// m_lo defaults to k + 2 and m_hi to Delta^{k^2+k}. After kMaxSummedTerms
/// terms the remainder is bounded by (remaining count) x (larger endpoint
/// term), valid because the summand is log-convex in m.
BoundReport bad_triple_expectation_sum(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                                       std::optional<std::int64_t> m_lo = std::nullopt,
                                       std::optional<double> m_hi = std::nullopt);

/// max(0, min(1, 1 - (E + Pi) / E^2)); 0 when E = 0.
BoundReport chebyshev_lower_bound(double expectation, double pi);

/// floor(n/(Delta+1)) * sum_{l=1}^{k} C(Delta+1, k+1+l) C(sigma,k)^{-(k+l)}.
/// Extra "exact" holds the exact sum of P[A_i and A_j] over dependent pairs.
BoundReport pi_bound_clique_union(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma);

/// 2^{l+2r} / (sigma^{l-1} (sigma-1)^{2+r}).
BoundReport pair_probability_bound(std::int64_t l, std::int64_t r, std::int64_t sigma);

/// n Delta^{l-1+r} 2^l.
BoundReport pair_count_bound(std::int64_t n, std::int64_t delta, std::int64_t l, std::int64_t r);

/// sum_{l=l_min}^{l_max} sum_{r=0}^{l} count bound x probability bound. The
/// inner sum is closed form; beyond kMaxSummedTerms values of l a geometric
/// tail bound is added. Divergent when sigma <= 4 Delta.
BoundReport pair_expectation_sum(std::int64_t n, std::int64_t delta, std::int64_t sigma, std::int64_t l_max,
                                 std::int64_t l_min = 3);

/// Leaf count of a rooted k-proper tree for girth g.
std::uint64_t tree_leaf_count(int k, int g);

/// n Delta^{Q-1} sigma^{Q-1} C(sigma-1,k-1)^E / C(sigma,k)^Q with Q = Q(k,g) and
/// E the leaf count; extra "simplified" = n Delta^{Q-1} k^{2Q} / sigma^{Q-1}.
BoundReport tree_bad_expectation_bound(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma, int g);

struct RegimeParams {
  std::int64_t n = 0;
  std::int64_t delta = 0;
  std::int64_t k = 0;
  std::int64_t sigma = 0;
  std::optional<int> girth;
  double s = 2.0;
  double alpha = 1.0;
  double epsilon = 0.0;
};

/// Names accepted by regime_report, in reporting order.
const std::vector<std::string>& regime_names();

/// Threshold and matching bound for one named regime. Throws RegimeError
/// when the parameters fall outside it.
BoundReport regime_report(const std::string& name, const RegimeParams& p);

/// Every regime that applies to the parameters.
std::vector<BoundReport> girth_regime_bounds(const RegimeParams& p);

struct LogLogConstants {
  std::int64_t k0 = 0;
  double b0 = 0.0;
};
/// k0 = ceil(exp(2/C2) + 1), B0 = exp((k0-2)/2) k0^2.
LogLogConstants loglog_girth_constants(double c2);

/// P(k) = (k-1) Q(k+1, g) + 1 and R(k) = k Q(k+1, g)^2.
std::uint64_t girth_exponent_P(int k, int g);
std::uint64_t girth_exponent_R(int k, int g);

}  // namespace listcolor
