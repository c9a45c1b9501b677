#include "listcolor/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "listcolor/errors.hpp"
#include "listcolor/trees.hpp"

namespace listcolor {

namespace {

using Params = std::vector<std::pair<std::string, double>>;

LogValue lv(double x) { return LogValue::from(x); }

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameters(what);
}

// sum_{j=0}^{count-1} exp(j * log_ratio)
LogValue geometric_sum(double log_ratio, double count) {
  if (count <= 0) return {};
  if (log_ratio == -std::numeric_limits<double>::infinity()) return LogValue::one();
  if (log_ratio == 0.0) return lv(count);
  if (log_ratio < 0.0)
    return LogValue::from_log(std::log(-std::expm1(count * log_ratio)) - std::log(-std::expm1(log_ratio)));
  return LogValue::from_log(count * log_ratio + std::log(-std::expm1(-count * log_ratio)) - log_ratio -
                            std::log(-std::expm1(-log_ratio)));
}

double ln(double x) { return x == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(x); }

BoundReport report(std::string quantity, Params params, LogValue value, Interpretation interp) {
  BoundReport r;
  r.quantity = std::move(quantity);
  r.params = std::move(params);
  r.value = value;
  r.interpretation = interp;
  return r;
}

}  // namespace

std::string to_string(Interpretation i) {
  switch (i) {
    case Interpretation::Expectation: return "expectation";
    case Interpretation::UpperBound: return "upper_bound";
    case Interpretation::LowerBound: return "lower_bound";
    case Interpretation::Probability: return "probability";
    case Interpretation::Threshold: return "threshold";
  }
  return "unknown";
}

std::optional<LogValue> BoundReport::extra(const std::string& name) const {
  for (const auto& [key, v] : extras)
    if (key == name) return v;
  return std::nullopt;
}

nlohmann::json BoundReport::to_json() const {
  auto num = [](LogValue v) -> nlohmann::json {
    double x = v.value();
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  auto logv = [](LogValue v) -> nlohmann::json {
    if (v.is_zero()) return nullptr;
    return v.log();
  };
  nlohmann::json j;
  j["quantity"] = quantity;
  nlohmann::json ps = nlohmann::json::object();
  for (const auto& [key, v] : params) ps[key] = v;
  j["params"] = ps;
  j["value"] = num(value);
  j["log_value"] = logv(value);
  j["interpretation"] = to_string(interpretation);
  j["divergent"] = divergent;
  nlohmann::json ex = nlohmann::json::object();
  for (const auto& [key, v] : extras) ex[key] = {{"value", num(v)}, {"log_value", logv(v)}};
  j["extras"] = ex;
  if (!note.empty()) j["note"] = note;
  if (threshold) j["threshold"] = *threshold;
  if (clears_threshold) j["clears_threshold"] = *clears_threshold;
  return j;
}

BoundReport expected_identical_cliques_bound(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma) {
  require(n >= 0 && delta >= 0 && k >= 1 && k <= sigma, "need n, delta >= 0 and 1 <= k <= sigma");
  auto v = lv(n) * lv(delta).pow(k) / log_binomial(sigma, k).pow(k);
  return report("identical_cliques_bound", {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}}, v,
                Interpretation::UpperBound);
}

BoundReport expected_identical_cliques_exact(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma) {
  require(n >= 0 && delta >= 0 && k >= 1 && k <= sigma, "need n, delta >= 0 and 1 <= k <= sigma");
  auto blocks = static_cast<double>(n / (delta + 1));
  auto v = lv(blocks) * log_binomial(delta + 1, k + 1) / log_binomial(sigma, k).pow(k);
  return report("identical_cliques_exact", {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}}, v,
                Interpretation::Expectation);
}

BoundReport alternating_path_expectation(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                                         std::int64_t r_min, std::int64_t r_max) {
  require(n >= 0 && delta >= 0 && k >= 1 && sigma >= 1 && r_min >= 1, "need n, delta >= 0, k, sigma, r_min >= 1");
  const double log_ratio = ln(static_cast<double>(delta)) + 2 * std::log(k) - std::log(sigma);
  const auto lead = lv(n) * lv(k).pow(2);
  BoundReport r = report("alternating_path_expectation",
                         {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}, {"r_min", r_min}, {"r_max", r_max}},
                         {}, Interpretation::Expectation);
  auto first = delta == 0 ? (r_min == 1 ? lead : LogValue{}) : lead * LogValue::from_log(log_ratio * (r_min - 1));
  if (r_max >= r_min) r.value = first * geometric_sum(log_ratio, static_cast<double>(r_max - r_min + 1));
  r.extras.emplace_back("ratio", delta == 0 ? LogValue{} : LogValue::from_log(log_ratio));
  r.divergent = log_ratio >= 0.0;
  if (!r.divergent) r.extras.emplace_back("tail", first / lv(-std::expm1(log_ratio)));
  return r;
}

BoundReport bad_triple_probability_bound(std::int64_t m, std::int64_t delta, std::int64_t k, std::int64_t sigma) {
  require(m >= 1 && k >= 1 && k <= sigma && k <= delta, "need m >= 1 and 1 <= k <= min(sigma, delta)");
  auto v = lv(sigma).pow(m - 1) * log_binomial(delta, k) * log_binomial(delta * k, k - 1).pow(m - 1) /
           log_binomial(sigma, k).pow(m);
  return report("bad_triple_probability", {{"m", m}, {"delta", delta}, {"k", k}, {"sigma", sigma}}, v,
                Interpretation::UpperBound);
}

BoundReport proper_triple_count_bound(std::int64_t n, std::int64_t delta, std::int64_t m) {
  require(n >= 0 && delta >= 0 && m >= 1, "need n, delta >= 0 and m >= 1");
  auto v = lv(n) * lv(delta).pow(m - 1) * log_factorial(m - 1);
  return report("proper_triple_count", {{"n", n}, {"delta", delta}, {"m", m}}, v, Interpretation::UpperBound);
}

namespace {

// n Delta^{count_exp(m)} (m-1)! p_m with count_exp = doubled ? 2m-2 : m-1.
double log_triple_term(double m, std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma, bool doubled) {
  const double lc_dk = log_binomial(delta, k).log();
  const double lc_dkk = log_binomial(delta * k, k - 1).log();
  const double lc_sk = log_binomial(sigma, k).log();
  const double count_exp = doubled ? 2 * m - 2 : m - 1;
  const double log_delta = ln(static_cast<double>(delta));
  const double delta_part = count_exp == 0 ? 0.0 : count_exp * log_delta;
  return std::log(static_cast<double>(n)) + delta_part + std::lgamma(m) + (m - 1) * std::log(sigma) + lc_dk +
         (m - 1) * lc_dkk - m * lc_sk;
}

}  // namespace

// Shared by the general and girth regimes.
BoundReport triple_sum(std::string quantity, std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                       std::int64_t m_lo, double m_hi, bool doubled) {
  require(n >= 1 && delta >= 0 && k >= 1 && k <= sigma && m_lo >= 1, "need n >= 1, 1 <= k <= sigma, m_lo >= 1");
  BoundReport r = report(std::move(quantity),
                         {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}, {"m_lo", m_lo}, {"m_hi", m_hi}}, {},
                         Interpretation::UpperBound);
  const double top = std::floor(m_hi);
  if (top < m_lo || k > delta || delta == 0) return r;
  const double count = top - m_lo + 1;
  const double summed = std::min<double>(count, kMaxSummedTerms);
  LogValue sum;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(summed); ++i)
    sum += LogValue::from_log(log_triple_term(static_cast<double>(m_lo + i), n, delta, k, sigma, doubled));
  r.extras.emplace_back("terms_summed", lv(summed));
  if (count > summed) {
    const double next = m_lo + summed;
    const double edge = std::max(log_triple_term(next, n, delta, k, sigma, doubled),
                                 log_triple_term(top, n, delta, k, sigma, doubled));
    auto tail = lv(count - summed) * LogValue::from_log(edge);
    r.extras.emplace_back("tail_bound", tail);
    sum += tail;
    r.note = "remaining terms bounded by count times the larger endpoint term";
  }
  r.value = sum;
  return r;
}

BoundReport bad_triple_expectation_sum(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                                       std::optional<std::int64_t> m_lo, std::optional<double> m_hi) {
  const double hi = m_hi ? *m_hi : std::pow(static_cast<double>(delta), static_cast<double>(k * k + k));
  auto r = triple_sum("bad_triple_expectation_sum", n, delta, k, sigma, m_lo.value_or(k + 2), hi, true);
  if (delta > 0) {
    const double log_ratio =
        k * std::log(k) + static_cast<double>(k * k + 2 * k) * std::log(delta) - (k - 1) * std::log(sigma);
    r.divergent = log_ratio >= 0.0;
  }
  return r;
}

BoundReport chebyshev_lower_bound(double expectation, double pi) {
  require(expectation >= 0 && pi >= 0 && std::isfinite(expectation) && std::isfinite(pi),
          "need finite E >= 0 and Pi >= 0");
  auto r = report("chebyshev_lower_bound", {{"E", expectation}, {"Pi", pi}}, {}, Interpretation::LowerBound);
  if (expectation == 0.0) {
    r.note = "vacuous for E = 0";
    return r;
  }
  const double b = 1.0 - (expectation + pi) / (expectation * expectation);
  r.value = lv(std::clamp(b, 0.0, 1.0));
  return r;
}

BoundReport pi_bound_clique_union(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma) {
  require(n >= 0 && delta >= 0 && k >= 1 && k <= sigma, "need n, delta >= 0 and 1 <= k <= sigma");
  const auto blocks = lv(static_cast<double>(n / (delta + 1)));
  const auto lists = log_binomial(sigma, k);
  LogValue sum, exact;
  for (std::int64_t l = 1; l <= k; ++l) sum += log_binomial(delta + 1, k + 1 + l) / lists.pow(k + l);
  for (std::int64_t t = 1; t <= k; ++t)
    exact += log_binomial(delta + 1, k + 1) * log_binomial(k + 1, t) * log_binomial(delta - k, k + 1 - t) /
             lists.pow(2 * k + 1 - t);
  auto r = report("pi_bound_clique_union", {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}}, blocks * sum,
                  Interpretation::UpperBound);
  r.extras.emplace_back("exact", blocks * exact);
  return r;
}

BoundReport pair_probability_bound(std::int64_t l, std::int64_t r, std::int64_t sigma) {
  require(l >= 3 && r >= 0 && r <= l && sigma >= 3, "need l >= 3, 0 <= r <= l and sigma >= 3");
  auto v = lv(2).pow(l + 2 * r) / (lv(sigma).pow(l - 1) * lv(sigma - 1).pow(2 + r));
  return report("pair_probability", {{"l", l}, {"r", r}, {"sigma", sigma}}, v, Interpretation::UpperBound);
}

BoundReport pair_count_bound(std::int64_t n, std::int64_t delta, std::int64_t l, std::int64_t r) {
  require(n >= 0 && delta >= 0 && l >= 3 && r >= 0, "need n, delta, r >= 0 and l >= 3");
  auto v = lv(n) * lv(delta).pow(l - 1 + r) * lv(2).pow(l);
  return report("pair_count", {{"n", n}, {"delta", delta}, {"l", l}, {"r", r}}, v, Interpretation::UpperBound);
}

BoundReport pair_expectation_sum(std::int64_t n, std::int64_t delta, std::int64_t sigma, std::int64_t l_max,
                                 std::int64_t l_min) {
  require(n >= 0 && delta >= 0 && sigma >= 3 && l_min >= 3, "need n, delta >= 0, sigma >= 3, l_min >= 3");
  auto r = report("pair_expectation_sum",
                  {{"n", n}, {"delta", delta}, {"sigma", sigma}, {"l_min", l_min}, {"l_max", l_max}}, {},
                  Interpretation::UpperBound);
  r.divergent = sigma <= 4 * delta;
  if (l_max < l_min || delta == 0) return r;
  const double log_rho = std::log(4.0 * delta / sigma);
  const double log_q = std::log(4.0 * delta / (sigma - 1));
  const auto lead = lv(n) * lv(4) / lv(sigma - 1).pow(2);
  const std::int64_t last = std::min(l_max, l_min + kMaxSummedTerms - 1);
  LogValue sum;
  for (std::int64_t l = l_min; l <= last; ++l)
    sum += lead * LogValue::from_log(log_rho * (l - 1)) * geometric_sum(log_q, static_cast<double>(l + 1));
  if (last < l_max) {
    if (r.divergent) {
      r.note = "partial sum of a divergent series";
    } else {
      const double rho = std::exp(log_rho);
      const double L = static_cast<double>(last);
      LogValue tail;
      if (log_q < 0)
        tail = lead / lv(-std::expm1(log_q)) * LogValue::from_log(log_rho * L) / lv(1 - rho);
      else
        tail = lead * LogValue::from_log(log_rho * L) * lv((L + 2) / (1 - rho) + rho / ((1 - rho) * (1 - rho)));
      r.extras.emplace_back("tail_bound", tail);
      sum += tail;
      r.note = "terms beyond the summed range bounded geometrically";
    }
  }
  r.value = sum;
  return r;
}

std::uint64_t tree_leaf_count(int k, int g) {
  Q(k, g);
  std::uint64_t p = 1;
  const int e = g % 2 ? (g - 3) / 2 : (g - 2) / 2;
  for (int i = 0; i < e; ++i)
    if (__builtin_mul_overflow(p, static_cast<std::uint64_t>(k - 1), &p)) throw InvalidParameters("leaf count overflows");
  if (__builtin_mul_overflow(p, static_cast<std::uint64_t>(g % 2 ? k : 2), &p))
    throw InvalidParameters("leaf count overflows");
  return p;
}

BoundReport tree_bad_expectation_bound(std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma, int g) {
  require(n >= 0 && delta >= 0 && k >= 2 && k <= sigma, "need n, delta >= 0 and 2 <= k <= sigma");
  const double q = static_cast<double>(Q(static_cast<int>(k), g));
  const double leaves = static_cast<double>(tree_leaf_count(static_cast<int>(k), g));
  const auto head = lv(n) * lv(delta).pow(q - 1);
  auto exact = head * lv(sigma).pow(q - 1) * log_binomial(sigma - 1, k - 1).pow(leaves) / log_binomial(sigma, k).pow(q);
  auto simplified = head * lv(k).pow(2 * q) / lv(sigma).pow(q - 1);
  auto r = report("tree_bad_expectation",
                  {{"n", n}, {"delta", delta}, {"k", k}, {"sigma", sigma}, {"g", g}, {"Q", q}, {"leaves", leaves}},
                  exact, Interpretation::UpperBound);
  r.extras.emplace_back("simplified", simplified);
  return r;
}

}  // namespace listcolor
