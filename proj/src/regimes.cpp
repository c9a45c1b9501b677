#include <cmath>
#include <functional>
#include <map>

#include "listcolor/errors.hpp"
#include "listcolor/moments.hpp"
#include "listcolor/trees.hpp"

namespace listcolor {

BoundReport triple_sum(std::string quantity, std::int64_t n, std::int64_t delta, std::int64_t k, std::int64_t sigma,
                       std::int64_t m_lo, double m_hi, bool doubled);

std::uint64_t girth_exponent_P(int k, int g) { return static_cast<std::uint64_t>(k - 1) * Q(k + 1, g) + 1; }

std::uint64_t girth_exponent_R(int k, int g) {
  const std::uint64_t q = Q(k + 1, g);
  return static_cast<std::uint64_t>(k) * q * q;
}

LogLogConstants loglog_girth_constants(double c2) {
  if (!(c2 > 0)) throw RegimeError("C2 must be positive");
  const double k0 = std::ceil(std::exp(2.0 / c2) + 1.0);
  if (!std::isfinite(k0) || k0 > 1e9) throw RegimeError("k0 too large for these parameters");
  return {static_cast<std::int64_t>(k0), std::exp((k0 - 2) / 2) * k0 * k0};
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw RegimeError(what);
}

double pw(double base, double e) { return std::pow(base, e); }

LogValue lv(double x) { return LogValue::from(x); }

std::vector<std::pair<std::string, double>> echo(const RegimeParams& p) {
  std::vector<std::pair<std::string, double>> out{{"n", static_cast<double>(p.n)},
                                                   {"delta", static_cast<double>(p.delta)},
                                                   {"k", static_cast<double>(p.k)},
                                                   {"sigma", static_cast<double>(p.sigma)}};
  if (p.girth) out.emplace_back("g", *p.girth);
  out.emplace_back("s", p.s);
  out.emplace_back("alpha", p.alpha);
  out.emplace_back("epsilon", p.epsilon);
  return out;
}

// Attaches the threshold, its ratio and the clearing verdict.
BoundReport with_threshold(BoundReport r, const std::string& name, const RegimeParams& p, double threshold,
                           bool strict) {
  r.quantity = name;
  r.params = echo(p);
  r.threshold = threshold;
  const double sigma = static_cast<double>(p.sigma);
  r.clears_threshold = strict ? sigma > threshold : sigma >= threshold;
  if (threshold > 0 && std::isfinite(threshold)) r.extras.emplace_back("sigma_over_threshold", lv(sigma / threshold));
  return r;
}

BoundReport threshold_only(double threshold) {
  BoundReport r;
  r.interpretation = Interpretation::Threshold;
  r.value = std::isfinite(threshold) ? lv(threshold) : LogValue{};
  return r;
}

// n Delta^{k(k+1)} / (sigma^{k^2} Delta) * sum_m ratio^m with
// ratio = Delta^{k^{(alpha+1)/2}} k^k Delta^k sigma / sigma^k.
BoundReport summand_series(const RegimeParams& p) {
  const double n = p.n, d = p.delta, k = p.k, s = p.sigma;
  BoundReport r;
  r.interpretation = Interpretation::UpperBound;
  if (d == 0) return r;
  const double log_lead = std::log(n) + k * (k + 1) * std::log(d) - k * k * std::log(s) - std::log(d);
  const double log_ratio = pw(k, (p.alpha + 1) / 2) * std::log(d) + k * std::log(k) + k * std::log(d) + std::log(s) -
                           k * std::log(s);
  r.extras.emplace_back("ratio", LogValue::from_log(log_ratio));
  r.divergent = log_ratio >= 0;
  r.value = r.divergent ? LogValue::from_log(log_lead) : LogValue::from_log(log_lead) / lv(-std::expm1(log_ratio));
  if (r.divergent) r.note = "geometric ratio >= 1; value is the leading factor only";
  return r;
}

// n C(Delta,k) C(sigma,k) k! C(sigma-1,k-1)^k / C(sigma,k)^{k+1}.
BoundReport star_expectation(const RegimeParams& p) {
  BoundReport r;
  r.interpretation = Interpretation::UpperBound;
  r.value = lv(p.n) * log_binomial(p.delta, p.k) * log_binomial(p.sigma, p.k) * log_factorial(p.k) *
            log_binomial(p.sigma - 1, p.k - 1).pow(p.k) / log_binomial(p.sigma, p.k).pow(p.k + 1);
  return r;
}

int girth_of(const RegimeParams& p) {
  need(p.girth.has_value(), "this regime needs the girth g");
  return *p.girth;
}

using Builder = std::function<BoundReport(const std::string&, const RegimeParams&)>;

const std::vector<std::pair<std::string, Builder>>& table() {
  static const std::vector<std::pair<std::string, Builder>> t = {
      {"general",
       [](const std::string& name, const RegimeParams& p) {
         const double n = p.n, d = p.delta, k = p.k;
         auto cliques = expected_identical_cliques_bound(p.n, p.delta, p.k, p.sigma);
         auto triples = bad_triple_expectation_sum(p.n, p.delta, p.k, p.sigma);
         auto paths = alternating_path_expectation(p.n, p.delta, p.k, p.sigma, p.k * p.k + p.k + 1, p.n);
         BoundReport r;
         r.value = cliques.value + triples.value + paths.value;
         r.divergent = triples.divergent || paths.divergent;
         r.extras = {{"identical_cliques", cliques.value},
                     {"bad_triples", triples.value},
                     {"long_alternating_paths", paths.value},
                     {"delta_cap", lv(pw(n, (k - 1) / (k * (k * k * k + 2 * k * k - k + 1))))}};
         return with_threshold(r, name, p, pw(n, 1 / (k * k)) * pw(d, 1 / k), true);
       }},
      {"two-lists",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k == 2, "needs k = 2");
         const double n = p.n, d = p.delta;
         const bool small_degree = d * d < n;
         auto r = pair_expectation_sum(p.n, p.delta, p.sigma, p.n);
         r.note = small_degree ? "case Delta below sqrt(n)" : "case Delta at least sqrt(n)";
         return with_threshold(r, name, p, small_degree ? pw(n, 0.25) * std::sqrt(d) : d, true);
       }},
      {"moderate-degree",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k >= 2, "needs k >= 2");
         need(p.alpha >= 1 && p.alpha <= 3, "needs 1 <= alpha <= 3");
         need(p.s >= 2 + 2.0 / (p.k - 1), "needs s >= 2 + 2/(k-1)");
         const double t = pw(p.n, 1 / pw(p.k, (p.alpha + 1) / 2)) * pw(p.delta, p.s);
         return with_threshold(summand_series(p), name, p, t, true);
       }},
      {"large-degree",
       [](const std::string& name, const RegimeParams& p) {
         return with_threshold(star_expectation(p), name, p, pw(p.n, 1.0 / p.k) * p.delta, true);
       }},
      {"two-lists-girth",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k == 2, "needs k = 2");
         const int g = girth_of(p);
         need(g >= 3, "needs g >= 3");
         auto r = pair_expectation_sum(p.n, p.delta, p.sigma, p.n, g);
         return with_threshold(r, name, p, pw(p.n, 1.0 / (g + 1)) * p.delta, true);
       }},
      {"girth-bounded-degree",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k >= 3, "needs k >= 3");
         const int g = girth_of(p);
         need(g >= 4, "needs g >= 4");
         need(p.s >= 1 + 1.0 / (p.k - 1), "needs s >= 1 + 1/(k-1)");
         const int k = static_cast<int>(p.k);
         const double P = static_cast<double>(girth_exponent_P(k, g));
         const double R = static_cast<double>(girth_exponent_R(k, g));
         const auto lo = static_cast<std::int64_t>(Q(k + 1, g));
         auto r = triple_sum("", p.n, p.delta, p.k, p.sigma, lo, pw(p.delta, P), false);
         if (p.delta > 0)
           r.divergent = k * std::log(k) + (P + k + 1) * std::log(p.delta) - (k - 1) * std::log(p.sigma) >= 0;
         r.extras.emplace_back("P", lv(P));
         r.extras.emplace_back("R", lv(R));
         r.extras.emplace_back("delta_cap", lv(pw(p.n, 1 / R)));
         return with_threshold(r, name, p, pw(p.n, 1 / P) * pw(p.delta, p.s), true);
       }},
      {"girth",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k >= 3, "needs k >= 3");
         const int g = girth_of(p);
         need(g > 3, "needs g > 3");
         const double q = static_cast<double>(Q(static_cast<int>(p.k), g));
         auto r = tree_bad_expectation_bound(p.n, p.delta, p.k, p.sigma, g);
         return with_threshold(r, name, p, pw(p.n, 1 / (q - 1)) * p.delta, true);
       }},
      {"log-girth-two-lists",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k == 2, "needs k = 2");
         need(p.n >= 3, "needs n >= 3");
         const int g = girth_of(p);
         need(g >= 3, "needs g >= 3");
         const double c = g / std::log(p.n);
         const double a = 4 * std::exp(1 / c);
         auto r = alternating_path_expectation(p.n, p.delta, 2, p.sigma, g, p.n);
         r.extras.emplace_back("C", lv(c));
         r.extras.emplace_back("A_min", lv(a));
         return with_threshold(r, name, p, a * p.delta * std::log(p.n), true);
       }},
      {"loglog-girth",
       [](const std::string& name, const RegimeParams& p) {
         need(p.n >= 3, "needs n >= 3");
         const int g = girth_of(p);
         need(g >= 3, "needs g >= 3");
         const double c2 = g / std::log(std::log(p.n));
         auto consts = loglog_girth_constants(c2);
         need(p.k >= consts.k0, "needs k >= k0 = " + std::to_string(consts.k0));
         auto r = tree_bad_expectation_bound(p.n, p.delta, p.k, p.sigma, g);
         r.extras.emplace_back("C2", lv(c2));
         r.extras.emplace_back("k0", lv(consts.k0));
         r.extras.emplace_back("B0", lv(consts.b0));
         return with_threshold(r, name, p, consts.b0 * p.delta, true);
       }},
      {"growing-k-small",
       [](const std::string& name, const RegimeParams& p) {
         const double t = (1 + p.epsilon) * pw(p.n, 1.0 / (p.k * p.k)) * pw(p.delta, 1.0 / p.k) * p.k;
         return with_threshold(threshold_only(t), name, p, t, false);
       }},
      {"growing-k-log",
       [](const std::string& name, const RegimeParams& p) {
         need(p.delta >= 2, "needs Delta >= 2");
         const double c = p.k / std::log(p.delta);
         const double t = (1 + p.epsilon) * pw(p.n, 1.0 / (p.k * p.k)) * std::exp(1 / c) * p.k;
         auto r = with_threshold(threshold_only(t), name, p, t, false);
         r.extras.emplace_back("C", lv(c));
         return r;
       }},
      {"growing-k-large",
       [](const std::string& name, const RegimeParams& p) {
         const double t = (1 + p.epsilon) * pw(p.n, 1.0 / (p.k * p.k)) * p.k;
         return with_threshold(threshold_only(t), name, p, t, false);
       }},
      {"growing-k-moderate-degree",
       [](const std::string& name, const RegimeParams& p) {
         need(p.k >= 2, "needs k >= 2");
         need(p.alpha > 1 && p.alpha <= 3, "needs 1 < alpha <= 3");
         need(p.s > 2, "needs s > 2");
         const double t = (1 + p.epsilon) * pw(p.n, 1 / pw(p.k, (p.alpha + 1) / 2)) * pw(p.delta, p.s) * p.k;
         return with_threshold(summand_series(p), name, p, t, false);
       }},
      {"large-lists",
       [](const std::string& name, const RegimeParams& p) {
         const double t = (1 + p.epsilon) * pw(p.n, 1.0 / p.k) * p.delta * p.k;
         return with_threshold(star_expectation(p), name, p, t, false);
       }},
      {"large-lists-log",
       [](const std::string& name, const RegimeParams& p) {
         need(p.n >= 2, "needs n >= 2");
         const double c = p.k / std::log(p.n);
         const double t = (1 + p.epsilon) * c * std::exp(1 / c) * p.delta * std::log(p.n);
         auto r = with_threshold(star_expectation(p), name, p, t, false);
         r.extras.emplace_back("C", lv(c));
         return r;
       }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& regime_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

BoundReport regime_report(const std::string& name, const RegimeParams& p) {
  if (p.n < 1 || p.delta < 0 || p.k < 1 || p.sigma < p.k) throw RegimeError("needs n >= 1, Delta >= 0, 1 <= k <= sigma");
  for (const auto& [key, build] : table())
    if (key == name) {
      try {
        return build(name, p);
      } catch (const InvalidParameters& e) {
        throw RegimeError(name + ": " + e.what());
      }
    }
  throw RegimeError("unknown regime '" + name + "'");
}

std::vector<BoundReport> girth_regime_bounds(const RegimeParams& p) {
  std::vector<BoundReport> out;
  for (const auto& name : regime_names()) {
    try {
      out.push_back(regime_report(name, p));
    } catch (const RegimeError&) {
    }
  }
  return out;
}

}  // namespace listcolor
