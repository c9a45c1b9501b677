#include <doctest.h>

#include <cmath>

#include "listcolor/errors.hpp"
#include "listcolor/logvalue.hpp"
#include "listcolor/moments.hpp"
#include "listcolor/trees.hpp"

using namespace listcolor;

TEST_CASE("log values") {
  for (double x : {1e-300, 1e-20, 0.5, 1.0, 3.0, 12345.678, 1e200}) {
    auto v = LogValue::from(x);
    CHECK(std::abs(v.value() - x) <= 1e-12 * x);
  }
  CHECK(LogValue::from(0).is_zero());
  CHECK((LogValue::from(2) + LogValue::from(3)).value() == doctest::Approx(5));
  CHECK((LogValue::from(2) * LogValue::from(3)).value() == doctest::Approx(6));
  CHECK((LogValue::from(3) / LogValue::from(2)).value() == doctest::Approx(1.5));
  CHECK(LogValue::from(2).pow(10).value() == doctest::Approx(1024));
  CHECK((LogValue::zero() + LogValue::from(4)).value() == doctest::Approx(4));
  CHECK_THROWS_AS(LogValue::from(-1), InvalidParameters);
  CHECK_THROWS_AS(LogValue::from(1) / LogValue::zero(), InvalidParameters);

  auto huge = LogValue::from_log(5000), tiny = LogValue::from_log(-5000);
  CHECK(tiny < huge);
  CHECK(huge * tiny == LogValue::one());
  CHECK(std::isinf(huge.value()));
  CHECK(LogValue::from(1e300) > LogValue::from(1e-300));
  CHECK(approx_equal(LogValue::from(1.0), LogValue::from(1.0 + 1e-13)));
  CHECK_FALSE(approx_equal(LogValue::from(1.0), LogValue::from(1.0 + 1e-9)));
}

TEST_CASE("binomials") {
  CHECK(binomial_exact(10, 3) == 120);
  CHECK(binomial_exact(60, 30) == 118264581564861424ULL);
  CHECK(log_binomial(60, 30).value() == doctest::Approx(118264581564861424.0));
  CHECK(log_binomial(5, 7).is_zero());
  CHECK(log_binomial(5, -1).is_zero());
  for (int n = 0; n <= 62; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(approx_equal(log_binomial(n, k), LogValue::from(static_cast<double>(binomial_exact(n, k))), 1e-12));
  // lgamma path against the summed-log path
  CHECK(approx_equal(log_binomial(5000, 2500), log_binomial(5000, 2500), 1e-12));
  CHECK(std::abs(log_binomial(100000, 50000).log() - (std::lgamma(100001.0) - 2 * std::lgamma(50001.0))) < 1e-6);
  CHECK(log_factorial(5).value() == doctest::Approx(120));
}

TEST_CASE("identical-list cliques") {
  CHECK(expected_identical_cliques_bound(10, 2, 2, 3).numeric() == doctest::Approx(40.0 / 9));
  CHECK(expected_identical_cliques_bound(10, 0, 2, 3).value.is_zero());
  CHECK(expected_identical_cliques_bound(1, 1, 1, 1).numeric() == doctest::Approx(1));

  auto e = expected_identical_cliques_exact(60, 4, 2, 6);
  CHECK(e.numeric() == doctest::Approx(0.533333333333));
  CHECK(e.interpretation == Interpretation::Expectation);
  CHECK(expected_identical_cliques_exact(5, 4, 4, 4).numeric() == doctest::Approx(1));
  CHECK(expected_identical_cliques_exact(10, 2, 3, 5).value.is_zero());
  CHECK(expected_identical_cliques_exact(120, 4, 2, 6).numeric() ==
        doctest::Approx(2 * expected_identical_cliques_exact(60, 4, 2, 6).numeric()));
  auto j = e.to_json();
  CHECK(j["params"]["n"] == 60.0);
  CHECK(j["value"].get<double>() == doctest::Approx(0.53333).epsilon(1e-4));
}

TEST_CASE("alternating path sum") {
  auto r = alternating_path_expectation(100, 3, 2, 50, 7, 100);
  double direct = 0;
  for (int i = 7; i <= 100; ++i) direct += 100 * std::pow(3.0, i - 1) * std::pow(2.0, 2 * i) / std::pow(50.0, i - 1);
  CHECK(r.numeric() == doctest::Approx(direct).epsilon(1e-10));
  CHECK(r.numeric() == doctest::Approx(0.1006).epsilon(1e-3));
  CHECK(r.extra("ratio")->value() == doctest::Approx(0.24));
  CHECK_FALSE(r.divergent);
  CHECK(alternating_path_expectation(100, 3, 2, 50, 9, 8).value.is_zero());
  auto d = alternating_path_expectation(100, 3, 2, 12, 1, 10);
  CHECK(d.divergent);
  CHECK(d.extra("ratio")->value() == doctest::Approx(1));
}

TEST_CASE("bad triple probability") {
  CHECK(bad_triple_probability_bound(4, 3, 2, 5).numeric() == doctest::Approx(8.1));
  CHECK(bad_triple_probability_bound(1, 4, 2, 7).numeric() == doctest::Approx(6.0 / 21));
  for (int m = 1; m <= 6; ++m)
    for (int delta = 2; delta <= 5; ++delta)
      for (int k = 2; k <= delta; ++k)
        for (int sigma = k + 1; sigma <= 40; ++sigma)
          CHECK(bad_triple_probability_bound(m, delta, k, sigma).value <
                bad_triple_probability_bound(m, delta, k, sigma - 1).value);
  CHECK_THROWS(bad_triple_probability_bound(3, 1, 2, 5));
}

TEST_CASE("proper triple counts") {
  CHECK(proper_triple_count_bound(3, 2, 3).numeric() == doctest::Approx(24));
  CHECK(proper_triple_count_bound(17, 5, 1).numeric() == doctest::Approx(17));
  CHECK(std::isfinite(proper_triple_count_bound(1000000, 1000, 5000).value.log()));
}

TEST_CASE("bad triple expectation sum") {
  auto base = bad_triple_expectation_sum(1000, 3, 2, 200);
  for (int sigma = 201; sigma <= 260; sigma += 7) {
    auto next = bad_triple_expectation_sum(1000, 3, 2, sigma);
    CHECK(next.value < base.value);
    base = next;
  }
  CHECK(bad_triple_expectation_sum(1000, 3, 2, 200, 10, 9.0).value.is_zero());
  // a single term is the triple count with Delta squared times the probability bound
  auto one = bad_triple_expectation_sum(1000, 3, 2, 200, 5, 5.0);
  auto term = proper_triple_count_bound(1000, 9, 5).value * bad_triple_probability_bound(5, 3, 2, 200).value;
  CHECK(approx_equal(one.value, term, 1e-9));
  // huge upper limits are truncated with a tail bound
  auto big = bad_triple_expectation_sum(1000000, 10, 3, 1000000);
  CHECK(big.extra("terms_summed").has_value());
}

TEST_CASE("chebyshev") {
  CHECK(chebyshev_lower_bound(10, 0).numeric() == doctest::Approx(0.9));
  CHECK(chebyshev_lower_bound(1, 0).numeric() == doctest::Approx(0));
  CHECK(chebyshev_lower_bound(0, 0).numeric() == doctest::Approx(0));
  double prev = 0;
  for (double e = 2; e < 1e6; e *= 3) {
    double b = chebyshev_lower_bound(e, std::sqrt(e)).numeric();
    CHECK(b >= prev);
    prev = b;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("pi bound") {
  CHECK(pi_bound_clique_union(60, 4, 2, 6).numeric() == doctest::Approx(12 * (5.0 / 3375 + 1.0 / 50625)));
  CHECK(pi_bound_clique_union(60, 4, 2, 6).numeric() == doctest::Approx(0.01801).epsilon(1e-3));
  CHECK(pi_bound_clique_union(60, 4, 4, 6).value.is_zero());
  for (int n : {60, 200, 1125})
    for (int sigma = 4; sigma <= 12; ++sigma) {
      auto e = expected_identical_cliques_exact(n, 4, 2, sigma).value;
      CHECK(pi_bound_clique_union(n, 4, 2, sigma).value <= e * e + e);
    }
}

TEST_CASE("pair bounds") {
  CHECK(pair_probability_bound(3, 0, 5).numeric() == doctest::Approx(0.02));
  for (int sigma = 3; sigma <= 12; ++sigma)
    for (int r = 0; r < 3; ++r) {
      auto a = pair_probability_bound(4, r, sigma).value, b = pair_probability_bound(4, r + 1, sigma).value;
      if (sigma > 5) CHECK(b < a);
      else if (sigma < 5) CHECK(b > a);
      else CHECK(approx_equal(a, b, 1e-12));
    }
  CHECK(pair_probability_bound(3, 0, 1000000).numeric() < 1e-10);
  CHECK(pair_count_bound(5, 2, 3, 0).numeric() == doctest::Approx(160));
  for (int r = 1; r <= 3; ++r) CHECK(pair_count_bound(5, 2, 3, 0).value <= pair_count_bound(5, 2, 3, r).value);

  CHECK(pair_expectation_sum(100, 2, 40, 2).value.is_zero());
  CHECK(pair_expectation_sum(100, 2, 8, 20).divergent);
  // slope in sigma approaches -4 when sigma is much larger than Delta
  auto lo = pair_expectation_sum(1000, 2, 10000, 50), hi = pair_expectation_sum(1000, 2, 20000, 50);
  CHECK((hi.value.log() - lo.value.log()) / std::log(2.0) == doctest::Approx(-4).epsilon(0.01));
}

TEST_CASE("tree bound") {
  CHECK(tree_leaf_count(3, 5) == 6);
  auto r = tree_bad_expectation_bound(1000, 3, 3, 50, 5);
  CHECK(r.extra("simplified").has_value());
  for (int sigma = 10; sigma <= 1000; sigma += 10)
    for (int g : {4, 5, 6, 7}) {
      auto t = tree_bad_expectation_bound(1000, 3, 3, sigma, g);
      CHECK(t.value <= *t.extra("simplified"));
    }
  // sigma = n^{1/(Q-1)} Delta t: the bound vanishes as t grows
  const double q = static_cast<double>(Q(3, 5));
  double prev = INFINITY;
  for (double t = 1; t <= 64; t *= 2) {
    const auto sigma = static_cast<std::int64_t>(std::pow(1e6, 1 / (q - 1)) * 4 * t);
    double v = tree_bad_expectation_bound(1000000, 4, 3, sigma, 5).extra("simplified")->log();
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < std::log(1e-6));
}

TEST_CASE("regimes") {
  CHECK(girth_exponent_P(3, 5) == 35);
  CHECK(Q(4, 5) == 17);
  CHECK(girth_exponent_P(3, 4) == 17);

  RegimeParams p{100000, 5, 3, 60, 4};
  auto g4 = regime_report("girth-bounded-degree", p);
  REQUIRE(g4.threshold);
  CHECK(*g4.threshold == doctest::Approx(std::pow(1e5, 1.0 / 17) * std::pow(5.0, 2.0)));

  RegimeParams q{100000, 5, 2, 60, 4};
  auto prop3 = regime_report("two-lists-girth", q);
  CHECK(*prop3.threshold == doctest::Approx(std::pow(1e5, 0.2) * 5));

  auto c = loglog_girth_constants(1.0);
  CHECK(c.k0 == 9);
  CHECK(c.b0 == doctest::Approx(81 * std::exp(3.5)));

  CHECK_THROWS_AS(regime_report("two-lists", RegimeParams{1000, 3, 3, 30}), RegimeError);
  CHECK_THROWS_AS(regime_report("girth", RegimeParams{1000, 3, 3, 30}), RegimeError);
  CHECK_THROWS_AS(regime_report("no-such-regime", RegimeParams{1000, 3, 3, 30}), RegimeError);

  auto all = girth_regime_bounds(RegimeParams{10000, 4, 2, 400, 5});
  CHECK(all.size() >= 4);
  for (const auto& r : all) {
    CHECK(r.threshold.has_value());
    CHECK(r.clears_threshold.has_value());
  }
  CHECK(regime_names().size() == 15);
}
