#include <doctest.h>

#include <cmath>
#include <map>

#include "listcolor/errors.hpp"
#include "listcolor/lists.hpp"

using namespace listcolor;

TEST_CASE("k = sigma gives full lists") {
  auto l = sample_assignment(petersen(), 4, 4, SeedSpec{9, 0});
  for (Vertex v = 0; v < 10; ++v) CHECK(std::vector<Color>(l.list(v).begin(), l.list(v).end()) == std::vector<Color>{1, 2, 3, 4});
}

TEST_CASE("sampler is deterministic") {
  auto g = clique_union(40, 3);
  auto a = sample_assignment(g, 3, 9, SeedSpec{123, 7});
  auto b = sample_assignment(g, 3, 9, SeedSpec{123, 7});
  auto c = sample_assignment(g, 3, 9, SeedSpec{123, 8});
  CHECK(a == b);
  CHECK(write_lists(a) == write_lists(b));
  CHECK_FALSE(a == c);
}

TEST_CASE("sampler marginals pass a chi-square test") {
  std::map<std::vector<Color>, int> freq;
  const int samples = 60000;
  for (int t = 0; t < samples; ++t) {
    auto l = sample_assignment(1, 2, 4, SeedSpec{2024, static_cast<std::uint64_t>(t)});
    freq[{l.list(0).begin(), l.list(0).end()}]++;
  }
  CHECK(freq.size() == 6);
  double chi2 = 0;
  const double expected = samples / 6.0;
  for (const auto& [s, c] : freq) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 15.086);  // 99% quantile, 5 degrees of freedom
}

TEST_CASE("two vertices are independent") {
  const int samples = 60000;
  int hits = 0;
  for (int t = 0; t < samples; ++t) {
    auto l = sample_assignment(2, 2, 4, SeedSpec{77, static_cast<std::uint64_t>(t)});
    hits += l.list(0)[0] == 1 && l.list(0)[1] == 2 && l.list(1)[0] == 3 && l.list(1)[1] == 4;
  }
  const double p = 1.0 / 36, se = std::sqrt(p * (1 - p) / samples);
  CHECK(std::abs(double(hits) / samples - p) < 3 * se);
}

TEST_CASE("sampler rejects k > sigma") {
  CHECK_THROWS_AS(sample_assignment(3, 4, 3, SeedSpec{}), InvalidParameters);
  CHECK_THROWS_AS(sample_assignment(3, 0, 3, SeedSpec{}), InvalidParameters);
}

TEST_CASE("probability of identical lists") {
  CHECK(prob_identical_lists(3, 2, 3) == doctest::Approx(1.0 / 9));
  CHECK(prob_identical_lists(2, 2, 5) == doctest::Approx(1.0 / 10));
  CHECK(prob_identical_lists(2, 3, 7) == doctest::Approx(1.0 / 35));
  CHECK(prob_identical_lists(3, 3, 3) == doctest::Approx(1.0));

  // all 27 triples of 2-subsets of {1,2,3}
  const std::vector<std::vector<int>> subsets{{1, 2}, {1, 3}, {2, 3}};
  int same = 0, total = 0;
  for (auto& a : subsets)
    for (auto& b : subsets)
      for (auto& c : subsets) {
        ++total;
        same += a == b && b == c;
      }
  CHECK(double(same) / total == doctest::Approx(prob_identical_lists(3, 2, 3)));
}

TEST_CASE("list text format") {
  auto p2 = path_graph(2);
  auto l = read_lists("sigma=3 k=2\n0: 1 2\n1: 2 3\n", p2);
  CHECK(l.sigma() == 3);
  CHECK(l.k() == 2);
  CHECK(l.contains(1, 3));
  CHECK(l.position(1, 3) == 1);
  CHECK(write_lists(l) == "sigma=3 k=2\n0: 1 2\n1: 2 3\n");
  CHECK(read_lists("sigma=3 k=2\n1: 3 2\n0: 2 1\n", p2) == l);
  CHECK_THROWS_AS(read_lists("sigma=3 k=2\n0: 1\n1: 2 3\n", p2), ParseError);
  CHECK_THROWS_AS(read_lists("sigma=3 k=2\n0: 0 1\n1: 2 3\n", p2), ParseError);
  CHECK_THROWS_AS(read_lists("sigma=3 k=2\n0: 1 2\n", p2), ParseError);
  CHECK_THROWS_AS(read_lists("sigma=3 k=2\n0: 1 4\n1: 2 3\n", p2), ParseError);
  CHECK_THROWS_AS(read_lists("0: 1 2\n1: 2 3\n", p2), ParseError);
  try {
    read_lists("sigma=3 k=2\n0: 1 2\n", p2);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
}

TEST_CASE("list assignment invariants") {
  CHECK_THROWS_AS(ListAssignment(3, 2, {{1, 1}}), InvalidParameters);
  CHECK_THROWS_AS(ListAssignment(3, 2, {{1, 4}}), InvalidParameters);
  CHECK_THROWS_AS(ListAssignment(2, 3, {{1, 2, 3}}), InvalidParameters);
  ListAssignment l(5, 3, {{5, 1, 3}, {2, 4, 1}});
  CHECK(l.list(0)[0] == 1);
  CHECK(l.list(0)[2] == 5);
  std::vector<Vertex> host{1};
  auto r = l.restricted(host);
  CHECK(r.order() == 1);
  CHECK(r.list(0)[1] == 2);
}
