#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <omp.h>

#include "listcolor/errors.hpp"
#include "listcolor/harness.hpp"
#include "listcolor/lists.hpp"

using namespace listcolor;
using nlohmann::json;

namespace {

PointSpec point(std::int64_t n, int k, int sigma, std::uint64_t trials, std::uint64_t seed = 1) {
  PointSpec s;
  s.n = n;
  s.k = k;
  s.sigma = sigma;
  s.trials = trials;
  s.base_seed = seed;
  return s;
}

json small_config() {
  return json{{"family", {{"name", "clique_union"}, {"params", {{"delta", 2}}}}},
              {"n", {30, 60}},
              {"k", 2},
              {"sigma", {{"from", 2}, {"to", 10}, {"step", 2}}},
              {"trials", 300},
              {"seed", 11}};
}

}  // namespace

TEST_CASE("forced identical lists never colour triangles") {
  auto r = run_point(clique_union(15, 2), point(15, 2, 2, 1000));
  CHECK(r.completed == 1000);
  CHECK(r.p_hat == 0.0);
  CHECK(r.interval.low == 0.0);
}

TEST_CASE("single triangle estimate") {
  auto r = run_point(complete_graph(3), point(3, 2, 3, 100000, 2024));
  const double p = 8.0 / 9, se = std::sqrt(p * (1 - p) / 100000);
  CHECK(std::abs(r.p_hat - p) < 3 * se);
  CHECK(r.interval.low < p);
  CHECK(r.interval.high > p);
  CHECK(r.completion_rate == 1.0);
}

TEST_CASE("identical lists on a fixed clique") {
  for (auto [k, sigma] : {std::pair{2, 4}, std::pair{3, 5}}) {
    const int trials = 40000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      auto l = sample_assignment(k + 1, k, sigma, SeedSpec{99, static_cast<std::uint64_t>(t)});
      bool same = true;
      for (Vertex v = 1; v <= k; ++v)
        for (int i = 0; i < k; ++i) same = same && l.list(v)[i] == l.list(0)[i];
      hits += same;
    }
    const double p = prob_identical_lists(k + 1, k, sigma), se = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(double(hits) / trials - p) < 3 * se);
  }
}

TEST_CASE("run point validation") {
  CHECK_THROWS_AS(run_point(complete_graph(3), point(3, 2, 3, 0)), InvalidParameters);
  CHECK_THROWS_AS(run_point(complete_graph(3), point(3, 4, 3, 10)), InvalidParameters);
}

TEST_CASE("wilson interval") {
  auto w = wilson_interval(5, 10);
  CHECK(w.center == doctest::Approx(0.5));
  CHECK(w.low == doctest::Approx(0.2366).epsilon(1e-3));
  CHECK(w.high == doctest::Approx(0.7634).epsilon(1e-3));
  auto z = wilson_interval(0, 10);
  CHECK(z.low == 0.0);
  CHECK(z.high == doctest::Approx(0.2775).epsilon(1e-3));
}

TEST_CASE("records do not depend on the thread count") {
  auto g = clique_union(60, 4);
  auto spec = point(60, 2, 6, 2000, 5);
  spec.certificates.bad_triple = true;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  auto one = run_point(g, spec);
  omp_set_num_threads(4);
  auto four = run_point(g, spec);
  omp_set_num_threads(saved);
  auto serial = run_point_serial(g, spec);
  CHECK(records_csv({one}, false) == records_csv({four}, false));
  CHECK(records_csv({one}, false) == records_csv({serial}, false));
  CHECK(one.colorable == four.colorable);
  for (std::size_t i = 0; i < one.records.size(); ++i) CHECK(one.records[i].trial_index == i);
}

TEST_CASE("trials beyond the budget are counted as timeouts") {
  auto g = complete_multipartite({5, 5, 5, 5});
  auto spec = point(20, 3, 6, 50);
  spec.budget.node_limit = 1;
  auto r = run_point(g, spec);
  CHECK(r.timeouts > 0);
  CHECK(r.completed + r.timeouts == 50);
  CHECK(r.completion_rate == doctest::Approx(double(r.completed) / 50));
  if (r.completed > 0) CHECK(r.p_hat == doctest::Approx(double(r.colorable) / r.completed));
  for (const auto& t : r.records)
    if (t.status == TrialStatus::Timeout) CHECK(t.solve_nodes >= 1);
}

TEST_CASE("certificates on failed trials") {
  auto spec = point(3, 2, 3, 500);
  spec.certificates.bad_triple = true;
  for (const auto& t : run_point(complete_graph(3), spec).records)
    CHECK(t.certificate == (t.status == TrialStatus::Uncolorable ? "bad_triple" : ""));
  spec.certificates = {false, true, false};
  for (const auto& t : run_point(complete_graph(3), spec).records)
    if (t.status == TrialStatus::Uncolorable) CHECK(t.certificate == "two_bad_pair");
  spec.certificates = {false, false, true};
  spec.k = 2;
  spec.n = 5;
  for (const auto& t : run_point(cycle_graph(5), spec).records)
    if (t.status == TrialStatus::Uncolorable) CHECK(t.certificate == "tree_bad");
}

TEST_CASE("graph families") {
  auto fam = [](std::string name, std::map<std::string, std::string> params = {}) {
    FamilySpec f;
    f.name = std::move(name);
    for (auto& [k, v] : params) f.params.emplace(k, ScalingExpr::parse(v));
    return f;
  };
  CHECK(build_family(fam("clique_union", {{"delta", "4"}}), 60) == clique_union(60, 4));
  CHECK(build_family(fam("complete_bipartite"), 30) == complete_bipartite(30, 30));
  CHECK(build_family(fam("complete_bipartite", {{"a", "2"}}), 5) == complete_bipartite(2, 5));
  CHECK(build_family(fam("power_cycle", {{"r", "floor: log(n)"}}), 20) == power_cycle(20, 2));
  CHECK(build_family(fam("complete_multipartite", {{"parts", "3"}, {"size", "2"}}), 0) ==
        complete_multipartite({2, 2, 2}));
  CHECK(build_family(fam("petersen"), 10) == petersen());
  CHECK(build_family(fam("cycle"), 7) == cycle_graph(7));
  CHECK(build_family(fam("complete"), 4) == complete_graph(4));
  CHECK_THROWS_AS(build_family(fam("clique_union"), 60), ConfigError);
  CHECK_THROWS_AS(build_family(fam("mystery"), 60), ConfigError);
  CHECK_THROWS_AS(build_family(fam("file"), 60), ConfigError);
  CHECK_THROWS_AS(build_family(fam("clique_union", {{"delta", "100"}}), 60), ConfigError);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(parse_config(small_config()));
  auto c = parse_config(small_config());
  CHECK(c.sigma.size() == 5);
  CHECK(c.trials == 300);
  CHECK(c.budget.per_trial == std::chrono::milliseconds(5000));

  auto bad = small_config();
  bad["sigma"] = json::array();
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad["n"] = json::array();
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad["trials"] = 0;
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad["k"] = "n";
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad["sigma"] = {"3*("};
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad["certificates"] = {"witchcraft"};
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  bad = small_config();
  bad.erase("family");
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/missing.json"), ConfigError);

  auto expr = small_config();
  expr["sigma"] = {"floor: n^(1/4) * 2", "2*n^(1/4)*2"};
  auto e = parse_config(expr);
  CHECK(e.sigma.size() == 2);
}

TEST_CASE("sweep output") {
  auto dir = std::filesystem::temp_directory_path() / "listcolor_sweep_test";
  std::filesystem::remove_all(dir);
  auto cfg = parse_config(small_config());
  cfg.output_dir = dir.string();
  auto a = sweep(cfg);
  auto b = sweep(cfg);
  CHECK(a.records_csv == b.records_csv);
  CHECK(a.points.size() == 10);
  CHECK(a.records_csv.rfind(std::string(kRecordsHeader) + "\nn,k,sigma,trial_index,seed,status,solve_nodes,certificate\n", 0) == 0);
  for (std::size_t i = 1; i < a.points.size(); ++i) {
    const auto& p = a.points[i - 1].spec;
    const auto& q = a.points[i].spec;
    CHECK(std::pair(p.n, p.sigma) < std::pair(q.n, q.sigma));
  }
  CHECK(a.violations.empty());
  REQUIRE(a.crossings.size() == 2);
  for (const auto& c : a.crossings) {
    REQUIRE(c.sigma.has_value());
    CHECK(*c.sigma > 2);
    CHECK(*c.sigma < 10);
  }
  std::ifstream csv(dir / "records.csv");
  std::string text((std::istreambuf_iterator<char>(csv)), std::istreambuf_iterator<char>());
  CHECK(text == a.records_csv);
  std::ifstream sum(dir / "summary.json");
  auto j = json::parse(sum);
  CHECK(j["points"].size() == 10);
  CHECK(j["monotone"] == true);

  cfg.timing = true;
  auto t = sweep(cfg);
  CHECK(t.records_csv.find(",wall_micros\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("crossing interpolation") {
  json doc{{"family", "complete"}, {"n", 3}, {"k", 2}, {"sigma", {2, 3, 4}}, {"trials", 2000}, {"seed", 3}};
  auto r = sweep(parse_config(doc));
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[0].p_hat == 0.0);
  const auto& a = r.points[0];
  const auto& b = r.points[1];
  REQUIRE(r.crossings[0].sigma.has_value());
  CHECK(*r.crossings[0].sigma == doctest::Approx(2 + (0.5 - a.p_hat) / (b.p_hat - a.p_hat)));
}

TEST_CASE("lemma suites on the default corpus") {
  auto rep = verify_lemmas(CorpusSpec{});
  CHECK(rep.ok());
  CHECK(rep.uncolorable > 0);
  CHECK(rep.solver_oracle.checked == rep.instances);
  CHECK(rep.bad_triple.checked == rep.uncolorable);
  CHECK(rep.to_json()["ok"] == true);

  CorpusSpec small;
  small.max_vertices = 5;
  small.assignments = 40;
  auto serial = verify_lemmas_serial(small);
  auto parallel = verify_lemmas(small);
  CHECK(serial.to_json() == parallel.to_json());
}

TEST_CASE("colourable-only corpus passes vacuously") {
  CorpusSpec spec;
  spec.max_vertices = 5;
  spec.assignments = 50;
  spec.colorable_only = true;
  auto rep = verify_lemmas(spec);
  CHECK(rep.ok());
  CHECK(rep.uncolorable == 0);
  CHECK(rep.bad_triple.checked == 0);
  CHECK(rep.coverage_note.find("vacuous") != std::string::npos);
}

TEST_CASE("girth-4 corpus reaches even trees") {
  CorpusSpec spec;
  spec.max_vertices = 7;
  spec.assignments = 200;
  spec.ks = {2};
  spec.sigmas = {2, 3};
  spec.min_girth = 4;
  auto rep = verify_lemmas(spec);
  CHECK(rep.ok());
  CHECK(rep.even_tree_hits >= 1);
  CHECK(rep.tree_bad.checked == rep.uncolorable);
}

TEST_CASE("counting bound on small graphs") {
  auto rep = verify_counting_bound(6);
  CHECK(rep.violations.empty());
  CHECK(rep.graphs == 143);
}
