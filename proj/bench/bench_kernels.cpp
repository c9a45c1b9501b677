#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "listcolor/graph.hpp"
#include "listcolor/harness.hpp"

using namespace listcolor;
using Clock = std::chrono::steady_clock;

template <class F>
static double seconds(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  const int corpus_n = argc > 2 ? std::atoi(argv[2]) : 6;
  std::printf("threads: %d\n", omp_get_max_threads());

  const Graph g = clique_union(200, 4);
  PointSpec spec;
  spec.n = 200;
  spec.k = 2;
  spec.sigma = 12;
  spec.trials = trials;
  spec.base_seed = 7;
  spec.budget.per_trial = std::chrono::milliseconds(0);

  PointResult serial, parallel;
  const double ts = seconds([&] { serial = run_point_serial(g, spec); });
  const double tp = seconds([&] { parallel = run_point(g, spec); });
  std::printf("run_point        trials=%llu  serial %.3fs  parallel %.3fs  speedup %.2fx  p_hat %.4f/%.4f\n",
              static_cast<unsigned long long>(trials), ts, tp, ts / tp, serial.p_hat, parallel.p_hat);

  CorpusSpec corpus;
  corpus.max_vertices = corpus_n;
  corpus.assignments = 50;
  LemmaReport rs, rp;
  const double ls = seconds([&] { rs = verify_lemmas_serial(corpus); });
  const double lp = seconds([&] { rp = verify_lemmas(corpus); });
  std::printf("verify_lemmas    n<=%d  serial %.3fs  parallel %.3fs  speedup %.2fx  instances %llu/%llu\n", corpus_n,
              ls, lp, ls / lp, static_cast<unsigned long long>(rs.instances),
              static_cast<unsigned long long>(rp.instances));

  const bool same = serial.colorable == parallel.colorable && rs.uncolorable == rp.uncolorable;
  std::printf("results match: %s\n", same ? "yes" : "no");
  return same ? 0 : 1;
}
