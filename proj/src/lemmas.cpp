#include <cmath>
#include <exception>
#include <sstream>

#include "listcolor/errors.hpp"
#include "listcolor/graph_enum.hpp"
#include "listcolor/harness.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/oracle.hpp"
#include "listcolor/pairs.hpp"
#include "listcolor/rng.hpp"
#include "listcolor/solver.hpp"
#include "listcolor/trees.hpp"
#include "listcolor/triples.hpp"

namespace listcolor {

namespace {

constexpr std::size_t kKeptFailures = 100;

void record(LemmaSuite& s, bool ok, const std::string& where, const std::string& what) {
  ++s.checked;
  if (ok) {
    ++s.passed;
    return;
  }
  if (s.failures.size() < kKeptFailures) s.failures.push_back(where + ": " + what);
}

void merge(LemmaSuite& into, const LemmaSuite& from) {
  into.checked += from.checked;
  into.passed += from.passed;
  for (const auto& f : from.failures)
    if (into.failures.size() < kKeptFailures) into.failures.push_back(f);
}

void merge(LemmaReport& into, const LemmaReport& from) {
  into.graphs += from.graphs;
  into.instances += from.instances;
  into.uncolorable += from.uncolorable;
  merge(into.solver_oracle, from.solver_oracle);
  merge(into.bad_triple, from.bad_triple);
  merge(into.two_bad_pair, from.two_bad_pair);
  merge(into.tree_bad, from.tree_bad);
  into.odd_tree_hits += from.odd_tree_hits;
  into.even_tree_hits += from.even_tree_hits;
}

template <class F>
void guarded(LemmaSuite& s, const std::string& where, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    record(s, false, where, std::string("exception: ") + e.what());
  }
}

void check_instance(const Graph& g, const ListAssignment& lists, const std::optional<int>& gg, const std::string& where,
                    bool colorable_only, LemmaReport& rep) {
  const bool oracle = brute_force_colorable(g, lists);
  if (colorable_only && !oracle) return;
  ++rep.instances;
  const bool colorable = is_colorable(g, lists);
  record(rep.solver_oracle, colorable == oracle, where, colorable ? "solver says colorable" : "solver says uncolorable");
  if (oracle) return;
  ++rep.uncolorable;

  guarded(rep.bad_triple, where, [&] {
    auto cert = find_bad_triple(g, lists);
    if (!cert) return record(rep.bad_triple, false, where, "no bad triple found");
    record(rep.bad_triple, is_bad_triple(g, lists, cert->triple), where, "bad triple fails validation");
  });

  if (lists.k() == 2) {
    guarded(rep.two_bad_pair, where, [&] {
      auto cert = find_2bad_pair(g, lists);
      if (!cert) return record(rep.two_bad_pair, false, where, "no 2-bad pair found");
      record(rep.two_bad_pair, is_2bad_pair(g, lists, *cert), where, "2-bad pair fails validation");
    });
  }

  if (gg && *gg > 3) {
    guarded(rep.tree_bad, where, [&] {
      auto cert = find_tree_bad(g, lists);
      if (!cert) return record(rep.tree_bad, false, where, "no tree-bad tree found");
      const bool ok = is_rooted_proper_tree(g, cert->tree) && is_tree_bad(g, lists, cert->tree);
      record(rep.tree_bad, ok, where, "tree-bad tree fails validation");
      if (ok) ++(cert->tree.parity == TreeParity::Odd ? rep.odd_tree_hits : rep.even_tree_hits);
    });
  }
}

LemmaReport check_graph(const Graph& g, std::size_t index, const CorpusSpec& spec) {
  LemmaReport rep;
  const auto gg = girth(g);
  if (spec.min_girth > 0 && gg && *gg < spec.min_girth) return rep;
  rep.graphs = 1;
  const auto code = canonical_code(g);
  for (int k : spec.ks) {
    for (int sigma : spec.sigmas) {
      if (sigma < k) continue;
      auto base = combine_seed(combine_seed(combine_seed(spec.seed, index), static_cast<std::uint64_t>(k)),
                               static_cast<std::uint64_t>(sigma));
      for (int a = 0; a < spec.assignments; ++a) {
        auto lists = sample_assignment(g, k, sigma, SeedSpec{base, static_cast<std::uint64_t>(a)});
        std::ostringstream where;
        where << "n=" << g.order() << " code=" << code << " k=" << k << " sigma=" << sigma << " assignment=" << a;
        check_instance(g, lists, gg, where.str(), spec.colorable_only, rep);
      }
    }
  }
  return rep;
}

void validate(const CorpusSpec& spec) {
  if (spec.max_vertices < 1 || spec.max_vertices > 8) throw InvalidParameters("corpus max_vertices must lie in [1, 8]");
  if (spec.assignments < 0) throw InvalidParameters("assignments must be non-negative");
  for (int k : spec.ks)
    if (k < 1 || k > 8) throw InvalidParameters("corpus k must lie in [1, 8]");
  for (int s : spec.sigmas)
    if (s < 1 || s > 64) throw InvalidParameters("corpus sigma must lie in [1, 64]");
}

void finish(LemmaReport& rep) {
  std::ostringstream note;
  if (rep.uncolorable == 0) note << "no uncolorable instances; certificate suites pass vacuously";
  else note << rep.uncolorable << " uncolorable of " << rep.instances << " instances";
  if (rep.tree_bad.checked > 0)
    note << "; tree certificates: " << rep.odd_tree_hits << " odd, " << rep.even_tree_hits << " even";
  rep.coverage_note = note.str();
}

nlohmann::json suite_json(const LemmaSuite& s) {
  return {{"checked", s.checked}, {"passed", s.passed}, {"failures", s.failures}};
}

}  // namespace

nlohmann::json LemmaReport::to_json() const {
  return {{"ok", ok()},
          {"graphs", graphs},
          {"instances", instances},
          {"uncolorable", uncolorable},
          {"solver_oracle", suite_json(solver_oracle)},
          {"bad_triple", suite_json(bad_triple)},
          {"two_bad_pair", suite_json(two_bad_pair)},
          {"tree_bad", suite_json(tree_bad)},
          {"odd_tree_hits", odd_tree_hits},
          {"even_tree_hits", even_tree_hits},
          {"coverage_note", coverage_note}};
}

LemmaReport verify_lemmas(const CorpusSpec& spec) {
  validate(spec);
  const auto graphs = connected_graphs_up_to(spec.max_vertices);
  std::vector<LemmaReport> parts(graphs.size());
  const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) parts[i] = check_graph(graphs[i], static_cast<std::size_t>(i), spec);
  LemmaReport rep;
  for (const auto& p : parts) merge(rep, p);
  finish(rep);
  return rep;
}

LemmaReport verify_lemmas_serial(const CorpusSpec& spec) {
  validate(spec);
  const auto graphs = connected_graphs_up_to(spec.max_vertices);
  LemmaReport rep;
  for (std::size_t i = 0; i < graphs.size(); ++i) merge(rep, check_graph(graphs[i], i, spec));
  finish(rep);
  return rep;
}

nlohmann::json CountingReport::to_json() const {
  return {{"ok", violations.empty()}, {"graphs", graphs}, {"checks", checks}, {"violations", violations}};
}

CountingReport verify_counting_bound(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 8) throw InvalidParameters("max_vertices must lie in [1, 8]");
  CountingReport rep;
  for (const auto& g : connected_graphs_up_to(max_vertices)) {
    ++rep.graphs;
    const int n = g.order();
    const double delta = g.max_degree();
    const auto counts = count_proper_triples(g, n);
    for (int m = 1; m <= n; ++m) {
      ++rep.checks;
      const double bound = n * std::pow(delta, m - 1) * std::tgamma(m);
      if (static_cast<double>(counts[m]) > bound) {
        std::ostringstream os;
        os << "n=" << n << " code=" << canonical_code(g) << " m=" << m << " count=" << counts[m] << " bound=" << bound;
        rep.violations.push_back(os.str());
      }
    }
  }
  return rep;
}

}  // namespace listcolor
