#include <cmath>
#include <exception>

#include <omp.h>

#include "listcolor/errors.hpp"
#include "listcolor/harness.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/pairs.hpp"
#include "listcolor/rng.hpp"
#include "listcolor/solver.hpp"
#include "listcolor/trees.hpp"
#include "listcolor/triples.hpp"

namespace listcolor {

std::string to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::Colorable: return "COLORABLE";
    case TrialStatus::Uncolorable: return "UNCOLORABLE";
    case TrialStatus::Timeout: return "TIMEOUT";
  }
  return "UNKNOWN";
}

Wilson wilson_interval(std::uint64_t successes, std::uint64_t total, double z) {
  if (total == 0) return {0.0, 0.5, 0.0, 1.0};
  const double t = static_cast<double>(total);
  const double p = static_cast<double>(successes) / t;
  const double denom = 1 + z * z / t;
  Wilson w;
  w.center = (p + z * z / (2 * t)) / denom;
  w.half_width = z * std::sqrt(p * (1 - p) / t + z * z / (4 * t * t)) / denom;
  w.low = std::max(0.0, w.center - w.half_width);
  w.high = std::min(1.0, w.center + w.half_width);
  if (successes == 0) w.low = 0.0;
  if (successes == total) w.high = 1.0;
  return w;
}

double PointResult::std_error() const {
  if (completed == 0) return 0.0;
  return std::sqrt(p_hat * (1 - p_hat) / static_cast<double>(completed));
}

std::uint64_t point_seed(std::uint64_t base_seed, std::int64_t n, int k, int sigma) {
  auto s = combine_seed(base_seed, static_cast<std::uint64_t>(n));
  s = combine_seed(s, static_cast<std::uint64_t>(k));
  return combine_seed(s, static_cast<std::uint64_t>(sigma));
}

namespace {

void validate(const Graph& g, const PointSpec& spec) {
  if (spec.trials == 0) throw InvalidParameters("trials must be positive");
  if (spec.k < 1 || spec.k > spec.sigma) throw InvalidParameters("need 1 <= k <= sigma");
  if (spec.k > 64) throw InvalidParameters("k above 64 is not supported");
  if (g.order() < 0) throw InvalidParameters("bad graph");
}

std::string certify(const Graph& g, const ListAssignment& lists, const CertificateOptions& opts) {
  try {
    if (opts.bad_triple && find_bad_triple(g, lists)) return "bad_triple";
    if (opts.two_bad_pair && lists.k() == 2 && find_2bad_pair(g, lists)) return "two_bad_pair";
    if (opts.tree_bad && lists.k() >= 2) {
      auto gg = girth(g);
      if (gg && *gg > 3 && find_tree_bad(g, lists)) return "tree_bad";
    }
  } catch (const GuardExceeded&) {
    return "guard";
  }
  return "none";
}

PointResult aggregate(const PointSpec& spec, std::vector<TrialRecord> records) {
  PointResult r;
  r.spec = spec;
  for (const auto& t : records) {
    if (t.status == TrialStatus::Timeout) {
      ++r.timeouts;
      continue;
    }
    ++r.completed;
    if (t.status == TrialStatus::Colorable) ++r.colorable;
  }
  r.records = std::move(records);
  r.p_hat = r.completed ? static_cast<double>(r.colorable) / static_cast<double>(r.completed) : 0.0;
  r.interval = wilson_interval(r.colorable, r.completed);
  r.completion_rate = static_cast<double>(r.completed) / static_cast<double>(spec.trials);
  return r;
}

}  // namespace

TrialRecord run_trial(const Graph& g, const PointSpec& spec, std::uint64_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  const SeedSpec seed{point_seed(spec.base_seed, spec.n, spec.k, spec.sigma), trial_index};
  TrialRecord rec;
  rec.n = spec.n;
  rec.k = spec.k;
  rec.sigma = spec.sigma;
  rec.trial_index = trial_index;
  rec.seed = stream_seed(seed);
  auto lists = sample_assignment(g, spec.k, spec.sigma, seed);
  SolveLimits limits;
  if (spec.budget.per_trial.count() > 0) limits.deadline = start + spec.budget.per_trial;
  limits.node_limit = spec.budget.node_limit;
  auto result = solve(g, lists, limits);
  rec.solve_nodes = result.stats.nodes;
  switch (result.status) {
    case SolveStatus::Colorable: rec.status = TrialStatus::Colorable; break;
    case SolveStatus::Uncolorable: rec.status = TrialStatus::Uncolorable; break;
    case SolveStatus::Aborted: rec.status = TrialStatus::Timeout; break;
  }
  if (spec.certificates.any()) rec.certificate = rec.status == TrialStatus::Uncolorable ? certify(g, lists, spec.certificates) : "";
  rec.wall_micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

PointResult run_point(const Graph& g, const PointSpec& spec) {
  validate(g, spec);
  std::vector<TrialRecord> records(spec.trials);
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(spec.trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      records[i] = run_trial(g, spec, static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(listcolor_point_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return aggregate(spec, std::move(records));
}

PointResult run_point_serial(const Graph& g, const PointSpec& spec) {
  validate(g, spec);
  std::vector<TrialRecord> records;
  records.reserve(spec.trials);
  for (std::uint64_t i = 0; i < spec.trials; ++i) records.push_back(run_trial(g, spec, i));
  return aggregate(spec, std::move(records));
}

Graph build_family(const FamilySpec& family, std::int64_t n) {
  auto param = [&](const std::string& key, std::optional<std::string> fallback = std::nullopt) -> int {
    auto it = family.params.find(key);
    std::int64_t v;
    if (it != family.params.end()) v = it->second.evaluate_int(static_cast<double>(n));
    else if (fallback) v = ScalingExpr::parse(*fallback).evaluate_int(static_cast<double>(n));
    else throw ConfigError("family '" + family.name + "' needs parameter '" + key + "'");
    if (v < 0 || v > 10'000'000) throw ConfigError("parameter '" + key + "' out of range");
    return static_cast<int>(v);
  };
  const std::string& f = family.name;
  if (n < 0 || n > 10'000'000) throw ConfigError("n out of range");
  const int size = static_cast<int>(n);
  try {
    if (f == "clique_union") return clique_union(size, param("delta"));
    if (f == "power_cycle") return power_cycle(size, param("r"));
    if (f == "complete_bipartite") return complete_bipartite(param("a", "n"), param("b", "n"));
    if (f == "complete_multipartite") return complete_multipartite(std::vector<int>(param("parts"), param("size", "n")));
    if (f == "cycle") return cycle_graph(size);
    if (f == "complete") return complete_graph(size);
    if (f == "petersen") return petersen();
    if (f == "file") {
      if (family.path.empty()) throw ConfigError("family 'file' needs a path");
      return read_graph_file(family.path);
    }
  } catch (const InvalidParameters& e) {
    throw ConfigError("family '" + f + "': " + e.what());
  }
  throw ConfigError("unknown graph family '" + f + "'");
}

}  // namespace listcolor
