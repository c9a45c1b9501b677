#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "listcolor/graph.hpp"
#include "listcolor/scaling.hpp"

namespace listcolor {

enum class TrialStatus { Colorable, Uncolorable, Timeout };
std::string to_string(TrialStatus s);

struct CertificateOptions {
  bool bad_triple = false;
  bool two_bad_pair = false;
  bool tree_bad = false;
  bool any() const { return bad_triple || two_bad_pair || tree_bad; }
};

struct TrialBudget {
  std::chrono::milliseconds per_trial{5000};  // 0 = unlimited
  std::uint64_t node_limit = 0;               // 0 = unlimited
};

struct TrialRecord {
  std::int64_t n = 0;
  int k = 0;
  int sigma = 0;
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;  // seed of the trial's generator
  TrialStatus status = TrialStatus::Colorable;
  std::uint64_t solve_nodes = 0;
  std::string certificate;  // kind found on an uncolourable trial, "none", or empty
  std::int64_t wall_micros = 0;
};

struct Wilson {
  double center = 0;
  double half_width = 0;
  double low = 0;
  double high = 0;
};
/// Score interval; z defaults to the 95% quantile.
Wilson wilson_interval(std::uint64_t successes, std::uint64_t total, double z = 1.959964);

struct PointSpec {
  std::int64_t n = 0;
  int k = 0;
  int sigma = 0;
  std::uint64_t trials = 0;
  std::uint64_t base_seed = 0;
  TrialBudget budget;
  CertificateOptions certificates;
};

struct PointResult {
  PointSpec spec;
  std::vector<TrialRecord> records;  // trial-index order
  std::uint64_t completed = 0;
  std::uint64_t colorable = 0;
  std::uint64_t timeouts = 0;
  double p_hat = 0;  // over completed trials
  Wilson interval;
  double completion_rate = 0;
  double std_error() const;
};

/// Seed shared by every trial of one grid point.
std::uint64_t point_seed(std::uint64_t base_seed, std::int64_t n, int k, int sigma);

/// One seeded trial: sample lists, solve, optionally certify.
TrialRecord run_trial(const Graph& g, const PointSpec& spec, std::uint64_t trial_index);

/// Trials run in parallel; records and aggregates do not depend on the
/// thread count. Throws InvalidParameters for zero trials.
PointResult run_point(const Graph& g, const PointSpec& spec);
/// Single-threaded reference for run_point.
PointResult run_point_serial(const Graph& g, const PointSpec& spec);

struct FamilySpec {
  std::string name;
  std::map<std::string, ScalingExpr> params;
  std::string path;  // for "file"
};

/// Graph of the family at size n. Throws ConfigError for unknown families
/// or missing parameters.
Graph build_family(const FamilySpec& family, std::int64_t n);

struct ExperimentConfig {
  FamilySpec family;
  std::vector<std::int64_t> n_values;
  ScalingExpr k;
  std::vector<ScalingExpr> sigma;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  TrialBudget budget;
  CertificateOptions certificates;
  std::string output_dir;
  bool timing = false;  // adds wall_micros to records.csv
};

/// Throws ConfigError with the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

struct Crossing {
  std::int64_t n = 0;
  std::optional<double> sigma;  // p-hat = 1/2 by linear interpolation
};

struct MonotoneViolation {
  std::int64_t n = 0;
  int sigma_before = 0;
  int sigma_after = 0;
  double drop = 0;
};

struct SweepResult {
  std::vector<PointResult> points;  // sorted by (n, sigma)
  std::vector<Crossing> crossings;
  std::vector<MonotoneViolation> violations;  // drops beyond two standard errors
  std::string records_csv;
  nlohmann::json summary;
};

inline constexpr const char* kRecordsHeader = "# listcolor records v1";

std::string records_csv(const std::vector<PointResult>& points, bool timing);

/// Runs every (n, sigma) grid cell and writes records.csv and summary.json
/// into output_dir when it is non-empty.
SweepResult sweep(const ExperimentConfig& config);

struct CorpusSpec {
  int max_vertices = 6;
  int assignments = 500;
  std::vector<int> ks{2, 3};
  std::vector<int> sigmas{3, 4};
  std::uint64_t seed = 1;
  bool colorable_only = false;  // keep only L-colourable instances
  int min_girth = 0;            // skip graphs with smaller girth (forests always pass)
};

struct LemmaSuite {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct LemmaReport {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::uint64_t uncolorable = 0;
  LemmaSuite solver_oracle;
  LemmaSuite bad_triple;
  LemmaSuite two_bad_pair;
  LemmaSuite tree_bad;
  std::uint64_t odd_tree_hits = 0;
  std::uint64_t even_tree_hits = 0;
  std::string coverage_note;
  bool ok() const { return solver_oracle.ok() && bad_triple.ok() && two_bad_pair.ok() && tree_bad.ok(); }
  nlohmann::json to_json() const;
};

/// Solver against brute force on every instance; on uncolourable ones the
/// bad-triple, 2-bad-pair (k = 2) and tree-bad (girth > 3) searches must
/// succeed and their certificates must re-validate.
LemmaReport verify_lemmas(const CorpusSpec& spec);
LemmaReport verify_lemmas_serial(const CorpusSpec& spec);

struct CountingReport {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

/// Exhaustive proper-triple counts against n Delta^{m-1} (m-1)! for every
/// connected graph up to max_vertices and every m.
CountingReport verify_counting_bound(int max_vertices);

}  // namespace listcolor
