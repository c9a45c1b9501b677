#include "listcolor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "listcolor/cert_json.hpp"
#include "listcolor/errors.hpp"
#include "listcolor/graph.hpp"
#include "listcolor/harness.hpp"
#include "listcolor/lists.hpp"
#include "listcolor/moments.hpp"
#include "listcolor/pairs.hpp"
#include "listcolor/solver.hpp"
#include "listcolor/trees.hpp"
#include "listcolor/triples.hpp"

namespace listcolor {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::string>& bound_aliases() {
  static const std::map<std::string, std::string> table{
      {"eq:probcliques", "identical-cliques"},   {"eq:expect", "identical-cliques-exact"},
      {"eq:pathsum", "alternating-paths"},       {"lem:bad", "bad-triple-probability"},
      {"lem:numbersubgraphs", "triple-count"},   {"eq:chebyshev", "chebyshev"},
      {"lem:2bad", "pair-probability"},          {"lem:2numbersubgraphs", "pair-count"},
      {"eq:sista", "tree-bad"},
  };
  return table;
}

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names{
      "identical-cliques", "identical-cliques-exact", "alternating-paths", "bad-triple-probability",
      "triple-count",      "bad-triple-sum",          "chebyshev",         "pi-clique-union",
      "pair-probability",  "pair-count",              "pair-sum",          "tree-bad",
      "regimes"};
  return names;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("LISTCOLOR_SEED");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError("LISTCOLOR_SEED must be a non-negative integer");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

class BoundArgs {
 public:
  void add_int(CLI::App* app, const std::string& name, const std::string& help) {
    auto& slot = ints_[name];
    slot.opt = app->add_option("--" + name, slot.value, help);
  }
  void add_real(CLI::App* app, const std::string& name, const std::string& help) {
    auto& slot = reals_[name];
    slot.opt = app->add_option("--" + name, slot.value, help);
  }
  bool has(const std::string& name) const {
    if (auto it = ints_.find(name); it != ints_.end()) return it->second.opt->count() > 0;
    return reals_.at(name).opt->count() > 0;
  }
  std::int64_t i(const std::string& name, const std::string& bound) const {
    if (!has(name)) throw UsageError("--bound=" + bound + " needs --" + name);
    return ints_.at(name).value;
  }
  std::int64_t i_or(const std::string& name, std::int64_t fallback) const {
    return has(name) ? ints_.at(name).value : fallback;
  }
  double r(const std::string& name, const std::string& bound) const {
    if (!has(name)) throw UsageError("--bound=" + bound + " needs --" + name);
    return reals_.at(name).value;
  }
  std::optional<double> r_opt(const std::string& name) const {
    if (!has(name)) return std::nullopt;
    return reals_.at(name).value;
  }

 private:
  template <class T>
  struct Slot {
    T value{};
    CLI::Option* opt = nullptr;
  };
  std::map<std::string, Slot<std::int64_t>> ints_;
  std::map<std::string, Slot<double>> reals_;
};

RegimeParams regime_params(const BoundArgs& a, const std::string& name) {
  RegimeParams p;
  p.n = a.i("n", name);
  p.delta = a.i("delta", name);
  p.k = a.i("k", name);
  p.sigma = a.i("sigma", name);
  if (a.has("girth")) p.girth = static_cast<int>(a.i("girth", name));
  if (auto v = a.r_opt("s")) p.s = *v;
  if (auto v = a.r_opt("alpha")) p.alpha = *v;
  if (auto v = a.r_opt("epsilon")) p.epsilon = *v;
  return p;
}

std::vector<BoundReport> evaluate_bound(std::string name, const BoundArgs& a) {
  if (auto it = bound_aliases().find(name); it != bound_aliases().end()) name = it->second;
  const auto& b = name;
  if (b == "identical-cliques")
    return {expected_identical_cliques_bound(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b))};
  if (b == "identical-cliques-exact")
    return {expected_identical_cliques_exact(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b))};
  if (b == "alternating-paths")
    return {alternating_path_expectation(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b),
                                         a.i_or("r-min", 1), a.i("r-max", b))};
  if (b == "bad-triple-probability")
    return {bad_triple_probability_bound(a.i("m", b), a.i("delta", b), a.i("k", b), a.i("sigma", b))};
  if (b == "triple-count") return {proper_triple_count_bound(a.i("n", b), a.i("delta", b), a.i("m", b))};
  if (b == "bad-triple-sum") {
    std::optional<std::int64_t> lo;
    if (a.has("m-lo")) lo = a.i("m-lo", b);
    return {bad_triple_expectation_sum(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b), lo,
                                       a.r_opt("m-hi"))};
  }
  if (b == "chebyshev") {
    if (a.has("expectation") || a.has("pi")) return {chebyshev_lower_bound(a.r("expectation", b), a.r("pi", b))};
    const auto e = expected_identical_cliques_exact(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b));
    const auto pi = pi_bound_clique_union(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b));
    auto rep = chebyshev_lower_bound(e.numeric(), pi.numeric());
    rep.params.insert(rep.params.begin(), {{"n", double(a.i("n", b))}, {"delta", double(a.i("delta", b))},
                                           {"k", double(a.i("k", b))}, {"sigma", double(a.i("sigma", b))}});
    return {rep};
  }
  if (b == "pi-clique-union")
    return {pi_bound_clique_union(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b))};
  if (b == "pair-probability") return {pair_probability_bound(a.i("l", b), a.i("r", b), a.i("sigma", b))};
  if (b == "pair-count") return {pair_count_bound(a.i("n", b), a.i("delta", b), a.i("l", b), a.i("r", b))};
  if (b == "pair-sum")
    return {pair_expectation_sum(a.i("n", b), a.i("delta", b), a.i("sigma", b), a.i("l-max", b), a.i_or("l-min", 3))};
  if (b == "tree-bad")
    return {tree_bad_expectation_bound(a.i("n", b), a.i("delta", b), a.i("k", b), a.i("sigma", b),
                                       static_cast<int>(a.i("girth", b)))};
  if (b == "regimes") return girth_regime_bounds(regime_params(a, b));
  if (b.rfind("regime:", 0) == 0) return {regime_report(b.substr(7), regime_params(a, b))};
  throw UsageError("unknown bound '" + b + "'; see --list");
}

std::string format_value(double v) {
  std::ostringstream os;
  os << std::setprecision(5) << v;
  return os.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random list colouring toolkit", "listcolor"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Base seed (default: LISTCOLOR_SEED or 1)");
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->fallthrough();
  std::string family, gen_out, gen_path;
  std::int64_t gen_n = 0;
  std::map<std::string, std::string> gen_params;
  gen->add_option("--family", family,
                  "clique_union | power_cycle | complete_bipartite | complete_multipartite | cycle | complete | "
                  "petersen | file")
      ->required();
  gen->add_option("--n", gen_n, "Order")->check(CLI::NonNegativeNumber);
  for (const char* p : {"delta", "r", "a", "b", "parts", "size"})
    gen->add_option(std::string("--") + p, gen_params[p], std::string("Family parameter ") + p + " (expression in n)");
  gen->add_option("--path", gen_path, "Graph file for family 'file'");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "Sample a random list assignment");
  sample->fallthrough();
  std::string sample_graph, sample_out;
  int sample_n = -1, sample_k = 0, sample_sigma = 0;
  std::uint64_t sample_trial = 0;
  auto* sg_opt = sample->add_option("--graph", sample_graph, "Graph file");
  auto* sn_opt = sample->add_option("--n", sample_n, "Vertex count instead of a graph")->check(CLI::NonNegativeNumber);
  sg_opt->excludes(sn_opt);
  sample->add_option("--k", sample_k, "List size")->required();
  sample->add_option("--sigma", sample_sigma, "Colour universe size")->required();
  sample->add_option("--trial", sample_trial, "Trial index within the seed's stream");
  sample->add_option("--out", sample_out, "Output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Decide L-colourability");
  solve_cmd->fallthrough();
  std::string solve_graph, solve_lists;
  std::int64_t solve_timeout = 0;
  bool show_coloring = false;
  solve_cmd->add_option("--graph", solve_graph, "Graph file")->required();
  solve_cmd->add_option("--lists", solve_lists, "List file")->required();
  solve_cmd->add_option("--timeout-ms", solve_timeout, "Wall-clock budget, 0 = none")->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--coloring", show_coloring, "Print the colouring when one exists");

  // certify
  auto* certify = app.add_subcommand("certify", "Certificate of non-colourability as JSON");
  certify->fallthrough();
  std::string cert_graph, cert_lists, cert_kind = "all";
  certify->add_option("--graph", cert_graph, "Graph file")->required();
  certify->add_option("--lists", cert_lists, "List file")->required();
  certify->add_option("--kind", cert_kind, "bad_triple | two_bad_pair | tree_bad | all")
      ->check(CLI::IsMember({"bad_triple", "two_bad_pair", "tree_bad", "all"}));

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate expectation and probability bounds");
  bound->fallthrough();
  std::vector<std::string> bound_keys;
  bool list_bounds = false, value_only = false;
  bound->add_option("--bound", bound_keys, "Bound name (repeatable); see --list");
  bound->add_flag("--list", list_bounds, "List bound names");
  bound->add_flag("--value", value_only, "Print only the numeric value");
  BoundArgs bargs;
  for (const char* p : {"n", "delta", "k", "sigma", "m", "l", "r", "r-min", "r-max", "m-lo", "l-min", "l-max", "girth"})
    bargs.add_int(bound, p, std::string("Parameter ") + p);
  for (const char* p : {"m-hi", "expectation", "pi", "s", "alpha", "epsilon"})
    bargs.add_real(bound, p, std::string("Parameter ") + p);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a threshold sweep from a JSON config");
  sweep_cmd->fallthrough();
  std::string config_path, sweep_out;
  std::uint64_t sweep_trials = 0;
  sweep_cmd->add_option("--config", config_path, "Config file")->required();
  sweep_cmd->add_option("--output-dir", sweep_out, "Overrides output_dir");
  sweep_cmd->add_option("--trials", sweep_trials, "Overrides trials");

  // verify-lemmas
  auto* verify = app.add_subcommand("verify-lemmas", "Check certificate searches on a small-graph corpus");
  verify->fallthrough();
  CorpusSpec corpus;
  bool counting = false, serial = false;
  verify->add_option("--max-vertices", corpus.max_vertices, "Largest graph order")->check(CLI::Range(1, 8));
  verify->add_option("--assignments", corpus.assignments, "Assignments per (graph, k, sigma)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--ks", corpus.ks, "List sizes")->delimiter(',');
  verify->add_option("--sigmas", corpus.sigmas, "Universe sizes")->delimiter(',');
  verify->add_flag("--colorable-only", corpus.colorable_only, "Keep only colourable instances");
  verify->add_option("--min-girth", corpus.min_girth, "Skip graphs of smaller girth");
  verify->add_flag("--counting", counting, "Also check proper-triple counts");
  verify->add_flag("--serial", serial, "Single-threaded reference run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (seed_opt->count() == 0) seed = default_seed();
    if (threads > 0) omp_set_num_threads(threads);

    if (*gen) {
      FamilySpec f;
      f.name = family;
      f.path = gen_path;
      for (const auto& [key, text] : gen_params)
        if (!text.empty()) {
          try {
            f.params.emplace(key, ScalingExpr::parse(text));
          } catch (const ParseError& e) {
            throw UsageError("--" + key + ": " + e.what());
          }
        }
      emit(out, gen_out, write_graph(build_family(f, gen_n)));
      return 0;
    }

    if (*sample) {
      if (sample_graph.empty() && sample_n < 0) throw UsageError("sample needs --graph or --n");
      const int n = sample_graph.empty() ? sample_n : read_graph_file(sample_graph).order();
      emit(out, sample_out, write_lists(sample_assignment(n, sample_k, sample_sigma, SeedSpec{seed, sample_trial})));
      return 0;
    }

    if (*solve_cmd) {
      const Graph g = read_graph_file(solve_graph);
      const auto lists = read_lists_file(solve_lists, g);
      SolveLimits limits;
      if (solve_timeout > 0)
        limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(solve_timeout);
      const auto res = solve(g, lists, limits);
      switch (res.status) {
        case SolveStatus::Colorable:
          out << "COLORABLE\n";
          if (show_coloring)
            for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << res.coloring[v] << '\n';
          return 0;
        case SolveStatus::Uncolorable: out << "UNCOLORABLE\n"; return 0;
        case SolveStatus::Aborted: out << "TIMEOUT\n"; return 1;
      }
      return 1;
    }

    if (*certify) {
      const Graph g = read_graph_file(cert_graph);
      const auto lists = read_lists_file(cert_lists, g);
      nlohmann::json doc;
      doc["colorable"] = is_colorable(g, lists);
      nlohmann::json certs = nlohmann::json::array();
      if (!doc["colorable"].get<bool>()) {
        const bool all = cert_kind == "all";
        if (all || cert_kind == "bad_triple")
          if (auto c = find_bad_triple(g, lists)) certs.push_back(to_json(*c));
        if ((all || cert_kind == "two_bad_pair") && lists.k() == 2)
          if (auto c = find_2bad_pair(g, lists)) certs.push_back(to_json(*c));
        if (all || cert_kind == "tree_bad")
          if (auto c = find_tree_bad(g, lists)) certs.push_back(to_json(*c));
      }
      doc["certificates"] = certs;
      out << doc.dump() << '\n';
      return 0;
    }

    if (*bound) {
      if (list_bounds) {
        for (const auto& b : bound_names()) out << b << '\n';
        for (const auto& r : regime_names()) out << "regime:" << r << '\n';
        for (const auto& [alias, name] : bound_aliases()) out << alias << " -> " << name << '\n';
        return 0;
      }
      if (bound_keys.empty()) throw UsageError("bound needs --bound (or --list)");
      for (const auto& key : bound_keys)
        for (const auto& rep : evaluate_bound(key, bargs)) {
          if (value_only) out << format_value(rep.numeric()) << '\n';
          else out << rep.to_json().dump() << '\n';
        }
      return 0;
    }

    if (*sweep_cmd) {
      auto cfg = load_config(config_path);
      bool config_seed = false;
      try {
        config_seed = nlohmann::json::parse(slurp(config_path)).contains("seed");
      } catch (const nlohmann::json::exception&) {
      }
      if (seed_opt->count() > 0 || !config_seed) cfg.seed = seed;
      if (!sweep_out.empty()) cfg.output_dir = sweep_out;
      if (sweep_trials > 0) cfg.trials = sweep_trials;
      const auto res = sweep(cfg);
      out << res.summary.dump(2) << '\n';
      return 0;
    }

    if (*verify) {
      corpus.seed = seed;
      const auto rep = serial ? verify_lemmas_serial(corpus) : verify_lemmas(corpus);
      auto doc = rep.to_json();
      bool ok = rep.ok();
      if (counting) {
        const auto c = verify_counting_bound(corpus.max_vertices);
        doc["counting"] = c.to_json();
        ok = ok && c.violations.empty();
      }
      out << doc.dump(2) << '\n';
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace listcolor
