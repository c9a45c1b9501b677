#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "listcolor/errors.hpp"
#include "listcolor/harness.hpp"

namespace listcolor {

namespace {

using nlohmann::json;

ScalingExpr expr_of(const json& v, const std::string& key) {
  try {
    if (v.is_string()) return ScalingExpr::parse(v.get<std::string>());
    if (v.is_number_integer()) return ScalingExpr::parse(std::to_string(v.get<std::int64_t>()));
    if (v.is_number()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      return ScalingExpr::parse(os.str());
    }
  } catch (const ParseError& e) {
    throw ConfigError("'" + key + "': " + e.what() + " at offset " + std::to_string(e.offset()));
  }
  throw ConfigError("'" + key + "' must be a number or an expression string");
}

template <class T>
T integer_of(const json& doc, const std::string& key, T fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw ConfigError("'" + key + "' must be a non-negative integer");
  return v.get<T>();
}

std::int64_t eval_at(const ScalingExpr& e, std::int64_t n, const std::string& what) {
  try {
    return e.evaluate_int(static_cast<double>(n));
  } catch (const InvalidParameters& err) {
    throw ConfigError(what + " at n=" + std::to_string(n) + ": " + err.what());
  }
}

std::vector<int> sigma_grid(const ExperimentConfig& c, std::int64_t n) {
  std::vector<int> out;
  for (const auto& s : c.sigma) {
    auto v = eval_at(s, n, "sigma '" + s.text() + "'");
    if (v < 1 || v > 1'000'000) throw ConfigError("sigma out of range at n=" + std::to_string(n));
    out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int k_at(const ExperimentConfig& c, std::int64_t n) {
  auto v = eval_at(c.k, n, "k '" + c.k.text() + "'");
  if (v < 1 || v > 64) throw ConfigError("k must lie in [1, 64] at n=" + std::to_string(n));
  return static_cast<int>(v);
}

void validate(const ExperimentConfig& c) {
  if (c.n_values.empty()) throw ConfigError("'n' grid is empty");
  if (c.sigma.empty()) throw ConfigError("'sigma' grid is empty");
  if (c.trials == 0) throw ConfigError("'trials' must be positive");
  for (auto n : c.n_values) {
    if (n < 1) throw ConfigError("'n' values must be positive");
    const int k = k_at(c, n);
    for (int s : sigma_grid(c, n))
      if (k > s) throw ConfigError("k exceeds sigma at n=" + std::to_string(n) + ", sigma=" + std::to_string(s));
  }
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
  if (!out) throw Error("cannot write " + p.string());
}

json point_json(const PointResult& p) {
  return {{"n", p.spec.n},
          {"k", p.spec.k},
          {"sigma", p.spec.sigma},
          {"trials", p.spec.trials},
          {"completed", p.completed},
          {"colorable", p.colorable},
          {"timeouts", p.timeouts},
          {"completion_rate", p.completion_rate},
          {"p_hat", p.p_hat},
          {"std_error", p.std_error()},
          {"interval", {{"level", 0.95}, {"low", p.interval.low}, {"high", p.interval.high},
                        {"half_width", p.interval.half_width}}}};
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;

  if (!doc.contains("family")) throw ConfigError("missing 'family'");
  const auto& fam = doc.at("family");
  if (fam.is_string()) {
    c.family.name = fam.get<std::string>();
  } else if (fam.is_object()) {
    if (!fam.contains("name") || !fam.at("name").is_string()) throw ConfigError("'family.name' must be a string");
    c.family.name = fam.at("name").get<std::string>();
    if (fam.contains("params")) {
      if (!fam.at("params").is_object()) throw ConfigError("'family.params' must be an object");
      for (const auto& [key, v] : fam.at("params").items()) c.family.params.emplace(key, expr_of(v, "family.params." + key));
    }
    if (fam.contains("path")) {
      if (!fam.at("path").is_string()) throw ConfigError("'family.path' must be a string");
      c.family.path = fam.at("path").get<std::string>();
    }
  } else {
    throw ConfigError("'family' must be a string or an object");
  }

  if (!doc.contains("n")) throw ConfigError("missing 'n'");
  const auto& ns = doc.at("n");
  if (ns.is_number_integer()) {
    c.n_values.push_back(ns.get<std::int64_t>());
  } else if (ns.is_array()) {
    for (const auto& v : ns) {
      if (!v.is_number_integer()) throw ConfigError("'n' entries must be integers");
      c.n_values.push_back(v.get<std::int64_t>());
    }
  } else {
    throw ConfigError("'n' must be an integer or an array of integers");
  }

  if (!doc.contains("k")) throw ConfigError("missing 'k'");
  c.k = expr_of(doc.at("k"), "k");

  if (!doc.contains("sigma")) throw ConfigError("missing 'sigma'");
  const auto& sg = doc.at("sigma");
  if (sg.is_array()) {
    for (std::size_t i = 0; i < sg.size(); ++i) c.sigma.push_back(expr_of(sg[i], "sigma[" + std::to_string(i) + "]"));
  } else if (sg.is_object()) {
    const auto from = integer_of<std::int64_t>(sg, "from", -1);
    const auto to = integer_of<std::int64_t>(sg, "to", -1);
    const auto step = integer_of<std::int64_t>(sg, "step", 1);
    if (from < 1 || to < from || step < 1) throw ConfigError("'sigma' range needs 1 <= from <= to and step >= 1");
    if ((to - from) / step > 100'000) throw ConfigError("'sigma' range too long");
    for (auto s = from; s <= to; s += step) c.sigma.push_back(ScalingExpr::parse(std::to_string(s)));
  } else {
    c.sigma.push_back(expr_of(sg, "sigma"));
  }

  c.trials = integer_of<std::uint64_t>(doc, "trials", 0);
  c.seed = integer_of<std::uint64_t>(doc, "seed", 1);

  if (doc.contains("budget")) {
    const auto& b = doc.at("budget");
    if (!b.is_object()) throw ConfigError("'budget' must be an object");
    c.budget.per_trial = std::chrono::milliseconds(integer_of<std::int64_t>(b, "per_trial_ms", 5000));
    c.budget.node_limit = integer_of<std::uint64_t>(b, "node_limit", 0);
  }

  if (doc.contains("certificates")) {
    const auto& cs = doc.at("certificates");
    if (!cs.is_array()) throw ConfigError("'certificates' must be an array");
    for (const auto& v : cs) {
      const auto name = v.is_string() ? v.get<std::string>() : std::string();
      if (name == "bad_triple") c.certificates.bad_triple = true;
      else if (name == "two_bad_pair") c.certificates.two_bad_pair = true;
      else if (name == "tree_bad") c.certificates.tree_bad = true;
      else throw ConfigError("unknown certificate kind in 'certificates'");
    }
  }

  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) throw ConfigError("'output_dir' must be a string");
    c.output_dir = doc.at("output_dir").get<std::string>();
  }
  if (doc.contains("timing")) {
    if (!doc.at("timing").is_boolean()) throw ConfigError("'timing' must be a boolean");
    c.timing = doc.at("timing").get<bool>();
  }

  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  auto c = parse_config(doc);
  if (c.family.name == "file" && !c.family.path.empty()) {
    std::filesystem::path p(c.family.path);
    if (p.is_relative()) c.family.path = (std::filesystem::path(path).parent_path() / p).string();
  }
  return c;
}

std::string records_csv(const std::vector<PointResult>& points, bool timing) {
  std::ostringstream os;
  os << kRecordsHeader << '\n';
  os << "n,k,sigma,trial_index,seed,status,solve_nodes,certificate";
  if (timing) os << ",wall_micros";
  os << '\n';
  std::vector<const PointResult*> order;
  for (const auto& p : points) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return std::pair(a->spec.n, a->spec.sigma) < std::pair(b->spec.n, b->spec.sigma);
  });
  for (const auto* p : order) {
    for (const auto& r : p->records) {
      os << r.n << ',' << r.k << ',' << r.sigma << ',' << r.trial_index << ',' << r.seed << ',' << to_string(r.status)
         << ',' << r.solve_nodes << ',' << r.certificate;
      if (timing) os << ',' << r.wall_micros;
      os << '\n';
    }
  }
  return os.str();
}

SweepResult sweep(const ExperimentConfig& config) {
  validate(config);
  SweepResult out;
  std::vector<std::int64_t> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  for (auto n : ns) {
    const Graph g = build_family(config.family, n);
    const int k = k_at(config, n);
    const auto sigmas = sigma_grid(config, n);
    const std::size_t first = out.points.size();
    for (int s : sigmas) {
      PointSpec spec;
      spec.n = n;
      spec.k = k;
      spec.sigma = s;
      spec.trials = config.trials;
      spec.base_seed = config.seed;
      spec.budget = config.budget;
      spec.certificates = config.certificates;
      out.points.push_back(run_point(g, spec));
    }

    Crossing crossing{n, std::nullopt};
    for (std::size_t i = first; i + 1 < out.points.size(); ++i) {
      const auto& a = out.points[i];
      const auto& b = out.points[i + 1];
      if (!crossing.sigma && a.p_hat < 0.5 && b.p_hat >= 0.5) {
        const double t = (0.5 - a.p_hat) / (b.p_hat - a.p_hat);
        crossing.sigma = a.spec.sigma + t * (b.spec.sigma - a.spec.sigma);
      }
      const double tol = 2 * std::sqrt(a.std_error() * a.std_error() + b.std_error() * b.std_error());
      if (b.p_hat < a.p_hat - tol) out.violations.push_back({n, a.spec.sigma, b.spec.sigma, a.p_hat - b.p_hat});
    }
    out.crossings.push_back(crossing);
  }

  out.records_csv = records_csv(out.points, config.timing);

  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : out.points) pts.push_back(point_json(p));
  nlohmann::json cross = nlohmann::json::array();
  for (const auto& c : out.crossings)
    cross.push_back({{"n", c.n}, {"sigma", c.sigma ? nlohmann::json(*c.sigma) : nlohmann::json(nullptr)}});
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : out.violations)
    viol.push_back({{"n", v.n}, {"sigma_before", v.sigma_before}, {"sigma_after", v.sigma_after}, {"drop", v.drop}});
  std::uint64_t timeouts = 0;
  for (const auto& p : out.points) timeouts += p.timeouts;
  out.summary = {{"family", config.family.name},
                 {"k", config.k.text()},
                 {"trials", config.trials},
                 {"seed", config.seed},
                 {"points", pts},
                 {"crossings", cross},
                 {"crossing_note", "sigma where p_hat reaches 1/2, linear interpolation on the sigma grid"},
                 {"monotone", out.violations.empty()},
                 {"violations", viol},
                 {"timeouts", timeouts}};

  if (!config.output_dir.empty()) {
    std::filesystem::path dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / "records.csv", out.records_csv);
    write_file(dir / "summary.json", out.summary.dump(2) + "\n");
  }
  return out;
}

}  // namespace listcolor
