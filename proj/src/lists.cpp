#include "listcolor/lists.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "listcolor/errors.hpp"

namespace listcolor {

ListAssignment::ListAssignment(int sigma, int k, const std::vector<std::vector<Color>>& lists)
    : sigma_(sigma), k_(k), n_(static_cast<int>(lists.size())) {
  if (k < 1 || sigma < 1) throw InvalidParameters("list size and sigma must be positive");
  if (k > sigma) throw InvalidParameters("list size k exceeds sigma");
  colors_.reserve(static_cast<std::size_t>(n_) * k_);
  for (int v = 0; v < n_; ++v) {
    auto l = lists[v];
    if (static_cast<int>(l.size()) != k)
      throw InvalidParameters("list of vertex " + std::to_string(v) + " has size " +
                              std::to_string(l.size()) + ", expected " + std::to_string(k));
    std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] < 1 || l[i] > sigma)
        throw InvalidParameters("colour " + std::to_string(l[i]) + " of vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(sigma));
      if (i > 0 && l[i] == l[i - 1])
        throw InvalidParameters("repeated colour in list of vertex " + std::to_string(v));
    }
    colors_.insert(colors_.end(), l.begin(), l.end());
  }
}

bool ListAssignment::contains(Vertex v, Color c) const { return position(v, c) >= 0; }

int ListAssignment::position(Vertex v, Color c) const {
  auto l = list(v);
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it == l.end() || *it != c) return -1;
  return static_cast<int>(it - l.begin());
}

ListAssignment ListAssignment::restricted(std::span<const Vertex> to_host) const {
  ListAssignment out;
  out.sigma_ = sigma_;
  out.k_ = k_;
  out.n_ = static_cast<int>(to_host.size());
  out.colors_.reserve(to_host.size() * k_);
  for (Vertex h : to_host) {
    auto l = list(h);
    out.colors_.insert(out.colors_.end(), l.begin(), l.end());
  }
  return out;
}

ListAssignment sample_assignment(int n, int k, int sigma, SeedSpec seed) {
  if (k < 1 || k > sigma) throw InvalidParameters("sample_assignment needs 1 <= k <= sigma");
  std::mt19937_64 rng(stream_seed(seed));
  // Partial Fisher-Yates: the first k slots after k swaps are a uniform
  // k-sample whatever the pool's current arrangement, so the pool is reused
  // across vertices without resetting.
  std::vector<Color> pool(sigma);
  for (int i = 0; i < sigma; ++i) pool[i] = i + 1;
  std::vector<std::vector<Color>> lists(n, std::vector<Color>(k));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, sigma - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    std::copy(pool.begin(), pool.begin() + k, lists[v].begin());
  }
  return ListAssignment(sigma, k, lists);
}

double prob_identical_lists(int clique_size, int k, int sigma) {
  if (clique_size < 1 || k < 1 || k > sigma) throw InvalidParameters("prob_identical_lists needs 1 <= k <= sigma");
  double log_choose = 0.0;
  for (int i = 0; i < k; ++i) log_choose += std::log(static_cast<double>(sigma - i)) - std::log(i + 1.0);
  return std::exp(-(clique_size - 1) * log_choose);
}

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool parse_int(std::string_view s, long long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

ListAssignment read_lists(std::string_view text, int n) {
  std::size_t line_no = 0, pos = 0;
  int sigma = -1, k = -1;
  bool header = false;
  std::vector<std::vector<Color>> lists(n);
  std::vector<bool> present(n, false);
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    std::istringstream in{std::string(line)};
    if (!header) {
      std::string a, b, extra;
      long long s = 0, kk = 0;
      if (!(in >> a >> b) || (in >> extra) || !a.starts_with("sigma=") || !b.starts_with("k=") ||
          !parse_int(std::string_view(a).substr(6), s) || !parse_int(std::string_view(b).substr(2), kk))
        fail("expected header 'sigma=<s> k=<k>'");
      if (kk < 1 || s < kk) fail("header needs 1 <= k <= sigma");
      sigma = static_cast<int>(s);
      k = static_cast<int>(kk);
      header = true;
      continue;
    }
    auto colon = line.find(':');
    long long v = 0;
    if (colon == std::string_view::npos || !parse_int(trim(line.substr(0, colon)), v))
      fail("expected '<vertex>: c1 ... ck'");
    if (v < 0 || v >= n) fail("vertex " + std::to_string(v) + " out of range");
    if (present[v]) fail("vertex " + std::to_string(v) + " listed twice");
    present[v] = true;
    std::istringstream cs{std::string(line.substr(colon + 1))};
    std::string tok;
    while (cs >> tok) {
      long long c = 0;
      if (!parse_int(tok, c)) fail("bad colour '" + tok + "' for vertex " + std::to_string(v));
      if (c < 1 || c > sigma)
        fail("colour " + std::to_string(c) + " of vertex " + std::to_string(v) + " outside 1.." +
             std::to_string(sigma));
      lists[v].push_back(static_cast<Color>(c));
    }
    auto sorted = lists[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("repeated colour in list of vertex " + std::to_string(v));
    if (static_cast<int>(lists[v].size()) != k)
      fail("list of vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
           " colours, expected " + std::to_string(k));
  }
  if (!header) throw ParseError("missing header 'sigma=<s> k=<k>'", line_no);
  for (int v = 0; v < n; ++v)
    if (!present[v]) throw ParseError("missing list for vertex " + std::to_string(v), line_no);
  return ListAssignment(sigma, k, lists);
}

ListAssignment read_lists(std::string_view text, const Graph& g) { return read_lists(text, g.order()); }

std::string write_lists(const ListAssignment& lists) {
  std::string out = "sigma=" + std::to_string(lists.sigma()) + " k=" + std::to_string(lists.k()) + "\n";
  for (int v = 0; v < lists.order(); ++v) {
    out += std::to_string(v) + ":";
    for (Color c : lists.list(v)) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

ListAssignment read_lists_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open list file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_lists(ss.str(), g);
}

}  // namespace listcolor
