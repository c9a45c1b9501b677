#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "listcolor/errors.hpp"
#include "listcolor/graph.hpp"

namespace listcolor {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, long long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph read_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<int> n;
  std::set<Edge> seen;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      long long value = 0;
      if (!line.starts_with("n=") || !parse_int(trim(line.substr(2)), value) || value < 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n=<count>'", line_no);
      n = static_cast<int>(value);
      continue;
    }
    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    long long u = 0, v = 0;
    if (!(in >> a >> b) || (in >> extra) || !parse_int(a, u) || !parse_int(b, v))
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'", line_no);
    if (u < 0 || v < 0 || u >= *n || v >= *n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range", line_no);
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop", line_no);
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!n) throw ParseError("missing header 'n=<count>'", line_no);
  return Graph(*n, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_graph(ss.str());
}

}  // namespace listcolor
