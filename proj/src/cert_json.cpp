#include "listcolor/cert_json.hpp"

namespace listcolor {

using nlohmann::json;

json coloring_json(const Coloring& phi) {
  json out = json::array();
  for (std::size_t v = 0; v < phi.size(); ++v)
    if (phi[v] != kUncolored) out.push_back({v, phi[v]});
  return out;
}

json to_json(const BadTriple& cert) {
  return {{"kind", "bad_triple"},
          {"vertices", cert.triple.vertices.ids()},
          {"root", cert.triple.root},
          {"rank", cert.triple.rank},
          {"coloring", coloring_json(cert.witness)}};
}

json to_json(const OrderedSeq& seq) {
  return {{"kind", seq.kind == SeqKind::Cycle ? "cycle" : "lollipop"},
          {"path", seq.path},
          {"close_to", seq.path.empty() ? -1 : seq.path[seq.close_to]}};
}

json to_json(const ProperPair& cert) {
  return {{"kind", "two_bad_pair"},
          {"h1", to_json(cert.h1)},
          {"h2", to_json(cert.h2)},
          {"first_colors", {cert.c1, cert.c2}},
          {"nonconsecutive", count_nonconsecutive(cert)}};
}

json to_json(const TreeBad& cert) {
  const auto& t = cert.tree;
  json nodes = json::array();
  for (const auto& n : t.nodes)
    nodes.push_back({{"vertex", n.vertex}, {"parent", n.parent}, {"depth", n.depth}, {"semiroot_side", n.semiroot_side}});
  json semiroot = nullptr;
  if (auto u = t.semiroot()) semiroot = *u;
  return {{"kind", "tree_bad"},
          {"parity", t.parity == TreeParity::Odd ? "odd" : "even"},
          {"girth", t.girth},
          {"k", t.k},
          {"root", t.root()},
          {"semiroot", semiroot},
          {"nodes", nodes},
          {"coloring", coloring_json(cert.witness)}};
}

}  // namespace listcolor
