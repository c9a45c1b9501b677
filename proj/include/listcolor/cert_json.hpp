#pragma once

#include <json.hpp>

#include "listcolor/pairs.hpp"
#include "listcolor/trees.hpp"
#include "listcolor/triples.hpp"

namespace listcolor {

nlohmann::json to_json(const BadTriple& cert);
nlohmann::json to_json(const ProperPair& cert);
nlohmann::json to_json(const TreeBad& cert);
nlohmann::json to_json(const OrderedSeq& seq);
nlohmann::json coloring_json(const Coloring& phi);

}  // namespace listcolor
