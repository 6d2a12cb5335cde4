#pragma once

#include <string>

#include "tg/sposet.hpp"
#include "tg/torusgraph.hpp"

namespace tg {

// JSON file formats.  Numbers are serialized as decimal strings so that
// arbitrary-precision values survive; plain JSON integers are accepted on
// input.
//
// poset: {"rank_max": n, "elements": [{"id", "rank", "covers": [ids]}]}
//        with the bottom element implicit.
// graph: {"n": n, "vertices": [ids], "edges": [{"id", "ends": [v, w],
//        "alpha_from_first": [...], "alpha_from_second": [...]}]}

SimplicialPoset load_poset(const std::string& path);
void save_poset(const SimplicialPoset& P, const std::string& path);
SimplicialPoset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const SimplicialPoset& P);

TorusGraph load_graph(const std::string& path);
void save_graph(const TorusGraph& G, const std::string& path);
TorusGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const TorusGraph& G);

}  // namespace tg
