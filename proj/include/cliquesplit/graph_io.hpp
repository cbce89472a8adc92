#pragma once

#include <string>
#include <string_view>

#include "cliquesplit/graph.hpp"
#include "json.hpp"

namespace cliquesplit {

// DIMACS edge format: `c` comments, one `p edge <n> <m>` header, `e <u> <v>`
// lines with 1-indexed endpoints. Duplicate edges collapse; self-loops throw.
Graph parse_dimacs(std::string_view text);

// Header followed by edges sorted by (min endpoint, max endpoint).
std::string serialize_dimacs(const Graph& g);

// {"n": int, "edges": [[u, v], ...]} with 0-indexed endpoints.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Reads a graph file; JSON when the content starts with '{', DIMACS otherwise.
Graph load_graph_file(const std::string& path);

}  // namespace cliquesplit
