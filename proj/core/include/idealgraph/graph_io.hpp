#pragma once

#include <string>
#include <string_view>

#include "idealgraph/graph.hpp"

namespace idealgraph {

/// Reads the JSON graph document:
///   {"vertices": ["v", ...],
///    "edges": [{"name": "e", "src": "v", "dst": "w", "mult": 1}, ...]}
/// where "mult" defaults to 1 and the string "omega" denotes countably many.
/// Rejects with Errc::malformed_document, Errc::dangling_endpoint,
/// Errc::duplicate_name, Errc::invalid_name or Errc::invalid_multiplicity.
Graph parse_graph(std::string_view text);

/// Canonical form: vertices and edges sorted by name, "mult" always present.
std::string emit_graph(const Graph& g);

Graph load_graph_file(const std::string& path);

}  // namespace idealgraph
