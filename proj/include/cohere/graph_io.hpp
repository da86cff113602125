#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "cohere/labeled_graph.hpp"

namespace cohere {

/// JSON graph document:
///   {"flavor": "graph_product" | "artin" | "coxeter",          (optional)
///    "vertices": [{"id": "a", "group": {"rank": 0, "torsion": [2]}}, ...],
///    "edges": [{"u": "a", "v": "b", "label": 3}, ...]}           (label defaults to 2)
/// "group" may be omitted when the flavor fixes it (artin: Z, coxeter: Z2).
LabeledGraph parse_graph_json(std::string_view text);

/// Undirected DOT subset: `graph name { ... }` with node statements carrying
/// group="Z2"|"Z"|"Z_d"|"Z^r", edge chains `a -- b -- c` with label=m, and
/// `node`/`edge` default attribute statements. A graph attribute
/// flavor=artin|coxeter supplies the default vertex group.
LabeledGraph parse_graph_dot(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON). Rejects a
/// UTF-8 byte-order mark.
LabeledGraph parse_graph(std::string_view text);

LabeledGraph load_graph(const std::filesystem::path& path);

nlohmann::ordered_json graph_to_json(const LabeledGraph& g);

}  // namespace cohere
