#pragma once

#include <string>

#include <json.hpp>

#include "minorlab/graph.hpp"

namespace minorlab {

// JSON wire format: {"n": <int>, "edges": [[u,v], ...]} with 0-indexed
// endpoints; an optional "labels" array round-trips vertex labels.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// DIMACS: "p edge <n> <m>" followed by "e <u> <v>" lines, 1-indexed.
std::string graph_to_dimacs(const Graph& g);
Graph graph_from_dimacs(const std::string& text);

std::string graph_to_dot(const Graph& g);

// Dispatch on file content: DIMACS if a "p edge" line appears, else JSON.
Graph graph_from_text(const std::string& text);

}  // namespace minorlab
