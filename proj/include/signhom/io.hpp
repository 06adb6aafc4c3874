#pragma once

// Graph interchange: {"n": int, "edges": [[u, v, s], ...]} and Graphviz DOT.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "signhom/sgraph.hpp"

namespace signhom {

nlohmann::json graph_to_json(const SignifiedGraph& g);

/// Strict reader: unknown keys, bad signs, loops, repeated edges and
/// out-of-range vertices all throw std::invalid_argument.
SignifiedGraph graph_from_json(const nlohmann::json& doc);
SignifiedGraph parse_graph_json(std::string_view text);
SignifiedGraph read_graph_file(const std::string& path);

/// Negative edges are dashed. Labels, when given, name the vertices.
std::string graph_to_dot(const SignifiedGraph& g, const std::vector<std::string>& labels = {},
                         std::string_view name = "G");

}  // namespace signhom
