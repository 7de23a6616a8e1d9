// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gretl/graph.hpp"
#include "gretl/trace.hpp"

namespace gretl {

struct LoadedGraph {
  SchemaPtr schema;
  GraphPtr graph;
};

// Self-describing JSON document with top-level `schema` and `graph` keys.
// Loading validates the result or fails atomically (ParseError /
// ValidationError); saving emits sorted keys so output is byte-stable.
LoadedGraph load_graph(const std::string& path);
LoadedGraph load_graph_from_string(const std::string& text);

std::string save_graph_to_string(const Graph& graph);
void save_graph(const Graph& graph, const std::string& path);

struct DotConfig {
  std::string graph_name = "G";
};

// One node per vertex (class name plus any `name` attribute), one directed
// edge per edge (class name plus trigger/action when defined). Total.
std::string export_dot(const Graph& graph, const DotConfig& config = {});

// img maps as archetype-rendering -> target element id.
std::string export_trace_to_string(const TraceMaps& trace);
void export_trace(const TraceMaps& trace, const std::string& path);

}  // namespace gretl
