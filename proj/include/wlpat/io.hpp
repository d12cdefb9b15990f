#pragma once

#include <string>
#include <string_view>

#include "wlpat/graph.hpp"

namespace wlpat {

// graph6 for n <= 62. Colors are dropped.
std::string to_graph6(const Graph& g);
// Throws GraphError naming the byte offset of the first problem.
Graph from_graph6(std::string_view text);

// Text format: "n k", then k lines "u v", then optional lines "c v color".
std::string to_text(const Graph& g);
Graph from_text(std::string_view text);

}  // namespace wlpat
