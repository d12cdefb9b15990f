#pragma once

#include <cstddef>
#include <vector>

#include "wlpat/graph.hpp"

namespace wlpat {

constexpr std::size_t kDefaultEnumerationCap = 8;

std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

// One representative per isomorphism class of graphs on n vertices, in a
// fixed order. Results are cached; throws GraphError if n exceeds the cap.
const std::vector<Graph>& enumerate_nonisomorphic(std::size_t n);

}  // namespace wlpat
