#pragma once

#include <optional>

#include "wlpat/graph.hpp"

namespace wlpat {

// Partition-based searches refuse patterns with more non-isolated vertices.
constexpr std::size_t kPartitionSearchMaxOrder = 12;

struct Classification {
  bool in_C1 = false;
  bool in_R1 = false;
  bool tw_le_2 = false;
  bool htw_le_1 = false;
  bool htw_le_2 = false;
  // A partition with F/P isomorphic to K4, present when htw_le_2 is false.
  std::optional<VertexPartition> evidence;
};

enum class ForbiddenPattern { two_P2, three_P2, P3_plus_P2, P3_plus_two_P2, two_P3 };
Graph forbidden_pattern_graph(ForbiddenPattern p);

Graph strip_isolated(const Graph& f);

// Edgeless patterns (after stripping) count as members of C1, R1 and htw <= 1.
bool is_star(const Graph& f);  // K_{1,s}, s >= 1, up to isolated vertices
bool in_C1(const Graph& f);
bool in_R1(const Graph& f);
bool htw_le_1(const Graph& f);

// No K4 minor. Throws GraphError above kPartitionSearchMaxOrder.
bool treewidth_le_2(const Graph& f);

struct HtwResult {
  bool value = true;
  std::optional<VertexPartition> evidence;
};
// No partition with a K4 quotient. Throws GraphError above kPartitionSearchMaxOrder.
HtwResult htw_le_2(const Graph& f);

bool tau_le_2(const Graph& h);

// Membership of h in forb(p) decided by the explicit case lists.
bool pattern_free_characterized(const Graph& h, ForbiddenPattern p);

Classification classify(const Graph& f);

}  // namespace wlpat
