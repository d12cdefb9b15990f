#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlpat/counting.hpp"
#include "wlpat/graph.hpp"

namespace wlpat {

enum class Claim {
  count_differs,        // sub(F, G) != sub(F, H)
  containment_differs,  // G contains F, H does not
};
const char* to_string(Claim c);

struct WitnessPair {
  std::string name;
  Graph g;
  Graph h;
  Graph pattern;
  int level = 1;
  Claim claim = Claim::containment_differs;
  std::optional<BigInt> expected_g;
  std::optional<BigInt> expected_h;
};

struct WitnessReport {
  bool equivalent = false;
  // Set when G or H is colored: equivalence of the uncolored graphs.
  std::optional<bool> uncolored_equivalent;
  bool claim_holds = false;
  // Counts for count_differs, 0/1 containment for containment_differs.
  BigInt measured_g = 0;
  BigInt measured_h = 0;
  bool pass = false;
  std::string error;
};

WitnessReport verify(const WitnessPair& w, const CountOptions& opts = {});

// F is P3+P2, 2P3 or P3+2P2, possibly with isolated vertices.
WitnessPair table1_witness(const Graph& f);

// Star forests by arm list; arm 0 is an isolated vertex.
std::vector<std::size_t> star_forest_arms(const Graph& f);  // sorted descending; throws unless a star forest
bool is_basic_star_forest(std::vector<std::size_t> arms);
WitnessPair basic_star_forest_witness(const Graph& f);
WitnessPair basic_star_forest_witness(std::vector<std::size_t> arms);

// One step of the reduction from a star forest to a basic one.
struct ReductionStep {
  enum Kind { drop_component, trim_leaves } kind;
  std::size_t arm = 0;  // arm of the dropped component
};
std::vector<ReductionStep> star_forest_reduction(std::vector<std::size_t> arms);
WitnessPair star_forest_witness(const Graph& f);

struct CoveringWitness {
  Graph tree;
  Graph t_prime;
  Graph g;
  Graph h;
  std::vector<Vertex> projection;  // G -> T'
  std::vector<Vertex> diametral_path;
  WitnessPair pair() const;
};
CoveringWitness covering_witness(const Graph& tree);
// F a forest with a P4 subgraph.
WitnessPair forest_witness(const Graph& f);

// d-regular graph of girth >= g_min: catalog first, then seeded random search.
Graph high_girth_regular(std::size_t d, std::size_t g_min, std::uint64_t seed = 1);
WitnessPair no_cycle_witness(const Graph& f, std::uint64_t seed = 1);

WitnessPair matching_witness(std::size_t s, const CountOptions& opts = {});
WitnessPair long_cycle_witness(std::size_t s);
WitnessPair long_path_witness(std::size_t s);
WitnessPair unique_4clique_witness(const Graph& f);

// G' on 8n vertices: v -> v, v' -> n+v, v_i -> 2n+4v+(i-1), u -> 6n+v, u' -> 7n+v.
// G is Hamiltonian iff G' has a path on 6n+2 vertices.
Graph ham_to_longpath(const Graph& g);

// Refutations of membership. Throw GraphError when F is a member.
WitnessPair r1_refutation(const Graph& f, std::uint64_t seed = 1);
WitnessPair c1_refutation(const Graph& f, std::uint64_t seed = 1);

}  // namespace wlpat
