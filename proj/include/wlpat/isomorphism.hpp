#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlpat/graph.hpp"

namespace wlpat {

using BigInt = boost::multiprecision::cpp_int;

// Color-preserving isomorphism g -> h as a vertex map, found by
// individualization and joint 1-WL refinement.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// Stabilizer chain: orbits[i] is the orbit of base[i] under the pointwise
// stabilizer of base[0..i-1]. The group order is the product of orbit sizes.
struct AutomorphismChain {
  std::vector<Vertex> base;
  std::vector<std::vector<Vertex>> orbits;
  BigInt order() const;
};

AutomorphismChain automorphism_chain(const Graph& f);
BigInt automorphism_count(const Graph& f);

// Pairs (a, b) requiring phi(a) < phi(b). Among the injective homomorphisms
// phi: F -> G, exactly one per Aut(F)-orbit satisfies all of them.
std::vector<std::pair<Vertex, Vertex>> symmetry_conditions(const Graph& f);

}  // namespace wlpat
