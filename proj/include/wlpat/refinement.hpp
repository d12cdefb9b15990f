#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wlpat/graph.hpp"

namespace wlpat {

// 1-WL stable coloring of a single graph. Cells are ordered by color,
// and colors are dense ids 0..cells-1.
struct StablePartition {
  std::vector<Color> vertex_color;
  std::vector<std::vector<Vertex>> cells;
  std::vector<Color> cell_color;
  // degree_matrix[i][j]: neighbors in cells[j] of any vertex of cells[i].
  std::vector<std::vector<std::size_t>> degree_matrix;
  std::size_t rounds = 0;
};

// Stable coloring of V^2 (pair (u,v) at index u*n+v).
struct PairColoring {
  std::size_t n = 0;
  std::vector<Color> color;
  std::size_t round_count = 0;
  std::size_t class_count = 0;
  Color at(Vertex u, Vertex v) const { return color[u * n + v]; }
};

// Stable coloring of V^3 (triple (a,b,c) at index (a*n+b)*n+c).
struct TripleColoring {
  std::size_t n = 0;
  std::vector<Color> color;
  std::size_t round_count = 0;
  std::size_t class_count = 0;
  Color at(Vertex a, Vertex b, Vertex c) const { return color[(a * n + b) * n + c]; }
};

// Joint k-WL refinement of several graphs with one shared color dictionary.
// colors[i] has v(G_i)^k entries. Stops after the first round in which the
// number of classes over all graphs did not grow.
struct JointColoring {
  int k = 1;
  std::vector<std::vector<Color>> colors;
  std::size_t rounds = 0;
  std::size_t palette = 0;
};

JointColoring joint_refine(std::span<const Graph* const> graphs, int k);
// 1-WL from explicit initial vertex colors (one vector per graph).
JointColoring joint_refine_1wl(std::span<const Graph* const> graphs, std::span<const std::vector<Color>> initial);

StablePartition refine_1wl(const Graph& g);
PairColoring refine_2wl(const Graph& g);
TripleColoring refine_3wl(const Graph& g);

bool equiv_1wl(const Graph& g, const Graph& h);
bool equiv_kwl(const Graph& g, const Graph& h, int k);

// Equivalence classes under k-WL: graphs i and j are equivalent iff
// result[i] == result[j]. Ids are numbered by first occurrence.
std::vector<std::size_t> wl_classes(std::span<const Graph> graphs, int k);
std::vector<std::size_t> wl_classes(std::span<const Graph* const> graphs, int k);

// True iff no non-isomorphic graph of the same order is 1-WL-equivalent to h.
// Requires v(h) <= enumeration cap.
bool amenable(const Graph& h);
// amenable() for every graph in enumerate_nonisomorphic(n), in that order.
std::vector<bool> amenable_all(std::size_t n);

// f maps V(G) into V(T). True iff f is a surjective homomorphism and f(N(u))
// covers N(f(u)) for every u.
bool is_covering_map(const Graph& g, const Graph& t, std::span<const Vertex> f);

}  // namespace wlpat
