#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wlpat/graph.hpp"

namespace wlpat {

enum class Family {
  empty,               // empty(n): n isolated vertices
  complete,            // complete(n)
  path,                // path(n): i ~ i+1
  cycle,               // cycle(n): i ~ i+1 mod n, n >= 3
  star,                // star(s): K_{1,s}, center 0, leaves 1..s
  matching,            // matching(s): edges {2i, 2i+1}
  complete_bipartite,  // complete_bipartite(s,t): sides 0..s-1 and s..s+t-1
  star_forest,         // star_forest(a1,...,ak): stars in the given order
  windmill,            // windmill(s): K1*sK2, center 0, blades {2i+1, 2i+2}
  complete_split,      // complete_split(s): K2*sK1, clique {0,1}
  rook4,               // 4x4 rook's graph, vertex 4r+c (row-major grid)
  shrikhande,          // Cayley graph on Z4xZ4, vertex 4a+b, connection set ±(1,0),±(0,1),±(1,1)
  wagner,              // C8 plus chords i ~ i+4
  net,                 // triangle 0,1,2 with pendants 3~0, 4~1, 5~2
  petersen,            // outer 5-cycle 0..4, spokes i~i+5, inner pentagram 5+i ~ 5+(i+2)%5
  heawood,             // LCF [5,-5]^7
  mcgee,               // LCF [12,7,-7]^8
  tutte_coxeter,       // LCF [-13,-9,7,-7,9,13]^5
  robertson,           // 19-cycle plus chords i ~ i + [8,4,7,4,8,5,7,4,7,8,4,5,7,8,4,8,4,8,4][i]
  union_of,            // disjoint union of children, in order
  join_of,             // join of children, in order
  copies,              // params[0] disjoint copies of the single child
};

// Symbolic description of a parametrized graph family member.
struct PatternName {
  Family family = Family::empty;
  std::vector<int> params;
  std::vector<PatternName> children;

  static PatternName of(Family f, std::vector<int> params = {}) { return {f, std::move(params), {}}; }

  // Grammar: sum := term ('+' term)*; term := [INT '*'] atom;
  // atom := name ['(' (INT | sum) (',' (INT | sum))* ')'] | '(' sum ')'.
  // Names are the Family identifiers (union, join for union_of, join_of) plus the
  // short forms K(n), P(n), C(n), K(s,t).
  static PatternName parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const PatternName&) const = default;
};

Graph generate(const PatternName& name);

namespace gen {
Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t s);
Graph matching(std::size_t s);
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph star_forest(std::span<const std::size_t> arms);
Graph windmill(std::size_t s);
Graph complete_split(std::size_t s);
Graph rook4();
Graph shrikhande();
Graph wagner();
Graph net();
Graph petersen();
Graph heawood();
Graph mcgee();
Graph tutte_coxeter();
Graph robertson();
// Hamiltonian cycle 0..n-1 plus chords i ~ i + shifts[i mod |shifts|] (mod n).
Graph lcf(std::size_t n, std::span<const int> shifts);
}  // namespace gen

}  // namespace wlpat
