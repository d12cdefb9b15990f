#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/io.hpp"
#include "wlpat/patterns.hpp"

using namespace wlpat;

TEST_CASE("graph basics") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree_sequence() == std::vector<std::size_t>{2, 2, 1, 1});
  g.remove_edge(1, 2);
  CHECK(g.size() == 2);
  CHECK_THROWS_AS(g.add_edge(0, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 9), GraphError);
  CHECK_FALSE(is_connected(g));
  CHECK(is_forest(g));
}

TEST_CASE("graph operations") {
  const Graph c4 = gen::cycle(4);
  const Graph u = disjoint_union(c4, gen::path(2));
  CHECK(u.order() == 6);
  CHECK(u.size() == 5);
  std::size_t comps = 0;
  connected_components(u, &comps);
  CHECK(comps == 2);
  CHECK(join(gen::empty(2), gen::empty(3)) == gen::complete_bipartite(2, 3));
  CHECK(complement(gen::complete(5)).size() == 0);
  CHECK(line_graph(gen::star(4)).size() == 6);
  CHECK(oracle::isomorphic(line_graph(gen::cycle(5)), gen::cycle(5)));
  CHECK(add_pendant_each(gen::complete(3)).order() == 6);
  CHECK(repeat(gen::complete(3), 2).size() == 6);

  const Graph q = quotient(gen::cycle(6), VertexPartition({{0, 3}, {1, 4}, {2, 5}}));
  CHECK(oracle::isomorphic(q, gen::complete(3)));
  CHECK_THROWS_AS(VertexPartition({{0, 1}, {1, 2}}).validate(3), GraphError);
  CHECK_THROWS_AS(VertexPartition({{0, 1}}).validate(3), GraphError);

  const Graph cl = clone4(gen::path(2));
  CHECK(cl.order() == 8);
  CHECK(cl.colored());
  for (Vertex v = 0; v < cl.order(); ++v) CHECK(cl.color(v) == v % 4 + 1);
}

TEST_CASE("relabel and induced") {
  const Graph p = gen::path(4);
  const std::vector<Vertex> perm{3, 2, 1, 0};
  CHECK(p.relabeled(perm) == p);
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(p.induced(keep) == gen::path(3));
}

TEST_CASE("named graphs") {
  struct Item {
    Graph g;
    std::size_t n, m, girth;
  };
  const Item items[] = {
      {gen::rook4(), 16, 48, 3},      {gen::shrikhande(), 16, 48, 3}, {gen::petersen(), 10, 15, 5},
      {gen::heawood(), 14, 21, 6},    {gen::mcgee(), 24, 36, 7},      {gen::tutte_coxeter(), 30, 45, 8},
      {gen::robertson(), 19, 38, 5},  {gen::wagner(), 8, 12, 4},      {gen::net(), 6, 6, 3},
  };
  for (const auto& it : items) {
    CHECK(it.g.order() == it.n);
    CHECK(it.g.size() == it.m);
    if (it.n <= 24) CHECK(oracle::girth(it.g) == it.girth);
  }
  for (Vertex v = 0; v < 16; ++v) {
    CHECK(gen::rook4().degree(v) == 6);
    CHECK(gen::shrikhande().degree(v) == 6);
  }
  CHECK(gen::windmill(3).size() == 9);
  CHECK(gen::complete_split(3).size() == 7);
}

TEST_CASE("pattern names") {
  for (const char* text : {"P(3)+2*P(2)", "rook4", "K(3,3)", "star_forest(3,1,1)", "join(empty(2),cycle(4))",
                           "2*(P(3)+P(2))"}) {
    const PatternName p = PatternName::parse(text);
    CHECK(PatternName::parse(p.to_string()) == p);
  }
  CHECK(generate(PatternName::parse("K(3,3)")) == gen::complete_bipartite(3, 3));
  CHECK(generate(PatternName::parse("K(4)")) == gen::complete(4));
  CHECK(generate(PatternName::parse("2*C(3)")).size() == 6);
  CHECK(generate(PatternName::parse("P(3)+P(2)")).order() == 5);
  CHECK_THROWS_AS(PatternName::parse("P(3)+"), GraphError);
  CHECK_THROWS_AS(PatternName::parse("nosuch(3)"), GraphError);
  CHECK_THROWS_AS(generate(PatternName::parse("C(2)")), GraphError);
}

TEST_CASE("graph6 round trip") {
  CHECK(to_graph6(gen::complete(2)) == "A_");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("A_") == gen::complete(2));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_nonisomorphic(n)) CHECK(from_graph6(to_graph6(g)) == g);
  }
  const Graph r = gen::tutte_coxeter();
  CHECK(from_graph6(to_graph6(r)) == r);
  CHECK(from_graph6(">>graph6<<A_\n") == gen::complete(2));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(from_graph6(""), GraphError);
  CHECK_THROWS_AS(from_graph6("D"), GraphError);     // truncated
  CHECK_THROWS_AS(from_graph6("A_?"), GraphError);   // trailing bytes
  CHECK_THROWS_AS(from_graph6("A("), GraphError);    // byte out of range
  CHECK_THROWS_AS(to_graph6(Graph(63)), GraphError);
}

TEST_CASE("text format") {
  Graph g = gen::cycle(5);
  CHECK(from_text(to_text(g)) == g);
  g.set_colors({1, 2, 3, 4, 5});
  CHECK(from_text(to_text(g)) == g);
  CHECK_THROWS_AS(from_text("3 1\n0 7\n"), GraphError);
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_nonisomorphic(n).size() == expected[n - 1]);
  const auto& six = enumerate_nonisomorphic(6);
  for (std::size_t i = 0; i < six.size(); i += 7) {
    for (std::size_t j = i + 1; j < six.size(); j += 11) CHECK_FALSE(oracle::isomorphic(six[i], six[j]));
  }
  CHECK_THROWS_AS(enumerate_nonisomorphic(enumeration_cap() + 1), GraphError);
}
