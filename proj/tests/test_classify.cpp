#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wlpat/classify.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/patterns.hpp"

using namespace wlpat;

namespace {

Graph named(const char* text) { return generate(PatternName::parse(text)); }

bool vertex_cover_le_2(const Graph& h) {
  const auto n = static_cast<Vertex>(h.order());
  if (h.size() == 0) return true;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      bool ok = true;
      for (auto [u, v] : h.edges()) ok = ok && (u == a || u == b || v == a || v == b);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("treewidth <= 2 matches series-parallel reduction for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& f : enumerate_nonisomorphic(n)) CHECK(treewidth_le_2(f) == oracle::treewidth_le_2(f));
  }
  CHECK_FALSE(treewidth_le_2(gen::complete(4)));
  CHECK_FALSE(treewidth_le_2(gen::wagner()));
  CHECK(treewidth_le_2(gen::cycle(12)));
  CHECK_THROWS_AS(treewidth_le_2(gen::cycle(13)), GraphError);
}

TEST_CASE("htw <= 2 matches the homomorphic-image oracle for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& f : enumerate_nonisomorphic(n)) {
      const HtwResult r = htw_le_2(f);
      CHECK(r.value == oracle::htw_le_2(f));
      if (!r.value) {
        REQUIRE(r.evidence.has_value());
        r.evidence->validate(f.order());
        CHECK(oracle::isomorphic(quotient(f, *r.evidence), gen::complete(4)));
      }
    }
  }
}

TEST_CASE("htw boundary") {
  CHECK(htw_le_2(gen::cycle(7)).value);
  CHECK_FALSE(htw_le_2(gen::cycle(8)).value);
  CHECK(htw_le_2(gen::path(7)).value);
  CHECK_FALSE(htw_le_2(gen::path(8)).value);
  CHECK(htw_le_2(gen::matching(5)).value);
  CHECK_FALSE(htw_le_2(gen::matching(6)).value);
  const HtwResult padded = htw_le_2(disjoint_union(gen::path(8), Graph(2)));
  CHECK_FALSE(padded.value);
  REQUIRE(padded.evidence.has_value());
  padded.evidence->validate(10);
}

TEST_CASE("htw <= 1") {
  CHECK(htw_le_1(gen::star(5)));
  CHECK(htw_le_1(disjoint_union(gen::star(2), Graph(3))));
  CHECK(htw_le_1(gen::matching(2)));
  CHECK(htw_le_1(Graph(3)));
  CHECK_FALSE(htw_le_1(gen::path(4)));
  CHECK_FALSE(htw_le_1(gen::matching(3)));
  CHECK_FALSE(htw_le_1(gen::cycle(3)));
}

TEST_CASE("C1 and R1 on star forests") {
  CHECK(in_C1(gen::star(4)));
  CHECK(in_C1(gen::matching(2)));
  CHECK(in_C1(Graph(2)));
  CHECK_FALSE(in_C1(named("P(3)+P(2)")));
  CHECK(in_R1(named("P(3)+P(2)")));
  CHECK(in_R1(named("P(3)+2*P(2)")));
  CHECK(in_R1(named("2*P(3)")));
  CHECK_FALSE(in_R1(gen::matching(3)));
  CHECK_FALSE(in_R1(named("star(3)+P(2)")));
  CHECK_FALSE(in_R1(gen::cycle(3)));
  CHECK_FALSE(in_C1(gen::cycle(3)));
}

TEST_CASE("classification record") {
  const Classification c = classify(gen::path(8));
  CHECK_FALSE(c.in_C1);
  CHECK_FALSE(c.in_R1);
  CHECK(c.tw_le_2);
  CHECK_FALSE(c.htw_le_1);
  CHECK_FALSE(c.htw_le_2);
  CHECK(c.evidence.has_value());
  const Classification s = classify(gen::star(3));
  CHECK(s.in_C1);
  CHECK(s.in_R1);
  CHECK(s.htw_le_1);
  CHECK_FALSE(s.evidence.has_value());
}

TEST_CASE("strip_isolated and is_star") {
  CHECK(strip_isolated(disjoint_union(gen::path(3), Graph(2))) == gen::path(3));
  CHECK(is_star(disjoint_union(Graph(1), gen::star(2))));
  CHECK(is_star(gen::path(2)));
  CHECK_FALSE(is_star(gen::path(4)));
  CHECK_FALSE(is_star(Graph(3)));
}

TEST_CASE("tau <= 2 matches vertex cover brute force") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& h : enumerate_nonisomorphic(n)) CHECK(tau_le_2(h) == vertex_cover_le_2(h));
  }
}

TEST_CASE("forbidden-pattern characterizations match brute force for n <= 7") {
  const ForbiddenPattern all[] = {ForbiddenPattern::two_P2, ForbiddenPattern::three_P2, ForbiddenPattern::P3_plus_P2,
                                  ForbiddenPattern::P3_plus_two_P2, ForbiddenPattern::two_P3};
  for (auto p : all) {
    const Graph f = forbidden_pattern_graph(p);
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& h : enumerate_nonisomorphic(n)) {
        CHECK(pattern_free_characterized(h, p) == (oracle::maps(f, h, true) == 0));
      }
    }
  }
  CHECK(forbidden_pattern_graph(ForbiddenPattern::P3_plus_two_P2) == named("P(3)+2*P(2)"));
}
