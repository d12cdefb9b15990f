#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wlpat/classify.hpp"
#include "wlpat/counting.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/patterns.hpp"
#include "wlpat/refinement.hpp"
#include "wlpat/witnesses.hpp"

using namespace wlpat;

namespace {

Graph named(const char* text) { return generate(PatternName::parse(text)); }

// Independent check of a witness: oracle refinement plus oracle counting.
void check_witness(const WitnessPair& w) {
  INFO(w.name);
  const WitnessReport r = verify(w);
  CHECK(r.pass);
  CHECK(r.error.empty());
  if (w.level == 1) CHECK(oracle::wl1_equivalent(w.g, w.h));
  if (w.level == 2 && w.g.order() <= 20) CHECK(oracle::wl2_equivalent(w.g, w.h));
  if (w.g.order() <= 10 && w.pattern.order() <= 7) {
    const std::uint64_t a = oracle::sub(w.pattern, w.g.uncolored());
    const std::uint64_t b = oracle::sub(w.pattern, w.h.uncolored());
    if (w.claim == Claim::count_differs) {
      CHECK(a != b);
    } else {
      CHECK((a == 0) != (b == 0));
    }
  }
}

bool regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("table1 witnesses") {
  const std::pair<const char*, std::pair<int, int>> items[] = {
      {"P(3)+P(2)", {12, 18}}, {"2*P(3)", {3, 9}}, {"P(3)+2*P(2)", {7, 6}}};
  for (const auto& [name, counts] : items) {
    const WitnessPair w = table1_witness(named(name));
    check_witness(w);
    REQUIRE(w.expected_g.has_value());
    CHECK(*w.expected_g == counts.first);
    CHECK(*w.expected_h == counts.second);
    CHECK(oracle::sub(w.pattern, w.g) == static_cast<std::uint64_t>(counts.first));
  }
  check_witness(table1_witness(disjoint_union(named("P(3)+P(2)"), Graph(1))));
  CHECK_THROWS_AS(table1_witness(gen::path(4)), GraphError);
}

TEST_CASE("basic star forest witnesses") {
  for (std::size_t s = 1; s <= 5; ++s) {
    check_witness(basic_star_forest_witness(std::vector<std::size_t>{s, s, 1}));
  }
  for (std::size_t s = 3; s <= 5; ++s) check_witness(basic_star_forest_witness(std::vector<std::size_t>{s, 1}));
  check_witness(basic_star_forest_witness(std::vector<std::size_t>{3, 2}));
  check_witness(basic_star_forest_witness(std::vector<std::size_t>{3, 3}));
  const WitnessPair wagner = basic_star_forest_witness(std::vector<std::size_t>{3, 3});
  CHECK(oracle::isomorphic(wagner.g, repeat(gen::complete(4), 2)));
  CHECK(oracle::isomorphic(wagner.h, gen::wagner()));
  CHECK(oracle::isomorphic(basic_star_forest_witness(std::vector<std::size_t>{3, 1}).h, gen::complete_bipartite(3, 3)));
  CHECK_THROWS_AS(basic_star_forest_witness(std::vector<std::size_t>{2, 1}), GraphError);
  CHECK(is_basic_star_forest({3, 1}));
  CHECK_FALSE(is_basic_star_forest({1, 1}));
}

TEST_CASE("star forest arms and reduction") {
  CHECK(star_forest_arms(named("star(3)+P(2)+K(1)")) == std::vector<std::size_t>{3, 1, 0});
  CHECK_THROWS_AS(star_forest_arms(gen::path(4)), GraphError);
  for (const auto& arms : std::vector<std::vector<std::size_t>>{{4, 2, 1}, {2, 2, 2}, {1, 1, 1, 1}, {5, 4, 1, 1}}) {
    std::vector<std::size_t> cur = arms;
    for (const auto& step : star_forest_reduction(arms)) {
      if (step.kind == ReductionStep::drop_component) {
        auto it = std::find(cur.begin(), cur.end(), step.arm);
        REQUIRE(it != cur.end());
        cur.erase(it);
      } else {
        for (auto& a : cur) a = a > 0 ? a - 1 : 0;
        cur.erase(std::remove(cur.begin(), cur.end(), std::size_t{0}), cur.end());
      }
    }
    std::sort(cur.rbegin(), cur.rend());
    CHECK(is_basic_star_forest(cur));
  }
}

TEST_CASE("star forest witnesses for non-R1 star forests") {
  for (const auto& arms : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {3, 1}, {2, 2, 1}, {4, 2}, {2, 1, 1, 1}}) {
    std::vector<Graph> parts;
    for (auto a : arms) parts.push_back(gen::star(a));
    const Graph f = disjoint_union(std::span<const Graph>(parts));
    REQUIRE_FALSE(in_R1(f));
    check_witness(star_forest_witness(f));
  }
}

TEST_CASE("covering witness") {
  const CoveringWitness c = covering_witness(gen::path(4));
  CHECK(oracle::isomorphic(c.g, gen::cycle(6)));
  CHECK(oracle::isomorphic(c.h, named("2*C(3)")));
  CHECK(is_covering_map(c.g, c.t_prime, c.projection));
  check_witness(c.pair());
  for (const char* t : {"P(5)", "P(6)", "star_forest(2)"}) {
    const Graph tree = named(t);
    if (!contains_sub(gen::path(4), tree)) continue;
    const CoveringWitness w = covering_witness(tree);
    CHECK(is_covering_map(w.g, w.t_prime, w.projection));
    check_witness(w.pair());
  }
  check_witness(forest_witness(disjoint_union(gen::path(4), gen::path(2))));
  CHECK_THROWS_AS(covering_witness(gen::cycle(4)), GraphError);
}

TEST_CASE("high girth regular graphs") {
  const std::pair<std::size_t, std::size_t> cases[] = {{3, 5}, {3, 6}, {4, 5}, {4, 6}, {3, 8}};
  for (auto [d, g] : cases) {
    const Graph r = high_girth_regular(d, g, 1);
    CHECK(regular(r, d));
    CHECK(girth(r).value_or(1000) >= g);
    CHECK(high_girth_regular(d, g, 1) == r);
  }
  check_witness(no_cycle_witness(gen::complete(3)));
  check_witness(no_cycle_witness(gen::cycle(4)));
  CHECK_THROWS_AS(no_cycle_witness(gen::path(4)), GraphError);
}

TEST_CASE("matching witnesses") {
  for (std::size_t s = 6; s <= 8; ++s) {
    const WitnessPair w = matching_witness(s);
    const WitnessReport r = verify(w);
    CHECK(r.pass);
    const auto mg = oracle::matchings(w.g);
    const auto mh = oracle::matchings(w.h);
    CHECK(r.measured_g == mg[s]);
    CHECK(r.measured_h == mh[s]);
  }
}

TEST_CASE("unique 4-clique witnesses") {
  const WitnessPair w = unique_4clique_witness(gen::complete(4));
  CHECK(verify(w).pass);
  // every 4-clique of the clone graph uses four colors
  const Graph& g = w.g;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d <= c || !g.adjacent(a, d) || !g.adjacent(b, d)) continue;
          std::set<Color> colors{g.color(a), g.color(b), g.color(c), g.color(d)};
          CHECK(colors.size() == 4);
        }
      }
    }
  }
  CHECK_THROWS_AS(unique_4clique_witness(gen::complete(5)), GraphError);
  CHECK_THROWS_AS(unique_4clique_witness(gen::cycle(4)), GraphError);
}

TEST_CASE("Hamiltonicity reduction") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_nonisomorphic(n)) {
      const Graph r = ham_to_longpath(g);
      CHECK(r.order() == 8 * n);
      CHECK(oracle::hamiltonian(g) == (oracle::paths(r, 6 * n + 2) > 0));
    }
  }
}

TEST_CASE("refutations exist for every non-member with n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_nonisomorphic(n)) {
      if (in_C1(f)) {
        CHECK_THROWS_AS(c1_refutation(f), GraphError);
      } else {
        CHECK(verify(c1_refutation(f)).pass);
      }
      if (in_R1(f)) {
        CHECK_THROWS_AS(r1_refutation(f), GraphError);
      } else {
        CHECK(verify(r1_refutation(f)).pass);
      }
    }
  }
}
