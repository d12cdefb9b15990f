#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/harness.hpp"
#include "wlpat/patterns.hpp"

using namespace wlpat;

TEST_CASE("filter selects one group") {
  VerifyOptions opts;
  opts.only = "table1";
  const VerifyReport r = verify_all(opts);
  CHECK(r.rows.size() == 6);
  CHECK(r.pass());
  for (const auto& row : r.rows) CHECK(row.group == "table1");
}

TEST_CASE("stubbed counter makes table1 rows fail") {
  VerifyOptions opts;
  opts.only = "table1";
  opts.counter = [](const Graph&, const Graph&) { return BigInt(0); };
  const VerifyReport r = verify_all(opts);
  REQUIRE(r.rows.size() == 6);
  for (const auto& row : r.rows) CHECK_FALSE(row.pass);
  CHECK_FALSE(r.pass());
  CHECK(r.to_json()["failed"] == "6");
}

TEST_CASE("unknown group") {
  VerifyOptions opts;
  opts.only = "nosuch";
  CHECK_THROWS_AS(verify_all(opts), GraphError);
}

TEST_CASE("output is identical for equal seeds") {
  VerifyOptions opts;
  opts.only = "properties";
  opts.seed = 42;
  const std::string a = verify_all(opts).to_json().dump();
  const std::string b = verify_all(opts).to_json().dump();
  CHECK(a == b);
  CHECK(verify_all(opts).to_table() == verify_all(opts).to_table());
}

TEST_CASE("table and json shapes") {
  VerifyOptions opts;
  opts.only = "matching";
  const VerifyReport r = verify_all(opts);
  const Json j = r.to_json();
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["expected"] == "96000");
  CHECK(j["rows"][0]["source"] == "reference");
  CHECK(j["pass"] == true);
  CHECK(r.to_table().find("2/2 rows pass") != std::string::npos);
}

TEST_CASE("Hamiltonicity and path helpers") {
  CHECK_FALSE(is_hamiltonian_bruteforce(Graph(1)));
  CHECK(is_hamiltonian_bruteforce(gen::path(2)));
  CHECK(is_hamiltonian_bruteforce(gen::cycle(5)));
  CHECK_FALSE(is_hamiltonian_bruteforce(gen::star(3)));
  CHECK_FALSE(is_hamiltonian_bruteforce(gen::petersen()));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_nonisomorphic(n)) {
      CHECK(is_hamiltonian_bruteforce(g) == oracle::hamiltonian(g));
      for (std::size_t k = 1; k <= n; ++k) CHECK(has_path_on(g, k) == (k == 1 || oracle::paths(g, k) > 0));
    }
  }
  CHECK(has_path_on(gen::petersen(), 10));
  CHECK_FALSE(has_path_on(gen::star(4), 4));
}
