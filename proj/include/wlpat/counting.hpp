#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "wlpat/graph.hpp"
#include "wlpat/isomorphism.hpp"

namespace wlpat {

constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("search-node budget of " + std::to_string(budget) + " exceeded") {}
};

enum class CountMethod { backtrack, subset_dp, closed_form };
const char* to_string(CountMethod m);

struct CountResult {
  BigInt value;
  CountMethod method = CountMethod::backtrack;
  std::uint64_t nodes = 0;
};

enum class Route { automatic, backtrack, subset_dp };

struct CountOptions {
  // 0 means: WLP_BUDGET from the environment if set, else kDefaultBudget.
  std::uint64_t budget = 0;
  Route route = Route::automatic;
};

std::uint64_t effective_budget(const CountOptions& opts);

// Vertex colors are ignored by every counting operation.
CountResult count_hom(const Graph& f, const Graph& g, const CountOptions& opts = {});
// Injective homomorphisms F -> G.
CountResult count_injective(const Graph& f, const Graph& g, const CountOptions& opts = {});
// Subgraphs of G isomorphic to F. Paths and cycles on hosts with at most
// kSubsetDpMaxOrder vertices use a subset dynamic program unless a route is forced.
CountResult count_sub(const Graph& f, const Graph& g, const CountOptions& opts = {});
bool contains_sub(const Graph& f, const Graph& g, const CountOptions& opts = {});

constexpr std::size_t kSubsetDpMaxOrder = 18;

// nullopt stands for infinite girth.
std::optional<std::size_t> girth(const Graph& g);

// Sum over v of C(deg v, s). For s = 1 this is 2e(G): every edge is counted
// once from each endpoint, so sub(K2, G) is half of it.
CountResult star_count_closed(const Graph& g, std::size_t s);
// C(e(G), 2) - sub(K_{1,2}, G).
CountResult two_matching_closed(const Graph& g);

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace wlpat
