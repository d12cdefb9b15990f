#include "wlpat/classify.hpp"

#include <algorithm>
#include <bit>

#include "wlpat/isomorphism.hpp"
#include "wlpat/patterns.hpp"

namespace wlpat {
namespace {

std::vector<Vertex> non_isolated(const Graph& f) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (f.degree(v) > 0) keep.push_back(v);
  }
  return keep;
}

void check_bound(const Graph& core) {
  if (core.order() > kPartitionSearchMaxOrder) {
    throw GraphError("partition search is limited to " + std::to_string(kPartitionSearchMaxOrder) +
                     " non-isolated vertices");
  }
}

bool is_two_matching(const Graph& core) { return core.order() == 4 && core.size() == 2 && core.max_degree() == 1; }

// Vertex set of non-isolated vertices of h - c, for h stripped.
std::size_t non_isolated_without(const Graph& h, Vertex c) {
  std::size_t count = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (v == c) continue;
    std::size_t d = h.degree(v) - (h.adjacent(v, c) ? 1 : 0);
    if (d > 0) ++count;
  }
  return count;
}

std::size_t max_degree_without(const Graph& h, Vertex c) {
  std::size_t best = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (v == c) continue;
    best = std::max(best, h.degree(v) - (h.adjacent(v, c) ? 1 : 0));
  }
  return best;
}

// Subgraph of K1*(K3+sK1) for some s.
bool sub_of_cone_triangle(const Graph& h) {
  if (h.order() <= 3) return true;
  for (Vertex c = 0; c < h.order(); ++c) {
    if (non_isolated_without(h, c) <= 3) return true;
  }
  return false;
}

// Subgraph of 2K3: components fit into two bins of three vertices.
bool sub_of_two_triangles(const Graph& h) {
  std::size_t count = 0;
  auto comp = connected_components(h, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 3; })) return false;
  for (unsigned mask = 0; mask < (1U << count); ++mask) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i < count; ++i) ((mask >> i) & 1U ? a : b) += sizes[i];
    if (a <= 3 && b <= 3) return true;
  }
  return false;
}

// Subgraph of the windmill K1*sK2 for some s.
bool sub_of_windmill(const Graph& h) {
  if (h.max_degree() <= 1) return true;
  for (Vertex c = 0; c < h.order(); ++c) {
    if (max_degree_without(h, c) <= 1) return true;
  }
  return false;
}

// Restricted growth strings of length n with exactly `blocks` blocks.
template <typename Visit>
bool for_each_partition(std::size_t n, std::size_t blocks, std::vector<std::size_t>& label, std::size_t i,
                        std::size_t used, Visit& visit) {
  if (n - i < blocks - used) return false;
  if (i == n) return used == blocks && visit(label);
  for (std::size_t b = 0; b <= used && b < blocks; ++b) {
    label[i] = b;
    if (for_each_partition(n, blocks, label, i + 1, std::max(used, b + 1), visit)) return true;
  }
  return false;
}

}  // namespace

Graph forbidden_pattern_graph(ForbiddenPattern p) {
  switch (p) {
    case ForbiddenPattern::two_P2: return gen::matching(2);
    case ForbiddenPattern::three_P2: return gen::matching(3);
    case ForbiddenPattern::P3_plus_P2: return disjoint_union(gen::path(3), gen::path(2));
    case ForbiddenPattern::P3_plus_two_P2: return disjoint_union(gen::path(3), gen::matching(2));
    case ForbiddenPattern::two_P3: return repeat(gen::path(3), 2);
  }
  throw GraphError("unsupported pattern");
}

Graph strip_isolated(const Graph& f) { return f.induced(non_isolated(f)); }

bool is_star(const Graph& f) {
  Graph core = strip_isolated(f);
  return core.order() >= 2 && core.size() + 1 == core.order() && core.max_degree() == core.size();
}

bool htw_le_1(const Graph& f) {
  Graph core = strip_isolated(f);
  return core.order() == 0 || is_star(core) || is_two_matching(core);
}

bool in_C1(const Graph& f) { return htw_le_1(f); }

bool in_R1(const Graph& f) {
  if (in_C1(f)) return true;
  Graph core = strip_isolated(f);
  for (auto p : {ForbiddenPattern::P3_plus_P2, ForbiddenPattern::P3_plus_two_P2, ForbiddenPattern::two_P3}) {
    if (is_isomorphic(core, forbidden_pattern_graph(p))) return true;
  }
  return false;
}

bool treewidth_le_2(const Graph& f) {
  Graph g = strip_isolated(f).uncolored();
  check_bound(g);
  const auto n = static_cast<Vertex>(g.order());
  if (n < 4) return true;
  std::vector<std::uint32_t> row(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) row[v] |= 1U << w;
  }
  auto nbhd = [&](std::uint32_t s) {
    std::uint32_t out = 0;
    for (std::uint32_t t = s; t; t &= t - 1) out |= row[std::countr_zero(t)];
    return out & ~s;
  };
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);
  auto connected = [&](std::uint32_t s) {
    if (!s) return false;
    std::uint32_t seen = s & (~s + 1);
    for (;;) {
      std::uint32_t grow = (seen | nbhd(seen)) & s;
      if (grow == seen) break;
      seen = grow;
    }
    return seen == s;
  };
  std::vector<std::uint32_t> sets;
  std::vector<std::uint32_t> nb;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (connected(s)) {
      sets.push_back(s);
      nb.push_back(nbhd(s));
    }
  }
  auto low = [](std::uint32_t s) { return std::countr_zero(s); };
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if ((sets[a] & sets[b]) || !(nb[a] & sets[b]) || low(sets[b]) <= low(sets[a])) continue;
      for (std::size_t c = 0; c < sets.size(); ++c) {
        const std::uint32_t abc = sets[a] | sets[b] | sets[c];
        if ((sets[c] & (sets[a] | sets[b])) || !(nb[a] & sets[c]) || !(nb[b] & sets[c]) ||
            low(sets[c]) <= low(sets[b])) {
          continue;
        }
        // A fourth branch set exists iff some component of the rest touches all three.
        std::uint32_t rest = all & ~abc;
        while (rest) {
          std::uint32_t comp = rest & (~rest + 1);
          for (;;) {
            std::uint32_t grow = (comp | nbhd(comp)) & rest;
            if (grow == comp) break;
            comp = grow;
          }
          if ((comp & nb[a]) && (comp & nb[b]) && (comp & nb[c])) return false;
          rest &= ~comp;
        }
      }
    }
  }
  return true;
}

HtwResult htw_le_2(const Graph& f) {
  const auto keep = non_isolated(f);
  Graph core = f.uncolored().induced(keep);
  check_bound(core);
  HtwResult out;
  if (core.order() < 4) return out;
  const auto edges = core.edges();
  std::vector<std::size_t> label(core.order(), 0);
  auto visit = [&](const std::vector<std::size_t>& lab) {
    unsigned seen = 0;
    for (auto [u, v] : edges) {
      std::size_t a = lab[u];
      std::size_t b = lab[v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      seen |= 1U << (a * 4 + b);
    }
    constexpr unsigned kAllPairs = (1U << 1) | (1U << 2) | (1U << 3) | (1U << 6) | (1U << 7) | (1U << 11);
    return seen == kAllPairs;
  };
  if (!for_each_partition(core.order(), 4, label, 0, 0, visit)) return out;
  std::vector<std::size_t> block_of(f.order(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) block_of[keep[i]] = label[i];
  out.value = false;
  out.evidence = VertexPartition::from_labels(block_of);
  return out;
}

bool tau_le_2(const Graph& h) {
  const auto edges = h.edges();
  if (edges.empty()) return true;
  const auto n = static_cast<Vertex>(h.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a; b < n; ++b) {
      bool covers = std::all_of(edges.begin(), edges.end(),
                                [&](auto e) { return e.first == a || e.second == a || e.first == b || e.second == b; });
      if (covers) return true;
    }
  }
  return false;
}

bool pattern_free_characterized(const Graph& h_in, ForbiddenPattern p) {
  const Graph h = strip_isolated(h_in).uncolored();
  const std::size_t v = h.order();
  switch (p) {
    case ForbiddenPattern::two_P2:
      return v == 0 || is_star(h) || (v == 3 && h.size() == 3);
    case ForbiddenPattern::three_P2:
      return v <= 5 || sub_of_two_triangles(h) || sub_of_cone_triangle(h) || tau_le_2(h);
    case ForbiddenPattern::P3_plus_P2:
      return v <= 4 || h.max_degree() == 1 || is_star(h);
    case ForbiddenPattern::P3_plus_two_P2:
      return v <= 6 || h.max_degree() == 1 || sub_of_cone_triangle(h) || tau_le_2(h);
    case ForbiddenPattern::two_P3: {
      std::size_t count = 0;
      auto comp = connected_components(h, &count);
      std::vector<std::size_t> sizes(count, 0);
      for (auto c : comp) ++sizes[c];
      std::vector<Vertex> rest;
      for (Vertex x = 0; x < v; ++x) {
        if (sizes[comp[x]] != 2) rest.push_back(x);
      }
      if (rest.size() <= 5) return true;
      if (rest.size() == 6 && is_isomorphic(h.induced(rest), gen::net())) return true;
      return sub_of_windmill(h);
    }
  }
  throw GraphError("unsupported pattern");
}

Classification classify(const Graph& f) {
  Classification c;
  c.in_C1 = in_C1(f);
  c.in_R1 = in_R1(f);
  c.tw_le_2 = treewidth_le_2(f);
  c.htw_le_1 = htw_le_1(f);
  auto h = htw_le_2(f);
  c.htw_le_2 = h.value;
  c.evidence = std::move(h.evidence);
  return c;
}

}  // namespace wlpat
