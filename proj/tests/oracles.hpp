#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "wlpat/graph.hpp"
#include "wlpat/isomorphism.hpp"

namespace oracle {

using wlpat::BigInt;
using wlpat::Graph;
using wlpat::Vertex;

// Color refinement on the disjoint union, std::map renaming.
inline std::vector<std::size_t> color_refinement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> col(n);
  for (Vertex v = 0; v < n; ++v) col[v] = g.color(v);
  std::size_t classes = std::set<std::size_t>(col.begin(), col.end()).size();
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = col[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(col[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
      ids.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) col[v] = ids[sig[v]];
    if (ids.size() == classes) return col;
    classes = ids.size();
  }
}

inline bool wl1_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  Graph u = wlpat::disjoint_union(g, h);
  std::vector<wlpat::Color> c;
  for (Vertex v = 0; v < g.order(); ++v) c.push_back(g.color(v));
  for (Vertex v = 0; v < h.order(); ++v) c.push_back(h.color(v));
  u.set_colors(c);
  const auto col = color_refinement(u);
  std::vector<std::size_t> a(col.begin(), col.begin() + g.order());
  std::vector<std::size_t> b(col.begin() + g.order(), col.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Classical 2-WL on the disjoint union, pairs within one component only
// would lose information, so all ordered pairs of the union are refined.
inline bool wl2_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  const Graph u = wlpat::disjoint_union(g, h);
  const std::size_t n = u.order();
  const std::size_t ng = g.order();
  auto color_of = [&](Vertex v) { return v < ng ? g.color(v) : h.color(v - ng); };
  std::vector<std::size_t> col(n * n);
  {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::vector<std::size_t>> sig(n * n);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        sig[a * n + b] = {a == b ? 0u : (u.adjacent(a, b) ? 1u : 2u), color_of(a), color_of(b)};
        ids.emplace(sig[a * n + b], 0);
      }
    }
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < n * n; ++i) col[i] = ids[sig[i]];
  }
  std::size_t classes = std::set<std::size_t>(col.begin(), col.end()).size();
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>> sig(n * n);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        auto& s = sig[a * n + b];
        s.first = col[a * n + b];
        for (Vertex w = 0; w < n; ++w) s.second.emplace_back(col[a * n + w], col[w * n + b]);
        std::sort(s.second.begin(), s.second.end());
        ids.emplace(s, 0);
      }
    }
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < n * n; ++i) col[i] = ids[sig[i]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if ((x < ng) != (y < ng)) continue;
      (x < ng ? a : b).push_back(col[x * n + y]);
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& p) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.color(u) != h.color(p[u])) return false;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    count += is_isomorphism(g, g, p) ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (is_isomorphism(g, h, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Maps of V(F) into V(G) in vertex order, checking edges to earlier vertices.
inline std::uint64_t maps(const Graph& f, const Graph& g, bool injective) {
  std::vector<Vertex> img(f.order());
  std::vector<bool> used(g.order(), false);
  std::function<std::uint64_t(Vertex)> rec = [&](Vertex i) -> std::uint64_t {
    if (i == f.order()) return 1;
    std::uint64_t total = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (injective && used[x]) continue;
      bool ok = true;
      for (Vertex j = 0; j < i && ok; ++j) {
        if (f.adjacent(i, j) && !g.adjacent(x, img[j])) ok = false;
      }
      if (!ok) continue;
      img[i] = x;
      used[x] = true;
      total += rec(i + 1);
      used[x] = false;
    }
    return total;
  };
  return rec(0);
}

inline std::uint64_t hom(const Graph& f, const Graph& g) { return maps(f, g, false); }

inline std::uint64_t sub(const Graph& f, const Graph& g) { return maps(f, g, true) / automorphisms(f); }

// Coefficients m_k of the matching polynomial: number of k-edge matchings.
// Recursion on the lowest remaining vertex, memoized over vertex subsets.
inline std::vector<BigInt> matchings(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::uint64_t, std::vector<BigInt>> memo;
  std::function<std::vector<BigInt>(std::uint64_t)> rec = [&](std::uint64_t alive) -> std::vector<BigInt> {
    if (alive == 0) return {BigInt(1)};
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    const Vertex v = static_cast<Vertex>(__builtin_ctzll(alive));
    const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    std::vector<BigInt> out = rec(rest);
    for (Vertex w = 0; w < n; ++w) {
      if (!((rest >> w) & 1U) || !g.adjacent(v, w)) continue;
      const auto sub = rec(rest & ~(std::uint64_t{1} << w));
      if (out.size() < sub.size() + 1) out.resize(sub.size() + 1);
      for (std::size_t k = 0; k < sub.size(); ++k) out[k + 1] += sub[k];
    }
    memo[alive] = out;
    return out;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(all);
}

// Cycles of length s: closed walks from their smallest vertex, each cycle seen twice.
inline std::uint64_t cycles(const Graph& g, std::size_t s) {
  std::uint64_t twice = 0;
  std::vector<bool> used(g.order(), false);
  std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex cur, std::size_t len) {
    if (len == s) {
      twice += g.adjacent(cur, start) ? 1 : 0;
      return;
    }
    for (Vertex w : g.neighbors(cur)) {
      if (w <= start || used[w]) continue;
      used[w] = true;
      dfs(start, w, len + 1);
      used[w] = false;
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    used[v] = true;
    dfs(v, v, 1);
    used[v] = false;
  }
  return twice / 2;
}

// Paths on k >= 2 vertices: directed simple paths halved.
inline std::uint64_t paths(const Graph& g, std::size_t k) {
  std::uint64_t directed = 0;
  std::vector<bool> used(g.order(), false);
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex cur, std::size_t len) {
    if (len == k) {
      ++directed;
      return;
    }
    for (Vertex w : g.neighbors(cur)) {
      if (used[w]) continue;
      used[w] = true;
      dfs(w, len + 1);
      used[w] = false;
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    used[v] = true;
    dfs(v, 1);
    used[v] = false;
  }
  return directed / 2;
}

inline std::size_t girth(const Graph& g) {
  for (std::size_t s = 3; s <= g.order(); ++s) {
    if (cycles(g, s) > 0) return s;
  }
  return 0;  // acyclic
}

// Treewidth at most 2 iff series-parallel reduction empties the graph:
// delete vertices of degree <= 1, suppress vertices of degree 2.
inline bool treewidth_le_2(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> alive(g.order(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
      for (Vertex w : nb) adj[w].erase(v);
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      adj[v].clear();
      alive[v] = false;
      changed = true;
    }
  }
  return std::none_of(alive.begin(), alive.end(), [](bool a) { return a; });
}

// Calls visit(block_of) for every set partition, blocks in restricted-growth form.
inline void set_partitions(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      visit(a);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

// Max treewidth over homomorphic images is at most 2: every quotient by a
// partition into independent sets passes the series-parallel test.
inline bool htw_le_2(const Graph& f) {
  bool ok = true;
  set_partitions(f.order(), [&](const std::vector<std::size_t>& block) {
    if (!ok) return;
    for (auto [u, v] : f.edges()) {
      if (block[u] == block[v]) return;
    }
    const std::size_t k = *std::max_element(block.begin(), block.end()) + 1;
    Graph q(k);
    for (auto [u, v] : f.edges()) {
      if (!q.adjacent(static_cast<Vertex>(block[u]), static_cast<Vertex>(block[v]))) {
        q.add_edge(static_cast<Vertex>(block[u]), static_cast<Vertex>(block[v]));
      }
    }
    ok = treewidth_le_2(q);
  });
  return ok;
}

inline bool hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return n == 2 && g.adjacent(0, 1);
  return cycles(g, n) > 0;
}

}  // namespace oracle
