#include "wlpat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "wlpat/isomorphism.hpp"

namespace wlpat {
namespace {

std::mutex g_mutex;
std::size_t g_cap = kDefaultEnumerationCap;
std::map<std::size_t, std::vector<Graph>> g_cache;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Isomorphism-invariant hash: three rounds of neighborhood hashing.
std::uint64_t invariant(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::uint64_t> h(n);
  for (Vertex v = 0; v < n; ++v) h[v] = mix(g.degree(v) + 1);
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> nb;
  for (int round = 0; round < 3; ++round) {
    for (Vertex v = 0; v < n; ++v) {
      nb.clear();
      for (Vertex w : g.neighbors(v)) nb.push_back(h[w]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t acc = mix(h[v]);
      for (auto x : nb) acc = mix(acc ^ x);
      next[v] = acc;
    }
    h.swap(next);
  }
  std::sort(h.begin(), h.end());
  std::uint64_t acc = mix(n);
  for (auto x : h) acc = mix(acc + x);
  return acc;
}

std::vector<Graph> extend(const std::vector<Graph>& smaller, std::size_t n) {
  std::vector<Graph> out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  const auto last = static_cast<Vertex>(n - 1);
  for (const Graph& parent : smaller) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << last); ++mask) {
      Graph g(n);
      for (auto [u, v] : parent.edges()) g.add_edge(u, v);
      for (Vertex u = 0; u < last; ++u) {
        if ((mask >> u) & 1U) g.add_edge(u, last);
      }
      auto& bucket = buckets[invariant(g)];
      bool seen = false;
      for (std::size_t idx : bucket) {
        if (is_isomorphic(out[idx], g)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        bucket.push_back(out.size());
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace

std::size_t enumeration_cap() {
  std::lock_guard lock(g_mutex);
  return g_cap;
}

void set_enumeration_cap(std::size_t cap) {
  std::lock_guard lock(g_mutex);
  g_cap = cap;
}

const std::vector<Graph>& enumerate_nonisomorphic(std::size_t n) {
  std::lock_guard lock(g_mutex);
  if (n > g_cap) {
    throw GraphError("enumeration order " + std::to_string(n) + " exceeds cap " + std::to_string(g_cap));
  }
  if (auto it = g_cache.find(n); it != g_cache.end()) return it->second;
  if (g_cache.empty()) {
    g_cache.emplace(0, std::vector<Graph>{Graph(0)});
  }
  std::size_t have = g_cache.rbegin()->first;
  while (have < n) {
    auto next = extend(g_cache.at(have), have + 1);
    g_cache.emplace(++have, std::move(next));
  }
  return g_cache.at(n);
}

}  // namespace wlpat
