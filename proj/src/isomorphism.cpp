#include "wlpat/isomorphism.hpp"

#include <algorithm>

#include "wlpat/refinement.hpp"

namespace wlpat {
namespace {

std::vector<Color> base_colors(const Graph& g) {
  return g.colored() ? g.colors() : std::vector<Color>(g.order(), 0);
}

bool search(const Graph& g, const Graph& h, const std::vector<Color>& cg, const std::vector<Color>& ch,
            std::vector<Vertex>& out) {
  const Graph* graphs[] = {&g, &h};
  const std::vector<Color> init[] = {cg, ch};
  auto jc = joint_refine_1wl(graphs, init);
  const auto& rg = jc.colors[0];
  const auto& rh = jc.colors[1];

  std::vector<std::size_t> count_g(jc.palette, 0);
  std::vector<std::size_t> count_h(jc.palette, 0);
  for (Color c : rg) ++count_g[c];
  for (Color c : rh) ++count_h[c];
  if (count_g != count_h) return false;

  std::size_t best = 0;
  Color target = 0;
  for (Color c = 0; c < jc.palette; ++c) {
    if (count_g[c] > 1 && (best == 0 || count_g[c] < best)) {
      best = count_g[c];
      target = c;
    }
  }
  const auto n = static_cast<Vertex>(g.order());
  if (best == 0) {
    std::vector<Vertex> in_h(jc.palette);
    for (Vertex w = 0; w < n; ++w) in_h[rh[w]] = w;
    out.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) out[v] = in_h[rg[v]];
    for (auto [u, v] : g.edges()) {
      if (!h.adjacent(out[u], out[v])) return false;
    }
    return true;
  }

  Vertex v = 0;
  while (rg[v] != target) ++v;
  const auto fresh = static_cast<Color>(jc.palette);
  std::vector<Color> ng = rg;
  ng[v] = fresh;
  for (Vertex w = 0; w < n; ++w) {
    if (rh[w] != target) continue;
    std::vector<Color> nh = rh;
    nh[w] = fresh;
    if (search(g, h, ng, nh, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  std::vector<Vertex> out;
  if (g.order() == 0) return out;
  if (!search(g, h, base_colors(g), base_colors(h), out)) return std::nullopt;
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

BigInt AutomorphismChain::order() const {
  BigInt total = 1;
  for (const auto& o : orbits) total *= o.size();
  return total;
}

AutomorphismChain automorphism_chain(const Graph& f) {
  AutomorphismChain chain;
  const auto n = static_cast<Vertex>(f.order());
  std::vector<Color> current = base_colors(f);
  for (;;) {
    const Graph* graphs[] = {&f};
    const std::vector<Color> init[] = {current};
    auto jc = joint_refine_1wl(graphs, init);
    const auto& r = jc.colors[0];
    std::vector<std::size_t> size(jc.palette, 0);
    for (Color c : r) ++size[c];

    Vertex v = 0;
    while (v < n && size[r[v]] == 1) ++v;
    if (v == n) break;

    const auto fresh = static_cast<Color>(jc.palette);
    std::vector<Color> left = r;
    left[v] = fresh;
    std::vector<bool> in_orbit(n, false);
    in_orbit[v] = true;
    std::vector<Vertex> mapping;
    for (Vertex w = 0; w < n; ++w) {
      if (in_orbit[w] || r[w] != r[v]) continue;
      std::vector<Color> right = r;
      right[w] = fresh;
      if (!search(f, f, left, right, mapping)) continue;
      // mapping fixes the base and sends v to w, so its powers stay in the orbit.
      for (Vertex x = w; !in_orbit[x]; x = mapping[x]) in_orbit[x] = true;
    }
    std::vector<Vertex> orbit;
    for (Vertex w = 0; w < n; ++w) {
      if (in_orbit[w]) orbit.push_back(w);
    }
    chain.base.push_back(v);
    chain.orbits.push_back(std::move(orbit));
    current = std::move(left);
  }
  return chain;
}

BigInt automorphism_count(const Graph& f) { return automorphism_chain(f).order(); }

std::vector<std::pair<Vertex, Vertex>> symmetry_conditions(const Graph& f) {
  auto chain = automorphism_chain(f);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < chain.base.size(); ++i) {
    for (Vertex w : chain.orbits[i]) {
      if (w != chain.base[i]) out.emplace_back(chain.base[i], w);
    }
  }
  return out;
}

}  // namespace wlpat
