#include "wlpat/witnesses.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <queue>
#include <random>
#include <tuple>

#include "wlpat/classify.hpp"
#include "wlpat/isomorphism.hpp"
#include "wlpat/patterns.hpp"
#include "wlpat/refinement.hpp"

namespace wlpat {
namespace {

Graph sum(std::vector<Graph> parts) { return disjoint_union(std::span<const Graph>(parts)); }

std::string arms_text(const std::vector<std::size_t>& arms) {
  std::string out = "[";
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(arms[i]);
  }
  return out + "]";
}

Graph star_or_point(std::size_t arm) { return arm == 0 ? Graph(1) : gen::star(arm); }

Graph forest_of(const std::vector<std::size_t>& arms) {
  std::vector<Graph> parts;
  for (auto a : arms) parts.push_back(star_or_point(a));
  return sum(std::move(parts));
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root) {
  std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == static_cast<std::size_t>(-1)) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

Vertex farthest(const std::vector<std::size_t>& dist) {
  Vertex best = 0;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] != static_cast<std::size_t>(-1) && dist[v] > dist[best]) best = v;
  }
  return best;
}

// Length of the shortest path from a to b avoiding edge ab, if at most limit.
bool within(const Graph& g, Vertex a, Vertex b, std::size_t limit) {
  std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
  std::deque<Vertex> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    if (dist[u] >= limit) continue;
    for (Vertex w : g.neighbors(u)) {
      if (u == a && w == b) continue;
      if (dist[w] != static_cast<std::size_t>(-1)) continue;
      if (w == b) return true;
      dist[w] = dist[u] + 1;
      q.push_back(w);
    }
  }
  return false;
}

std::size_t moore_bound(std::size_t d, std::size_t g) {
  std::size_t total = 0;
  std::size_t p = 1;
  if (g % 2 == 1) {
    for (std::size_t i = 0; i <= (g - 3) / 2; ++i, p *= d - 1) total += p;
    return 1 + d * total;
  }
  for (std::size_t i = 0; i < g / 2; ++i, p *= d - 1) total += p;
  return 2 * total;
}

std::optional<Graph> random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g(n);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      stuck = true;
      for (int tries = 0; tries < 100; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        Vertex a = stubs[i];
        Vertex b = stubs[j];
        if (i == j || a == b || g.adjacent(a, b)) continue;
        g.add_edge(a, b);
        if (i < j) std::swap(i, j);
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
        stuck = false;
        break;
      }
    }
    if (stubs.empty()) return g;
  }
  return std::nullopt;
}

// Edge switching until no edge lies on a cycle shorter than g_min.
std::optional<Graph> switch_out_short_cycles(Graph g, std::size_t g_min, std::mt19937_64& rng) {
  const std::size_t limit = g_min - 2;
  auto edges = g.edges();
  std::deque<std::pair<Vertex, Vertex>> pending(edges.begin(), edges.end());
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    if (!g.adjacent(a, b) || !within(g, a, b, limit)) continue;
    bool fixed = false;
    for (int tries = 0; tries < 2000 && !fixed; ++tries) {
      auto current = g.edges();
      std::uniform_int_distribution<std::size_t> pick(0, current.size() - 1);
      auto [c, e] = current[pick(rng)];
      if (rng() & 1U) std::swap(c, e);
      if (c == a || c == b || e == a || e == b || g.adjacent(a, c) || g.adjacent(b, e)) continue;
      g.remove_edge(a, b);
      g.remove_edge(c, e);
      g.add_edge(a, c);
      g.add_edge(b, e);
      if (!within(g, a, c, limit) && !within(g, b, e, limit)) {
        fixed = true;
      } else {
        g.remove_edge(a, c);
        g.remove_edge(b, e);
        g.add_edge(a, b);
        g.add_edge(c, e);
      }
    }
    if (!fixed) return std::nullopt;
  }
  return g;
}

bool is_regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

// Point-line incidence graph of PG(2,q), q prime: (q+1)-regular, girth 6.
Graph projective_plane_incidence(std::size_t q) {
  std::vector<std::array<std::size_t, 3>> pts;
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) pts.push_back({1, x, y});
  }
  for (std::size_t y = 0; y < q; ++y) pts.push_back({0, 1, y});
  pts.push_back({0, 0, 1});
  const std::size_t n = pts.size();
  Graph g(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % q == 0) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(n + j));
    }
  }
  return g;
}

std::size_t isolated_count(const Graph& f) {
  std::size_t r = 0;
  for (Vertex v = 0; v < f.order(); ++v) r += f.degree(v) == 0 ? 1 : 0;
  return r;
}

Graph pad(const Graph& g, std::size_t r) { return r ? disjoint_union(g, Graph(r)) : g; }

bool has_cycle(const Graph& f) { return !is_forest(f); }

bool is_star_forest(const Graph& f) {
  if (!is_forest(f)) return false;
  std::size_t count = 0;
  auto comp = connected_components(f, &count);
  std::vector<std::size_t> size(count, 0);
  std::vector<std::size_t> max_deg(count, 0);
  for (Vertex v = 0; v < f.order(); ++v) {
    ++size[comp[v]];
    max_deg[comp[v]] = std::max(max_deg[comp[v]], f.degree(v));
  }
  for (std::size_t c = 0; c < count; ++c) {
    if (size[c] > 2 && max_deg[c] + 1 != size[c]) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Claim c) {
  return c == Claim::count_differs ? "count_differs" : "containment_differs";
}

WitnessReport verify(const WitnessPair& w, const CountOptions& opts) {
  WitnessReport r;
  try {
    r.equivalent = equiv_kwl(w.g, w.h, w.level);
    if (w.g.colored() || w.h.colored()) {
      r.uncolored_equivalent = equiv_kwl(w.g.uncolored(), w.h.uncolored(), w.level);
    }
    if (w.claim == Claim::count_differs) {
      r.measured_g = count_sub(w.pattern, w.g, opts).value;
      r.measured_h = count_sub(w.pattern, w.h, opts).value;
      r.claim_holds = r.measured_g != r.measured_h;
      if (w.expected_g && *w.expected_g != r.measured_g) r.claim_holds = false;
      if (w.expected_h && *w.expected_h != r.measured_h) r.claim_holds = false;
    } else {
      const bool in_g = contains_sub(w.pattern, w.g, opts);
      const bool in_h = contains_sub(w.pattern, w.h, opts);
      r.measured_g = in_g ? 1 : 0;
      r.measured_h = in_h ? 1 : 0;
      r.claim_holds = in_g && !in_h;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.claim_holds = false;
  }
  r.pass = r.equivalent && r.uncolored_equivalent.value_or(true) && r.claim_holds && r.error.empty();
  return r;
}

WitnessPair table1_witness(const Graph& f) {
  const std::size_t r = isolated_count(f);
  const Graph core = strip_isolated(f);
  WitnessPair w;
  w.pattern = f;
  w.level = 1;
  w.claim = Claim::count_differs;
  int expected_g = 0;
  int expected_h = 0;
  if (is_isomorphic(core, forbidden_pattern_graph(ForbiddenPattern::P3_plus_P2))) {
    w.name = "table1(P3+P2)";
    w.g = gen::cycle(6);
    w.h = repeat(gen::cycle(3), 2);
    expected_g = 12;
    expected_h = 18;
  } else if (is_isomorphic(core, forbidden_pattern_graph(ForbiddenPattern::two_P3))) {
    w.name = "table1(2P3)";
    w.g = gen::cycle(6);
    w.h = repeat(gen::cycle(3), 2);
    expected_g = 3;
    expected_h = 9;
  } else if (is_isomorphic(core, forbidden_pattern_graph(ForbiddenPattern::P3_plus_two_P2))) {
    w.name = "table1(P3+2P2)";
    w.g = gen::cycle(7);
    w.h = disjoint_union(gen::cycle(4), gen::cycle(3));
    expected_g = 7;
    expected_h = 6;
  } else {
    throw GraphError("table1_witness supports P3+P2, 2P3 and P3+2P2 only");
  }
  if (r == 0) {
    w.expected_g = expected_g;
    w.expected_h = expected_h;
  } else {
    w.name += "+" + std::to_string(r) + "K1";
    w.g = pad(w.g, r);
    w.h = pad(w.h, r);
  }
  return w;
}

std::vector<std::size_t> star_forest_arms(const Graph& f) {
  if (!is_star_forest(f)) throw GraphError("not a star forest");
  std::size_t count = 0;
  auto comp = connected_components(f, &count);
  std::vector<std::size_t> size(count, 0);
  for (auto c : comp) ++size[c];
  std::vector<std::size_t> arms;
  for (auto s : size) arms.push_back(s - 1);
  std::sort(arms.rbegin(), arms.rend());
  return arms;
}

bool is_basic_star_forest(std::vector<std::size_t> a) {
  std::sort(a.rbegin(), a.rend());
  if (a.size() == 2) {
    return (a[0] >= 3 && a[1] == 1) || (a[0] == 3 && a[1] == 2) || (a[0] == 3 && a[1] == 3);
  }
  return a.size() == 3 && a[0] >= 1 && a[0] == a[1] && a[2] == 1;
}

WitnessPair basic_star_forest_witness(const Graph& f) { return basic_star_forest_witness(star_forest_arms(f)); }

WitnessPair basic_star_forest_witness(std::vector<std::size_t> a) {
  std::sort(a.rbegin(), a.rend());
  if (!is_basic_star_forest(a)) throw GraphError("not a basic star forest: " + arms_text(a));
  WitnessPair w;
  w.name = "basic_star_forest" + arms_text(a);
  w.pattern = forest_of(a);
  w.level = 1;
  w.claim = Claim::containment_differs;
  if (a.size() == 2 && a[1] == 1) {
    const std::size_t s = a[0];
    w.g = repeat(gen::complete(s), 2);
    for (Vertex i = 0; i < s; ++i) w.g.add_edge(i, static_cast<Vertex>(s + i));
    w.h = gen::complete_bipartite(s, s);
  } else if (a.size() == 2 && a[1] == 2) {
    w.g = repeat(gen::cycle(4), 2);
    w.g.add_edge(0, 4);
    w.h = gen::cycle(8);
    w.h.add_edge(0, 4);
  } else if (a.size() == 2) {
    w.g = repeat(gen::complete(4), 2);
    w.h = gen::wagner();
  } else {
    const std::size_t s = a[0];
    const Graph base = repeat(gen::star(s + 1), 2);
    const auto second = static_cast<Vertex>(s + 2);
    const Vertex x = 1;
    const Vertex y = 2;
    const Vertex x2 = second + 1;
    const Vertex y2 = second + 2;
    w.g = base;
    w.g.add_edge(x, x2);
    w.g.add_edge(y, y2);
    w.h = base;
    w.h.add_edge(x, y);
    w.h.add_edge(x2, y2);
  }
  return w;
}

std::vector<ReductionStep> star_forest_reduction(std::vector<std::size_t> arms) {
  std::sort(arms.rbegin(), arms.rend());
  using State = std::vector<std::size_t>;
  std::map<State, std::pair<State, ReductionStep>> parent;
  std::deque<State> queue{arms};
  parent.emplace(arms, std::make_pair(State{}, ReductionStep{}));
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    if (is_basic_star_forest(cur)) {
      std::vector<ReductionStep> steps;
      while (cur != arms) {
        auto& [prev, step] = parent.at(cur);
        steps.push_back(step);
        cur = prev;
      }
      std::reverse(steps.begin(), steps.end());
      return steps;
    }
    std::vector<std::pair<State, ReductionStep>> next;
    if (!cur.empty() && cur.back() >= 1) {
      State t = cur;
      for (auto& x : t) --x;
      next.emplace_back(t, ReductionStep{ReductionStep::trim_leaves, 0});
    }
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (i > 0 && cur[i] == cur[i - 1]) continue;
      State d = cur;
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
      next.emplace_back(d, ReductionStep{ReductionStep::drop_component, cur[i]});
    }
    for (auto& [s, step] : next) {
      if (parent.emplace(s, std::make_pair(cur, step)).second) queue.push_back(s);
    }
  }
  throw GraphError("star forest " + arms_text(arms) + " does not reduce to a basic star forest");
}

WitnessPair star_forest_witness(const Graph& f) {
  if (in_R1(f)) throw GraphError("pattern is in R1; no witness exists");
  auto arms = star_forest_arms(f);
  auto steps = star_forest_reduction(arms);
  // Arms of the basic forest at the end of the reduction.
  std::vector<std::size_t> cur = arms;
  for (const auto& s : steps) {
    if (s.kind == ReductionStep::trim_leaves) {
      for (auto& x : cur) --x;
    } else {
      cur.erase(std::find(cur.begin(), cur.end(), s.arm));
    }
  }
  WitnessPair w = basic_star_forest_witness(cur);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->kind == ReductionStep::trim_leaves) {
      w.g = add_pendant_each(w.g);
      w.h = add_pendant_each(w.h);
    } else {
      w.g = disjoint_union(w.g, star_or_point(it->arm));
      w.h = disjoint_union(w.h, star_or_point(it->arm));
    }
  }
  w.name = "star_forest" + arms_text(arms);
  w.pattern = f;
  return w;
}

WitnessPair CoveringWitness::pair() const {
  WitnessPair w;
  w.name = "covering";
  w.g = g;
  w.h = h;
  w.pattern = tree;
  w.level = 1;
  w.claim = Claim::containment_differs;
  return w;
}

CoveringWitness covering_witness(const Graph& tree) {
  if (!is_forest(tree) || !is_connected(tree)) throw GraphError("covering_witness needs a tree");
  auto d0 = bfs_distances(tree, 0);
  const Vertex x = farthest(d0);
  auto dx = bfs_distances(tree, x);
  const Vertex y = farthest(dx);
  if (dx[y] < 3) throw GraphError("tree has no P4 subgraph");
  // Walk back from y toward x, preferring the lowest-index predecessor.
  std::vector<Vertex> path{y};
  while (path.back() != x) {
    const Vertex u = path.back();
    for (Vertex w : tree.neighbors(u)) {
      if (dx[w] + 1 == dx[u]) {
        path.push_back(w);
        break;
      }
    }
  }
  CoveringWitness out;
  out.tree = tree;
  out.diametral_path.assign(path.rbegin(), path.rend());  // v1 = x
  const Vertex a1 = out.diametral_path[0];
  const Vertex a2 = out.diametral_path[1];
  const Vertex a4 = out.diametral_path[3];

  std::vector<Vertex> keep;
  std::vector<Vertex> index(tree.order(), 0);
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (v == a1) continue;
    index[v] = static_cast<Vertex>(keep.size());
    keep.push_back(v);
  }
  out.t_prime = tree.uncolored().induced(keep);
  const Vertex p2 = index[a2];
  const Vertex p4 = index[a4];
  out.t_prime.add_edge(p2, p4);

  const auto m = static_cast<Vertex>(out.t_prime.order());
  out.h = repeat(out.t_prime, 2);
  out.g = out.h;
  out.g.remove_edge(p2, p4);
  out.g.remove_edge(m + p2, m + p4);
  out.g.add_edge(p2, m + p4);
  out.g.add_edge(p4, m + p2);
  out.projection.resize(2 * m);
  for (Vertex v = 0; v < m; ++v) out.projection[v] = out.projection[m + v] = v;
  return out;
}

WitnessPair forest_witness(const Graph& f) {
  if (!is_forest(f)) throw GraphError("forest_witness needs a forest");
  std::size_t count = 0;
  auto comp = connected_components(f, &count);
  std::vector<Graph> gs;
  std::vector<Graph> hs;
  bool any_p4 = false;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < f.order(); ++v) {
      if (comp[v] == c) verts.push_back(v);
    }
    Graph t = f.uncolored().induced(verts);
    auto dist = bfs_distances(t, farthest(bfs_distances(t, 0)));
    if (dist[farthest(dist)] >= 3) {
      auto cw = covering_witness(t);
      gs.push_back(cw.g);
      hs.push_back(cw.h);
      any_p4 = true;
    } else {
      gs.push_back(repeat(t, 2));
      hs.push_back(repeat(t, 2));
    }
  }
  if (!any_p4) throw GraphError("forest has no P4 subgraph");
  WitnessPair w;
  w.name = "forest";
  w.g = sum(std::move(gs));
  w.h = sum(std::move(hs));
  w.pattern = f;
  w.level = 1;
  w.claim = Claim::containment_differs;
  return w;
}

Graph high_girth_regular(std::size_t d, std::size_t g_min, std::uint64_t seed) {
  g_min = std::max<std::size_t>(g_min, 3);
  auto accept = [&](Graph g) {
    auto gv = girth(g);
    if (!is_regular(g, d) || (gv && *gv < g_min)) throw GraphError("catalog graph failed its own check");
    return g;
  };
  if (d == 0) return Graph(1);
  if (d == 1) return gen::complete(2);
  if (d == 2) return gen::cycle(g_min);
  if (g_min <= 3) return accept(gen::complete(d + 1));
  if (g_min <= 4) return accept(gen::complete_bipartite(d, d));
  if (d == 3) {
    if (g_min <= 5) return accept(gen::petersen());
    if (g_min <= 6) return accept(gen::heawood());
    if (g_min <= 7) return accept(gen::mcgee());
    if (g_min <= 8) return accept(gen::tutte_coxeter());
  }
  if (d == 4 && g_min <= 5) return accept(gen::robertson());
  if (g_min <= 6 && is_prime(d - 1)) return accept(projective_plane_incidence(d - 1));

  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, Graph> cache;
  const auto key = std::make_tuple(d, g_min, seed);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::mt19937_64 rng(seed);
  std::size_t n = std::max(2 * moore_bound(d, g_min), d + 2);
  for (int round = 0; round < 12; ++round) {
    if ((n * d) % 2) ++n;
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto g = random_regular(n, d, rng);
      if (!g) continue;
      auto done = switch_out_short_cycles(std::move(*g), g_min, rng);
      if (!done) continue;
      Graph found = accept(std::move(*done));
      std::lock_guard lock(mutex);
      cache.emplace(key, found);
      return found;
    }
    n += n / 4;
  }
  throw GraphError("no " + std::to_string(d) + "-regular graph of girth >= " + std::to_string(g_min) + " found");
}

WitnessPair no_cycle_witness(const Graph& f, std::uint64_t seed) {
  auto m = girth(f);
  if (!m) throw GraphError("no_cycle_witness needs a pattern with a cycle");
  const std::size_t d = f.order() - 1;
  Graph x = high_girth_regular(d, *m + 1, seed);
  WitnessPair w;
  w.name = "no_cycle";
  w.g = repeat(gen::complete(d + 1), x.order());
  w.h = repeat(x, d + 1);
  w.pattern = f;
  w.level = 1;
  w.claim = Claim::containment_differs;
  return w;
}

WitnessPair matching_witness(std::size_t s, const CountOptions& opts) {
  if (s < 6) throw GraphError("matching_witness needs s >= 6");
  Graph g = gen::rook4();
  Graph h = gen::shrikhande();
  for (std::size_t t = 6; t < s; ++t) {
    const Graph next = gen::matching(t + 1);
    if (count_sub(next, g, opts).value == count_sub(next, h, opts).value) {
      g = disjoint_union(g, gen::complete(2));
      h = disjoint_union(h, gen::complete(2));
    }
  }
  WitnessPair w;
  w.name = "matching(" + std::to_string(s) + ")";
  w.g = std::move(g);
  w.h = std::move(h);
  w.pattern = gen::matching(s);
  w.level = 2;
  w.claim = Claim::count_differs;
  if (s == 6) {
    w.expected_g = 96000;
    w.expected_h = 95872;
  }
  return w;
}

namespace {

constexpr long long kP15Rook = 25532928;
constexpr long long kP15Shrikhande = 25560576;
constexpr long long kP16Rook = 11197440;
constexpr long long kP16Shrikhande = 11115264;

// Base graph plus a path on `extra` new vertices whose first (and, if both_ends,
// last) vertex is joined to all 16 base vertices.
Graph attach_path(const Graph& base, std::size_t extra, bool both_ends) {
  Graph g = disjoint_union(base, gen::path(extra));
  const auto first = static_cast<Vertex>(base.order());
  const auto last = static_cast<Vertex>(base.order() + extra - 1);
  for (Vertex v = 0; v < base.order(); ++v) {
    g.add_edge(v, first);
    if (both_ends) g.add_edge(v, last);
  }
  return g;
}

}  // namespace

WitnessPair long_cycle_witness(std::size_t s) {
  if (s <= 16) throw GraphError("long_cycle_witness needs s > 16");
  WitnessPair w;
  w.name = "long_cycle(" + std::to_string(s) + ")";
  w.g = attach_path(gen::rook4(), s - 16, true);
  w.h = attach_path(gen::shrikhande(), s - 16, true);
  w.pattern = gen::cycle(s);
  w.level = 2;
  w.claim = Claim::count_differs;
  w.expected_g = kP16Rook;
  w.expected_h = kP16Shrikhande;
  return w;
}

WitnessPair long_path_witness(std::size_t s) {
  if (s < 17) throw GraphError("long_path_witness needs s >= 17");
  WitnessPair w;
  w.name = "long_path(" + std::to_string(s) + ")";
  w.pattern = gen::path(s);
  w.level = 2;
  w.claim = Claim::count_differs;
  if (s == 17) {
    w.g = add_pendant_each(gen::rook4());
    w.h = add_pendant_each(gen::shrikhande());
    w.expected_g = 2 * BigInt(kP16Rook) + kP15Rook;
    w.expected_h = 2 * BigInt(kP16Shrikhande) + kP15Shrikhande;
  } else {
    w.g = attach_path(gen::rook4(), s - 16, false);
    w.h = attach_path(gen::shrikhande(), s - 16, false);
    w.expected_g = 2 * BigInt(kP16Rook);
    w.expected_h = 2 * BigInt(kP16Shrikhande);
  }
  return w;
}

WitnessPair unique_4clique_witness(const Graph& f_in) {
  const Graph f = f_in.uncolored();
  const Graph k4 = gen::complete(4);
  if (count_sub(k4, f).value != 1) throw GraphError("pattern must contain exactly one 4-clique");
  std::vector<Vertex> q;
  const auto n = static_cast<Vertex>(f.order());
  for (Vertex a = 0; a < n && q.empty(); ++a) {
    for (Vertex b = a + 1; b < n && q.empty(); ++b) {
      if (!f.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n && q.empty(); ++c) {
        if (!f.adjacent(a, c) || !f.adjacent(b, c)) continue;
        for (Vertex d = c + 1; d < n && q.empty(); ++d) {
          if (f.adjacent(a, d) && f.adjacent(b, d) && f.adjacent(c, d)) q = {a, b, c, d};
        }
      }
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(q.begin(), q.end(), v) == q.end()) rest.push_back(v);
  }
  auto build = [&](const Graph& base) {
    Graph star = clone4(base);
    const auto b = static_cast<Vertex>(star.order());
    Graph out = disjoint_union(star, f.induced(rest));
    std::vector<Color> colors = star.colors();
    for (std::size_t i = 0; i < rest.size(); ++i) colors.push_back(static_cast<Color>(5 + i));
    for (Vertex u = 0; u < b; ++u) {
      const Vertex fq = q[star.color(u) - 1];
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (f.adjacent(fq, rest[i])) out.add_edge(u, static_cast<Vertex>(b + i));
      }
    }
    out.set_colors(std::move(colors));
    return out;
  };
  WitnessPair w;
  w.name = "unique_4clique";
  w.g = build(gen::rook4());
  w.h = build(gen::shrikhande());
  w.pattern = f;
  w.level = 2;
  w.claim = Claim::containment_differs;
  return w;
}

Graph ham_to_longpath(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Graph out(8 * static_cast<std::size_t>(n));
  for (auto [a, b] : g.edges()) {
    out.add_edge(a, b);
    out.add_edge(a, n + b);
    out.add_edge(n + a, b);
    out.add_edge(n + a, n + b);
  }
  for (Vertex v = 0; v < n; ++v) {
    const Vertex v1 = 2 * n + 4 * v;
    out.add_edge(v, v1);
    out.add_edge(v1, v1 + 1);
    out.add_edge(v1 + 1, v1 + 2);
    out.add_edge(v1 + 2, v1 + 3);
    out.add_edge(v1 + 3, n + v);
    out.add_edge(6 * n + v, v1 + 1);
    out.add_edge(7 * n + v, v1 + 2);
  }
  return out;
}

WitnessPair r1_refutation(const Graph& f, std::uint64_t seed) {
  if (in_R1(f)) throw GraphError("pattern is in R1; no witness exists");
  if (has_cycle(f)) return no_cycle_witness(f, seed);
  if (!is_star_forest(f)) return forest_witness(f);
  return star_forest_witness(f);
}

WitnessPair c1_refutation(const Graph& f, std::uint64_t seed) {
  if (in_C1(f)) throw GraphError("pattern is in C1; no witness exists");
  if (in_R1(f)) return table1_witness(f);
  return r1_refutation(f, seed);
}

}  // namespace wlpat
