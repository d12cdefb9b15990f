#include "wlpat/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace wlpat {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  auto r = row(u);
  for (std::size_t i = 0; i < words_; ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacent(u, v)) return;
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --m_;
}

void Graph::set_colors(std::vector<Color> colors) {
  if (!colors.empty() && colors.size() != n_) {
    throw GraphError("color vector has " + std::to_string(colors.size()) + " entries, expected " +
                     std::to_string(n_));
  }
  colors_ = std::move(colors);
}

Graph Graph::uncolored() const {
  Graph g = *this;
  g.colors_.clear();
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw GraphError("permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  if (colored()) {
    std::vector<Color> c(n_);
    for (Vertex v = 0; v < n_; ++v) c[perm[v]] = colors_[v];
    g.colors_ = std::move(c);
  }
  return g;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (colored()) {
    std::vector<Color> c;
    for (Vertex v : vertices) c.push_back(colors_[v]);
    g.colors_ = std::move(c);
  }
  return g;
}

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
}

VertexPartition VertexPartition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> blocks(n);
  for (std::size_t v = 0; v < n; ++v) blocks[v] = {static_cast<Vertex>(v)};
  return VertexPartition(std::move(blocks));
}

VertexPartition VertexPartition::from_labels(std::span<const std::size_t> block_of) {
  std::size_t k = 0;
  for (auto b : block_of) k = std::max(k, b + 1);
  std::vector<std::vector<Vertex>> blocks(k);
  for (std::size_t v = 0; v < block_of.size(); ++v) blocks[block_of[v]].push_back(static_cast<Vertex>(v));
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return VertexPartition(std::move(blocks));
}

void VertexPartition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw GraphError("partition has an empty block");
    for (Vertex v : b) {
      if (v >= n) throw GraphError("partition mentions vertex " + std::to_string(v) + " outside the graph");
      if (seen[v]) throw GraphError("partition blocks overlap at vertex " + std::to_string(v));
      seen[v] = true;
      ++total;
    }
  }
  if (total != n) throw GraphError("partition does not cover every vertex");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const Graph parts[] = {g, h};
  return disjoint_union(parts);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  bool any_colored = false;
  for (const auto& p : parts) {
    n += p.order();
    any_colored = any_colored || p.colored();
  }
  Graph out(n);
  std::vector<Color> colors;
  Vertex offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) out.add_edge(offset + u, offset + v);
    if (any_colored) {
      for (Vertex v = 0; v < p.order(); ++v) colors.push_back(p.color(v));
    }
    offset += static_cast<Vertex>(p.order());
  }
  if (any_colored) out.set_colors(std::move(colors));
  return out;
}

Graph repeat(const Graph& g, std::size_t copies) {
  std::vector<Graph> parts(copies, g);
  return disjoint_union(parts);
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, n + v);
  }
  return out;
}

Graph quotient(const Graph& g, const VertexPartition& p) {
  p.validate(g.order());
  std::vector<std::size_t> block_of(g.order());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    for (Vertex v : p.blocks()[b]) block_of[v] = b;
  }
  Graph out(p.block_count());
  for (auto [u, v] : g.edges()) {
    if (block_of[u] != block_of[v]) {
      out.add_edge(static_cast<Vertex>(block_of[u]), static_cast<Vertex>(block_of[v]));
    }
  }
  return out;
}

Graph line_graph(const Graph& h) {
  const auto e = h.edges();
  Graph out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

Graph add_pendant_each(const Graph& x) {
  const auto n = static_cast<Vertex>(x.order());
  Graph out(2 * x.order());
  for (auto [u, v] : x.edges()) out.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) out.add_edge(v, n + v);
  if (x.colored()) {
    auto c = x.colors();
    c.insert(c.end(), x.colors().begin(), x.colors().end());
    out.set_colors(std::move(c));
  }
  return out;
}

Graph clone4(const Graph& r) {
  if (r.colored()) throw GraphError("clone4 expects an uncolored graph");
  Graph out(4 * r.order());
  for (auto [u, v] : r.edges()) {
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = 0; j < 4; ++j) {
        if (i != j) out.add_edge(4 * u + i, 4 * v + j);
      }
    }
  }
  std::vector<Color> colors(out.order());
  for (std::size_t v = 0; v < out.order(); ++v) colors[v] = static_cast<Color>(v % 4 + 1);
  out.set_colors(std::move(colors));
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  if (g.colored()) out.set_colors(g.colors());
  return out;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), unset);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != unset) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == unset) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  std::size_t k = 0;
  connected_components(g, &k);
  return k <= 1;
}

bool is_forest(const Graph& g) {
  std::size_t k = 0;
  connected_components(g, &k);
  return g.size() + k == g.order();
}

}  // namespace wlpat
