#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wlpat {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite simple undirected graph on {0..n-1} with optional vertex colors.
// Adjacency rows are packed bitsets of words_per_row() 64-bit words.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t degree(Vertex u) const;
  std::vector<Vertex> neighbors(Vertex u) const;
  std::vector<std::size_t> degree_sequence() const;  // sorted descending
  std::size_t max_degree() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool colored() const { return !colors_.empty(); }
  Color color(Vertex v) const { return colors_.empty() ? 0 : colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  void set_colors(std::vector<Color> colors);
  void clear_colors() { colors_.clear(); }

  // Same graph without colors.
  Graph uncolored() const;
  // Graph with vertices relabeled: vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph induced(std::span<const Vertex> vertices) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Color> colors_;
};

// Disjoint nonempty blocks covering the vertex set.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<std::vector<Vertex>> blocks);

  static VertexPartition singletons(std::size_t n);
  static VertexPartition from_labels(std::span<const std::size_t> block_of);

  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  // Throws GraphError unless the blocks partition {0..n-1}.
  void validate(std::size_t n) const;

 private:
  std::vector<std::vector<Vertex>> blocks_;
};

Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_union(std::span<const Graph> parts);
Graph repeat(const Graph& g, std::size_t copies);
Graph join(const Graph& g, const Graph& h);
Graph quotient(const Graph& g, const VertexPartition& p);
// Vertices are the edges of h in Graph::edges() order.
Graph line_graph(const Graph& h);
// Vertex v of x keeps its index; its new pendant neighbor is n + v.
Graph add_pendant_each(const Graph& x);
// Clone v_i of v gets index 4v + (i - 1) and color i, for i in 1..4.
Graph clone4(const Graph& r);
Graph complement(const Graph& g);

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace wlpat
