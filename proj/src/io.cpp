#include "wlpat/io.hpp"

#include <sstream>

namespace wlpat {
namespace {

[[noreturn]] void bad(std::size_t offset, const std::string& what) {
  throw GraphError("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw GraphError("graph6: more than 62 vertices is unsupported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t begin = 0;
  if (text.starts_with(">>graph6<<")) begin = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (begin >= text.size()) bad(begin, "missing vertex count");
  const int first = static_cast<unsigned char>(text[begin]);
  if (first == 126) bad(begin, "long-form vertex count is unsupported");
  if (first < 63 || first > 125) bad(begin, "invalid vertex count byte");
  const std::size_t n = static_cast<std::size_t>(first - 63);
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - begin - 1;
  if (have < need) bad(text.size(), "truncated input");
  if (have > need) bad(begin + 1 + need, "trailing bytes");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const std::size_t off = begin + 1 + k / 6;
      const int c = static_cast<unsigned char>(text[off]);
      if (c < 63 || c > 126) bad(off, "invalid data byte");
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (std::size_t off = begin + 1; off < text.size(); ++off) {
    const int c = static_cast<unsigned char>(text[off]);
    if (c < 63 || c > 126) bad(off, "invalid data byte");
  }
  return g;
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (g.colored()) {
    for (Vertex v = 0; v < g.order(); ++v) out << "c " << v << ' ' << g.color(v) << '\n';
  }
  return out.str();
}

Graph from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long k = -1;
  if (!(in >> n >> k) || n < 0 || k < 0) throw GraphError("text graph: bad header");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < k; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("text graph: bad edge line " + std::to_string(i + 1));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string tag;
  std::vector<Color> colors;
  while (in >> tag) {
    long long v = -1;
    long long c = -1;
    if (tag != "c" || !(in >> v >> c) || v < 0 || v >= n || c < 0) throw GraphError("text graph: bad color line");
    if (colors.empty()) colors.assign(static_cast<std::size_t>(n), 0);
    colors[static_cast<std::size_t>(v)] = static_cast<Color>(c);
  }
  if (!colors.empty()) g.set_colors(std::move(colors));
  return g;
}

}  // namespace wlpat
