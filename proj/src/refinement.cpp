#include "wlpat/refinement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "wlpat/enumerate.hpp"
#include "wlpat/isomorphism.hpp"

namespace wlpat {
namespace {

// Flat store of variable-length signatures, renamed to dense ids by sorting.
class SignatureTable {
 public:
  void reserve(std::size_t count, std::size_t words) {
    starts_.reserve(count + 1);
    data_.reserve(count * words);
  }
  void open() { starts_.push_back(data_.size()); }
  void push(std::uint32_t x) { data_.push_back(x); }
  std::size_t count() const { return starts_.size(); }

  std::vector<Color> rename(std::size_t& distinct) {
    const std::size_t m = starts_.size();
    starts_.push_back(data_.size());
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto sig = [this](std::size_t i) {
      return std::span<const std::uint32_t>(data_.data() + starts_[i], starts_[i + 1] - starts_[i]);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto x = sig(a);
      auto y = sig(b);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    std::vector<Color> out(m);
    distinct = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0) {
        auto x = sig(order[i - 1]);
        auto y = sig(order[i]);
        if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) ++distinct;
      }
      out[order[i]] = static_cast<Color>(distinct);
    }
    if (m > 0) ++distinct;
    starts_.pop_back();
    return out;
  }

 private:
  std::vector<std::size_t> starts_;
  std::vector<std::uint32_t> data_;
};

std::size_t tuple_count(const Graph& g, int k) {
  std::size_t t = 1;
  for (int i = 0; i < k; ++i) t *= g.order();
  return t;
}

void initial_signatures(const Graph& g, int k, SignatureTable& table) {
  const auto n = static_cast<Vertex>(g.order());
  if (k == 1) {
    for (Vertex v = 0; v < n; ++v) {
      table.open();
      table.push(g.color(v));
    }
  } else if (k == 2) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        table.open();
        table.push(u == v ? 0U : (g.adjacent(u, v) ? 1U : 2U));
        table.push(g.color(u));
        table.push(g.color(v));
      }
    }
  } else {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        for (Vertex c = 0; c < n; ++c) {
          std::uint32_t code = 0;
          code |= (a == b ? 1U : 0U) << 0;
          code |= (a == c ? 1U : 0U) << 1;
          code |= (b == c ? 1U : 0U) << 2;
          code |= (a != b && g.adjacent(a, b) ? 1U : 0U) << 3;
          code |= (a != c && g.adjacent(a, c) ? 1U : 0U) << 4;
          code |= (b != c && g.adjacent(b, c) ? 1U : 0U) << 5;
          table.open();
          table.push(code);
          table.push(g.color(a));
          table.push(g.color(b));
          table.push(g.color(c));
        }
      }
    }
  }
}

void round_signatures(const Graph& g, int k, std::span<const Color> c, SignatureTable& table) {
  const std::size_t n = g.order();
  if (k == 1) {
    std::vector<Color> multiset;
    for (Vertex v = 0; v < n; ++v) {
      multiset.clear();
      for (Vertex w : g.neighbors(v)) multiset.push_back(c[w]);
      std::sort(multiset.begin(), multiset.end());
      table.open();
      table.push(c[v]);
      for (Color x : multiset) table.push(x);
    }
  } else if (k == 2) {
    std::vector<std::uint64_t> multiset(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
          multiset[w] = (static_cast<std::uint64_t>(c[u * n + w]) << 32) | c[w * n + v];
        }
        std::sort(multiset.begin(), multiset.end());
        table.open();
        table.push(c[u * n + v]);
        for (auto x : multiset) {
          table.push(static_cast<std::uint32_t>(x >> 32));
          table.push(static_cast<std::uint32_t>(x));
        }
      }
    }
  } else {
    std::vector<std::array<Color, 3>> multiset(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t cc = 0; cc < n; ++cc) {
          for (std::size_t w = 0; w < n; ++w) {
            multiset[w] = {c[(w * n + b) * n + cc], c[(a * n + w) * n + cc], c[(a * n + b) * n + w]};
          }
          std::sort(multiset.begin(), multiset.end());
          table.open();
          table.push(c[(a * n + b) * n + cc]);
          for (const auto& t : multiset) {
            table.push(t[0]);
            table.push(t[1]);
            table.push(t[2]);
          }
        }
      }
    }
  }
}

JointColoring run(std::span<const Graph* const> graphs, int k, const std::vector<std::vector<Color>>* initial) {
  if (k < 1 || k > 3) throw GraphError("k-WL dimension must be 1, 2 or 3");
  JointColoring out;
  out.k = k;
  std::vector<std::size_t> offset{0};
  for (const Graph* g : graphs) offset.push_back(offset.back() + tuple_count(*g, k));

  auto split = [&](const std::vector<Color>& flat) {
    std::vector<std::vector<Color>> per(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      per[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                    flat.begin() + static_cast<std::ptrdiff_t>(offset[i + 1]));
    }
    return per;
  };

  SignatureTable table;
  table.reserve(offset.back(), 4);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (initial) {
      const auto& init = (*initial)[i];
      if (init.size() != graphs[i]->order()) throw GraphError("initial coloring has wrong size");
      for (Color x : init) {
        table.open();
        table.push(x);
      }
    } else {
      initial_signatures(*graphs[i], k, table);
    }
  }
  std::size_t classes = 0;
  std::vector<Color> flat = table.rename(classes);

  for (;;) {
    SignatureTable next;
    next.reserve(offset.back(), 1 + k * (graphs.empty() ? 1 : graphs.front()->order()));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::span<const Color> c(flat.data() + offset[i], offset[i + 1] - offset[i]);
      round_signatures(*graphs[i], k, c, next);
    }
    std::size_t next_classes = 0;
    std::vector<Color> refined = next.rename(next_classes);
    flat = std::move(refined);
    if (next_classes == classes) break;
    classes = next_classes;
    ++out.rounds;
  }
  out.palette = classes;
  out.colors = split(flat);
  return out;
}

std::vector<std::size_t> classes_from(const JointColoring& jc) {
  std::map<std::vector<Color>, std::size_t> ids;
  std::vector<std::size_t> out;
  for (const auto& c : jc.colors) {
    std::vector<Color> hist = c;
    std::sort(hist.begin(), hist.end());
    auto [it, inserted] = ids.emplace(std::move(hist), ids.size());
    out.push_back(it->second);
  }
  return out;
}

template <typename Coloring>
Coloring single(const Graph& g, int k) {
  const Graph* ptr = &g;
  auto jc = run(std::span<const Graph* const>(&ptr, 1), k, nullptr);
  Coloring out;
  out.n = g.order();
  out.color = std::move(jc.colors.front());
  out.round_count = jc.rounds;
  out.class_count = jc.palette;
  return out;
}

}  // namespace

JointColoring joint_refine(std::span<const Graph* const> graphs, int k) { return run(graphs, k, nullptr); }

JointColoring joint_refine_1wl(std::span<const Graph* const> graphs, std::span<const std::vector<Color>> initial) {
  if (initial.size() != graphs.size()) throw GraphError("one initial coloring per graph is required");
  std::vector<std::vector<Color>> init(initial.begin(), initial.end());
  return run(graphs, 1, &init);
}

StablePartition refine_1wl(const Graph& g) {
  const Graph* ptr = &g;
  auto jc = run(std::span<const Graph* const>(&ptr, 1), 1, nullptr);
  StablePartition p;
  p.vertex_color = std::move(jc.colors.front());
  p.rounds = jc.rounds;
  p.cells.assign(jc.palette, {});
  for (Vertex v = 0; v < g.order(); ++v) p.cells[p.vertex_color[v]].push_back(v);
  p.cell_color.resize(jc.palette);
  std::iota(p.cell_color.begin(), p.cell_color.end(), Color{0});
  p.degree_matrix.assign(jc.palette, std::vector<std::size_t>(jc.palette, 0));
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    for (Vertex w : g.neighbors(p.cells[i].front())) ++p.degree_matrix[i][p.vertex_color[w]];
  }
  return p;
}

PairColoring refine_2wl(const Graph& g) { return single<PairColoring>(g, 2); }
TripleColoring refine_3wl(const Graph& g) { return single<TripleColoring>(g, 3); }

std::vector<std::size_t> wl_classes(std::span<const Graph* const> graphs, int k) {
  return classes_from(run(graphs, k, nullptr));
}

std::vector<std::size_t> wl_classes(std::span<const Graph> graphs, int k) {
  std::vector<const Graph*> ptrs;
  for (const auto& g : graphs) ptrs.push_back(&g);
  return wl_classes(std::span<const Graph* const>(ptrs), k);
}

bool equiv_kwl(const Graph& g, const Graph& h, int k) {
  if (k < 1 || k > 3) throw GraphError("k-WL dimension must be 1, 2 or 3");
  if (g.order() != h.order()) return false;
  const Graph* ptrs[] = {&g, &h};
  auto ids = wl_classes(std::span<const Graph* const>(ptrs), k);
  return ids[0] == ids[1];
}

bool equiv_1wl(const Graph& g, const Graph& h) { return equiv_kwl(g, h, 1); }

bool amenable(const Graph& h) {
  const auto& all = enumerate_nonisomorphic(h.order());
  const auto degrees = h.degree_sequence();
  std::vector<const Graph*> batch{&h};
  for (const auto& g : all) {
    if (g.degree_sequence() == degrees) batch.push_back(&g);
  }
  auto ids = wl_classes(std::span<const Graph* const>(batch), 1);
  for (std::size_t i = 1; i < batch.size(); ++i) {
    if (ids[i] == ids[0] && !is_isomorphic(*batch[i], h)) return false;
  }
  return true;
}

std::vector<bool> amenable_all(std::size_t n) {
  const auto& all = enumerate_nonisomorphic(n);
  auto ids = wl_classes(std::span<const Graph>(all), 1);
  std::vector<std::size_t> size(all.size(), 0);
  for (auto id : ids) ++size[id];
  std::vector<bool> out;
  for (auto id : ids) out.push_back(size[id] == 1);
  return out;
}

bool is_covering_map(const Graph& g, const Graph& t, std::span<const Vertex> f) {
  if (f.size() != g.order()) return false;
  std::vector<bool> hit(t.order(), false);
  for (Vertex x : f) {
    if (x >= t.order()) return false;
    hit[x] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (auto [u, v] : g.edges()) {
    if (f[u] == f[v] || !t.adjacent(f[u], f[v])) return false;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<bool> covered(t.order(), false);
    for (Vertex w : g.neighbors(u)) covered[f[w]] = true;
    for (Vertex y : t.neighbors(f[u])) {
      if (!covered[y]) return false;
    }
  }
  return true;
}

}  // namespace wlpat
