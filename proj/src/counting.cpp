#include "wlpat/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <queue>

namespace wlpat {
namespace {

enum class Mode { hom, injective, sub, exists };

struct Plan {
  std::vector<Vertex> order;
  std::vector<std::vector<std::size_t>> back;     // earlier levels adjacent to this one
  std::vector<std::vector<std::size_t>> above;    // earlier levels whose image must be smaller
  std::vector<std::vector<std::size_t>> below;    // earlier levels whose image must be larger
  std::vector<std::size_t> degree;
};

Plan make_plan(const Graph& f, const std::vector<std::pair<Vertex, Vertex>>& conditions) {
  const auto k = static_cast<Vertex>(f.order());
  Plan p;
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> placed_nbrs(k, 0);
  std::vector<std::size_t> level_of(k, 0);
  for (Vertex step = 0; step < k; ++step) {
    Vertex best = k;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (best == k || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && f.degree(v) > f.degree(best))) {
        best = v;
      }
    }
    placed[best] = true;
    level_of[best] = p.order.size();
    p.order.push_back(best);
    for (Vertex w : f.neighbors(best)) ++placed_nbrs[w];
  }
  p.back.resize(k);
  p.above.resize(k);
  p.below.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = p.order[i];
    p.degree.push_back(f.degree(v));
    for (Vertex w : f.neighbors(v)) {
      if (level_of[w] < i) p.back[i].push_back(level_of[w]);
    }
  }
  for (auto [a, b] : conditions) {
    const std::size_t la = level_of[a];
    const std::size_t lb = level_of[b];
    if (la < lb) {
      p.above[lb].push_back(la);
    } else {
      p.below[la].push_back(lb);
    }
  }
  return p;
}

class Engine {
 public:
  Engine(const Graph& g, const Plan& plan, Mode mode, std::uint64_t budget)
      : g_(g), plan_(plan), mode_(mode), budget_(budget), words_(g.words_per_row()) {
    const std::size_t k = plan.order.size();
    buffers_.assign(k * words_, 0);
    used_.assign(words_, 0);
    image_.assign(k, 0);
    all_.assign(words_, 0);
    for (Vertex v = 0; v < g.order(); ++v) all_[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (mode_ != Mode::hom) {
      std::size_t max_deg = 0;
      for (auto d : plan.degree) max_deg = std::max(max_deg, d);
      degree_masks_.assign((max_deg + 1) * words_, 0);
      for (std::size_t d = 0; d <= max_deg; ++d) {
        for (Vertex v = 0; v < g.order(); ++v) {
          if (g.degree(v) >= d) degree_masks_[d * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
      }
    }
  }

  std::uint64_t run() {
    if (!plan_.order.empty()) descend(0);
    return count_;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void descend(std::size_t i) {
    std::uint64_t* c = buffers_.data() + i * words_;
    const auto& back = plan_.back[i];
    if (back.empty()) {
      std::copy(all_.begin(), all_.end(), c);
    } else {
      auto r = g_.row(image_[back[0]]);
      std::copy(r.begin(), r.end(), c);
      for (std::size_t j = 1; j < back.size(); ++j) {
        auto rj = g_.row(image_[back[j]]);
        for (std::size_t w = 0; w < words_; ++w) c[w] &= rj[w];
      }
    }
    if (mode_ != Mode::hom) {
      const std::uint64_t* dm = degree_masks_.data() + plan_.degree[i] * words_;
      for (std::size_t w = 0; w < words_; ++w) c[w] &= ~used_[w] & dm[w];
    }
    for (std::size_t j : plan_.above[i]) keep_above(c, image_[j]);
    for (std::size_t j : plan_.below[i]) keep_below(c, image_[j]);

    if (i + 1 == plan_.order.size()) {
      tick();
      for (std::size_t w = 0; w < words_; ++w) count_ += static_cast<std::uint64_t>(std::popcount(c[w]));
      if (mode_ == Mode::exists && count_ > 0) done_ = true;
      return;
    }
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = c[w];
      while (bits) {
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        tick();
        image_[i] = v;
        used_[v >> 6] |= std::uint64_t{1} << (v & 63);
        descend(i + 1);
        used_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        if (done_) return;
      }
    }
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
  }

  // Keep only bits strictly greater than x.
  void keep_above(std::uint64_t* c, Vertex x) const {
    const std::size_t wx = x >> 6;
    for (std::size_t w = 0; w < wx; ++w) c[w] = 0;
    const unsigned b = x & 63;
    c[wx] &= b == 63 ? 0 : ~((std::uint64_t{2} << b) - 1);
  }
  // Keep only bits strictly less than x.
  void keep_below(std::uint64_t* c, Vertex x) const {
    const std::size_t wx = x >> 6;
    c[wx] &= (std::uint64_t{1} << (x & 63)) - 1;
    for (std::size_t w = wx + 1; w < words_; ++w) c[w] = 0;
  }

  const Graph& g_;
  const Plan& plan_;
  Mode mode_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::uint64_t> buffers_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> all_;
  std::vector<std::uint64_t> degree_masks_;
  std::vector<Vertex> image_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

struct Stripped {
  Graph core;
  std::size_t isolated = 0;
};

Stripped strip(const Graph& f) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (f.degree(v) > 0) keep.push_back(v);
  }
  Stripped s{f.uncolored().induced(keep), f.order() - keep.size()};
  return s;
}

BigInt falling(std::size_t n, std::size_t r) {
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (n < i) return 0;
    out *= n - i;
  }
  return out;
}

BigInt power(std::size_t n, std::size_t r) {
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) out *= n;
  return out;
}

CountResult backtrack(const Graph& core, const Graph& g, Mode mode, std::uint64_t budget) {
  std::vector<std::pair<Vertex, Vertex>> conditions;
  if (mode == Mode::sub || mode == Mode::exists) conditions = symmetry_conditions(core);
  Plan plan = make_plan(core, conditions);
  const Graph host = g.uncolored();
  Engine engine(host, plan, mode, budget);
  CountResult r;
  r.value = engine.run();
  r.nodes = engine.nodes();
  r.method = CountMethod::backtrack;
  return r;
}

enum class Shape { other, path, cycle };

Shape shape_of(const Graph& core) {
  const std::size_t k = core.order();
  if (k < 2 || !is_connected(core) || core.max_degree() > 2) return Shape::other;
  if (core.size() + 1 == k) return Shape::path;
  if (core.size() == k && k >= 3) return Shape::cycle;
  return Shape::other;
}

CountResult subset_dp(const Graph& g, std::size_t k, Shape shape, std::uint64_t budget) {
  const std::size_t n = g.order();
  CountResult r;
  r.method = CountMethod::subset_dp;
  if (k > n) {
    r.value = 0;
    return r;
  }
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint64_t> dp(masks * n, 0);
  for (Vertex v = 0; v < n; ++v) dp[(std::size_t{1} << v) * n + v] = 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  }
  std::uint64_t total = 0;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const auto start = static_cast<Vertex>(std::countr_zero(mask));
    const std::uint64_t* row = dp.data() + mask * n;
    if (size == k) {
      for (Vertex v = 0; v < n; ++v) {
        if (!row[v]) continue;
        if (shape == Shape::path || ((nbr[v] >> start) & 1U)) total += row[v];
      }
      continue;
    }
    if (size > k) continue;
    if ((r.nodes += n) > budget) throw BudgetExceeded(budget);
    for (Vertex v = 0; v < n; ++v) {
      if (!row[v]) continue;
      std::uint32_t ext = nbr[v] & ~static_cast<std::uint32_t>(mask);
      if (shape == Shape::cycle) ext &= ~((2U << start) - 1);
      while (ext) {
        const auto w = static_cast<Vertex>(std::countr_zero(ext));
        ext &= ext - 1;
        dp[(mask | (std::size_t{1} << w)) * n + w] += row[v];
      }
    }
  }
  r.value = total / 2;
  return r;
}

}  // namespace

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::backtrack: return "backtrack";
    case CountMethod::subset_dp: return "subset_dp";
    case CountMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

std::uint64_t effective_budget(const CountOptions& opts) {
  if (opts.budget) return opts.budget;
  if (const char* env = std::getenv("WLP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

CountResult count_hom(const Graph& f, const Graph& g, const CountOptions& opts) {
  auto s = strip(f);
  CountResult r;
  if (s.core.order() == 0) {
    r.value = 1;
  } else {
    r = backtrack(s.core, g, Mode::hom, effective_budget(opts));
  }
  r.value *= power(g.order(), s.isolated);
  return r;
}

CountResult count_injective(const Graph& f, const Graph& g, const CountOptions& opts) {
  auto s = strip(f);
  CountResult r;
  if (s.core.order() == 0) {
    r.value = 1;
  } else if (s.core.order() > g.order()) {
    r.value = 0;
    return r;
  } else {
    r = backtrack(s.core, g, Mode::injective, effective_budget(opts));
  }
  r.value *= falling(g.order() - s.core.order(), s.isolated);
  return r;
}

CountResult count_sub(const Graph& f, const Graph& g, const CountOptions& opts) {
  auto s = strip(f);
  const std::size_t n = g.order();
  CountResult r;
  if (s.core.order() > n) {
    r.value = 0;
    return r;
  }
  if (s.core.order() == 0) {
    r.value = 1;
  } else {
    const Shape shape = shape_of(s.core);
    const bool dp_ok = shape != Shape::other && n <= kSubsetDpMaxOrder;
    if (opts.route == Route::subset_dp && !dp_ok) {
      throw GraphError("subset_dp route needs a path or cycle pattern and at most 18 host vertices");
    }
    if (dp_ok && opts.route != Route::backtrack) {
      r = subset_dp(g.uncolored(), s.core.order(), shape, effective_budget(opts));
    } else {
      r = backtrack(s.core, g, Mode::sub, effective_budget(opts));
    }
  }
  r.value *= binomial(n - s.core.order(), s.isolated);
  return r;
}

bool contains_sub(const Graph& f, const Graph& g, const CountOptions& opts) {
  auto s = strip(f);
  if (f.order() > g.order()) return false;
  if (s.core.order() == 0) return true;
  return backtrack(s.core, g, Mode::exists, effective_budget(opts)).value > 0;
}

std::optional<std::size_t> girth(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::size_t best = 0;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (best && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return best;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

CountResult star_count_closed(const Graph& g, std::size_t s) {
  if (s == 0) throw GraphError("star size must be positive");
  CountResult r;
  r.method = CountMethod::closed_form;
  r.value = 0;
  for (Vertex v = 0; v < g.order(); ++v) r.value += binomial(g.degree(v), s);
  return r;
}

CountResult two_matching_closed(const Graph& g) {
  CountResult r = star_count_closed(g, 2);
  r.value = binomial(g.size(), 2) - r.value;
  return r;
}

}  // namespace wlpat
