#include "wlpat/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "wlpat/classify.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/io.hpp"
#include "wlpat/isomorphism.hpp"
#include "wlpat/patterns.hpp"
#include "wlpat/refinement.hpp"
#include "wlpat/witnesses.hpp"

namespace wlpat {
namespace {

constexpr long long kPathRook[] = {275616, 880128, 2506752, 6239232, 13189248, 22631040, 29376000, 25532928, 11197440};
constexpr long long kPathShrikhande[] = {274560,   877440,   2512512,  6283392, 13293696,
                                         22754688, 29457408, 25560576, 11115264};

Graph named(const std::string& text) { return generate(PatternName::parse(text)); }

std::string yes(bool b) { return b ? "true" : "false"; }

class Builder {
 public:
  Builder(const VerifyOptions& opts, VerifyReport& report) : opts_(opts), report_(report) {
    count_opts_.budget = opts.budget;
  }

  void row(std::string group, std::string id, std::string source, std::string expected, std::string measured) {
    const bool pass = expected == measured;
    report_.rows.push_back({std::move(id), std::move(group), std::move(source), std::move(expected),
                            std::move(measured), pass});
  }
  void check(std::string group, std::string id, std::string source, std::string expected, std::string measured,
             bool pass) {
    report_.rows.push_back({std::move(id), std::move(group), std::move(source), std::move(expected),
                            std::move(measured), pass});
  }

  std::string sub(const Graph& f, const Graph& g) {
    try {
      if (opts_.counter) return opts_.counter(f, g).str();
      return count_sub(f, g, count_opts_).value.str();
    } catch (const std::exception& e) {
      return std::string("error: ") + e.what();
    }
  }

  const VerifyOptions& opts() const { return opts_; }
  const CountOptions& count_opts() const { return count_opts_; }

 private:
  const VerifyOptions& opts_;
  VerifyReport& report_;
  CountOptions count_opts_;
};

void group_table1(Builder& b) {
  struct Item {
    const char* pattern;
    const char* host;
    const char* expected;
  };
  const Item items[] = {
      {"P(3)+P(2)", "C(6)", "12"},        {"P(3)+P(2)", "2*C(3)", "18"},     {"2*P(3)", "C(6)", "3"},
      {"2*P(3)", "2*C(3)", "9"},          {"P(3)+2*P(2)", "C(7)", "7"},      {"P(3)+2*P(2)", "C(4)+C(3)", "6"},
  };
  for (const auto& it : items) {
    b.row("table1", std::string("sub(") + it.pattern + ", " + it.host + ")", "reference", it.expected,
          b.sub(named(it.pattern), named(it.host)));
  }
}

void group_matching(Builder& b) {
  const Graph f = gen::matching(6);
  b.row("matching", "sub(6K2, rook4)", "reference", "96000", b.sub(f, gen::rook4()));
  b.row("matching", "sub(6K2, shrikhande)", "reference", "95872", b.sub(f, gen::shrikhande()));
}

void group_paths(Builder& b) {
  for (std::size_t k = 8; k <= 16; ++k) {
    const Graph p = gen::path(k);
    b.row("paths", "sub(P" + std::to_string(k) + ", rook4)", "reference", std::to_string(kPathRook[k - 8]),
          b.sub(p, gen::rook4()));
    b.row("paths", "sub(P" + std::to_string(k) + ", shrikhande)", "reference",
          std::to_string(kPathShrikhande[k - 8]), b.sub(p, gen::shrikhande()));
  }
}

void group_equivalence(Builder& b) {
  b.row("equivalence", "2wl(rook4, shrikhande)", "reference", "true", yes(equiv_kwl(gen::rook4(), gen::shrikhande(), 2)));
  b.row("equivalence", "iso(rook4, shrikhande)", "reference", "false", yes(is_isomorphic(gen::rook4(), gen::shrikhande())));
  b.row("equivalence", "1wl(C6, 2C3)", "reference", "true", yes(equiv_1wl(named("C(6)"), named("2*C(3)"))));
  b.row("equivalence", "1wl(C7, C4+C3)", "reference", "true", yes(equiv_1wl(named("C(7)"), named("C(4)+C(3)"))));
  std::vector<std::vector<std::size_t>> basics{{3, 1}, {4, 1}, {5, 1}, {3, 2}, {3, 3}};
  for (std::size_t s = 1; s <= 5; ++s) basics.push_back({s, s, 1});
  for (const auto& arms : basics) {
    auto w = basic_star_forest_witness(arms);
    b.row("equivalence", "1wl(" + w.name + ")", "reference", "true", yes(equiv_1wl(w.g, w.h)));
  }
}

void group_girth(Builder& b) {
  auto show = [](std::optional<std::size_t> g) { return g ? std::to_string(*g) : std::string("inf"); };
  b.row("girth", "girth(rook4)", "derived", "3", show(girth(gen::rook4())));
  b.row("girth", "girth(shrikhande)", "derived", "3", show(girth(gen::shrikhande())));
  for (std::size_t s = 3; s <= 8; ++s) {
    const Graph c = gen::cycle(s);
    const std::string x = b.sub(c, gen::rook4());
    const std::string y = b.sub(c, gen::shrikhande());
    const bool ok = x.rfind("error", 0) != 0 && y.rfind("error", 0) != 0 && (s <= 7 ? x == y : x != y);
    b.check("girth", "sub(C" + std::to_string(s) + ") rook4 vs shrikhande", s <= 7 ? "reference" : "derived",
            s <= 7 ? "equal" : "unequal", x + " vs " + y, ok);
  }
}

// Star forests with arms >= 1 and at most max_vertices vertices, arms descending.
std::vector<std::vector<std::size_t>> star_forests(std::size_t max_vertices) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_arm) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t a = std::min(max_arm, left >= 2 ? left - 1 : 0); a >= 1; --a) {
      cur.push_back(a);
      rec(left - a - 1, a);
      cur.pop_back();
    }
  };
  rec(max_vertices, max_vertices);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    auto size = [](const auto& v) { return std::accumulate(v.begin(), v.end(), v.size()); };
    return size(x) < size(y);
  });
  return out;
}

std::string arms_name(const std::vector<std::size_t>& arms) {
  std::string out;
  for (std::size_t i = 0; i < arms.size(); ++i) out += (i ? "+" : "") + std::string("K1,") + std::to_string(arms[i]);
  return out;
}

Graph forest_graph(const std::vector<std::size_t>& arms) {
  std::vector<Graph> parts;
  for (auto a : arms) parts.push_back(gen::star(a));
  return disjoint_union(std::span<const Graph>(parts));
}

void group_classify(Builder& b) {
  using Arms = std::vector<std::size_t>;
  const std::vector<Arms> r1_extra{{2, 1}, {2, 1, 1}, {2, 2}};
  for (const auto& arms : star_forests(7)) {
    const Graph f = forest_graph(arms);
    const bool c1 = arms.size() == 1 || arms == Arms{1, 1};
    const bool r1 = c1 || std::find(r1_extra.begin(), r1_extra.end(), arms) != r1_extra.end();
    b.row("classify", "in_C1(" + arms_name(arms) + ")", "reference", yes(c1), yes(in_C1(f)));
    b.row("classify", "in_R1(" + arms_name(arms) + ")", "reference", yes(r1), yes(in_R1(f)));
  }
  const std::pair<const char*, bool> htw[] = {{"C(7)", true},   {"C(8)", false},  {"P(7)", true},
                                              {"P(8)", false},  {"5*K(2)", true}, {"6*K(2)", false}};
  for (auto [name, expected] : htw) {
    const Graph f = named(name);
    auto r = htw_le_2(f);
    bool ok = r.value == expected;
    if (!r.value) ok = ok && r.evidence && is_isomorphic(quotient(f, *r.evidence), gen::complete(4));
    b.check("classify", std::string("htw_le_2(") + name + ")", "reference", yes(expected), yes(r.value), ok);
  }
}

void group_witnesses(Builder& b) {
  auto add = [&](const WitnessPair& w) {
    auto r = verify(w, b.count_opts());
    std::string measured = r.pass ? "pass" : "fail";
    measured += " (" + r.measured_g.str() + " vs " + r.measured_h.str() + (r.error.empty() ? "" : "; " + r.error) + ")";
    b.check("witnesses", w.name, "derived", "pass", measured, r.pass);
  };
  for (const char* f : {"P(3)+P(2)", "2*P(3)", "P(3)+2*P(2)"}) add(table1_witness(named(f)));
  for (std::size_t s = 3; s <= 5; ++s) add(basic_star_forest_witness(std::vector<std::size_t>{s, 1}));
  add(basic_star_forest_witness(std::vector<std::size_t>{3, 2}));
  add(basic_star_forest_witness(std::vector<std::size_t>{3, 3}));
  for (std::size_t s = 1; s <= 5; ++s) add(basic_star_forest_witness(std::vector<std::size_t>{s, s, 1}));
  std::size_t taken = 0;
  for (const auto& arms : star_forests(10)) {
    if (taken == 10) break;
    const Graph f = forest_graph(arms);
    if (in_R1(f)) continue;
    add(star_forest_witness(f));
    ++taken;
  }
  auto cover = covering_witness(gen::path(4));
  b.row("witnesses", "covering(P4) = (C6, 2C3)", "derived", "true",
        yes(is_isomorphic(cover.g, gen::cycle(6)) && is_isomorphic(cover.h, named("2*C(3)"))));
  add(cover.pair());
  add(no_cycle_witness(gen::complete(3), b.opts().seed));
  for (std::size_t s = 6; s <= 8; ++s) add(matching_witness(s, b.count_opts()));
  add(long_cycle_witness(17));
  add(long_path_witness(17));
  add(long_path_witness(18));
  add(unique_4clique_witness(gen::complete(4)));
  Graph pendant = disjoint_union(gen::complete(4), Graph(1));
  pendant.add_edge(0, 4);
  add(unique_4clique_witness(pendant));
}

std::string exception_name(const Graph& g) {
  const Graph core = strip_isolated(g);
  const std::size_t r = g.order() - core.order();
  std::string base;
  if (is_isomorphic(core, named("2*C(3)"))) {
    base = "2C3";
  } else if (is_isomorphic(core, gen::cycle(6))) {
    base = "C6";
  } else if (is_isomorphic(core, gen::complete_bipartite(3, 3))) {
    base = "K33";
  } else if (is_isomorphic(core, complement(gen::cycle(6)))) {
    base = "prism";
  } else {
    return to_graph6(g);
  }
  return r == 0 ? base : base + "+" + std::to_string(r) + "K1";
}

// Non-amenable graphs with n <= 7 whose isolated-vertex-free core has at
// most 6 vertices: every graph of that order is (P3+2P2)-free.
constexpr const char* kSmallNonAmenable =
    "2C3,2C3+1K1,C6,C6+1K1,EEj_,EEz_,EQjO,EQzO,F?qf?,F?rf?,FCQUO,FCRUO,K33,K33+1K1,prism,prism+1K1";

void group_amenability(Builder& b) {
  constexpr std::size_t kMax = 7;
  struct Item {
    const char* name;
    std::optional<ForbiddenPattern> pattern;  // nullopt: forests
    const char* expected;
  };
  const Item items[] = {
      {"forb(P3+P2)", ForbiddenPattern::P3_plus_P2, "none"},
      {"forb(2P3)", ForbiddenPattern::two_P3, "none"},
      {"forb(3P2)", ForbiddenPattern::three_P2, "2C3,2C3+1K1"},
      {"forests", std::nullopt, "none"},
      {"forb(P3+2P2)", ForbiddenPattern::P3_plus_two_P2, nullptr},
  };
  std::vector<std::vector<bool>> am;
  for (std::size_t n = 1; n <= kMax; ++n) am.push_back(amenable_all(n));
  auto join = [](std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& x : names) out += (out.empty() ? "" : ",") + x;
    return out.empty() ? std::string("none") : out;
  };
  for (const auto& it : items) {
    std::vector<std::string> small;
    std::vector<std::string> large;
    std::size_t members = 0;
    for (std::size_t n = 1; n <= kMax; ++n) {
      const auto& all = enumerate_nonisomorphic(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const bool member = it.pattern ? !contains_sub(forbidden_pattern_graph(*it.pattern), all[i]) : is_forest(all[i]);
        if (!member) continue;
        ++members;
        if (am[n - 1][i]) continue;
        (strip_isolated(all[i]).order() <= 6 ? small : large).push_back(exception_name(all[i]));
      }
    }
    const std::string suffix = ", n<=7 (" + std::to_string(members) + " graphs)";
    if (it.expected) {
      std::vector<std::string> names = small;
      names.insert(names.end(), large.begin(), large.end());
      b.row("amenability", std::string("non-amenable members of ") + it.name + suffix, "reference", it.expected,
            join(names));
    } else {
      b.row("amenability", std::string("non-amenable members of ") + it.name + " with core order > 6" + suffix,
            "reference", "none", join(large));
      b.row("amenability", std::string("non-amenable members of ") + it.name + " with core order <= 6" + suffix,
            "derived", kSmallNonAmenable, join(small));
    }
  }
  b.row("amenability", "2C3 and C6 are not amenable", "reference", "true",
        yes(!amenable(named("2*C(3)")) && !amenable(gen::cycle(6))));
}

void group_forbidden(Builder& b) {
  const std::size_t cap = b.opts().enum_cap;
  const std::pair<ForbiddenPattern, const char*> items[] = {{ForbiddenPattern::two_P2, "2P2"},
                                                            {ForbiddenPattern::three_P2, "3P2"},
                                                            {ForbiddenPattern::P3_plus_P2, "P3+P2"},
                                                            {ForbiddenPattern::P3_plus_two_P2, "P3+2P2"},
                                                            {ForbiddenPattern::two_P3, "2P3"}};
  for (auto [p, name] : items) {
    const Graph f = forbidden_pattern_graph(p);
    std::size_t total = 0;
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= cap; ++n) {
      for (const auto& h : enumerate_nonisomorphic(n)) {
        ++total;
        if (pattern_free_characterized(h, p) != !contains_sub(f, h, b.count_opts())) ++bad;
      }
    }
    b.row("forbidden", std::string("forb(") + name + ") characterization vs search, n<=" + std::to_string(cap) + " (" +
                          std::to_string(total) + " graphs)",
          "property", "0 disagreements", std::to_string(bad) + " disagreements");
  }
}

void group_reduction(Builder& b) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t bad = 0;
    std::size_t ham = 0;
    const auto& all = enumerate_nonisomorphic(n);
    for (const auto& g : all) {
      const bool h = is_hamiltonian_bruteforce(g);
      ham += h ? 1 : 0;
      if (h != has_path_on(ham_to_longpath(g), 6 * n + 2)) ++bad;
    }
    b.row("reduction", "Hamiltonian iff path on 6n+2 vertices, n=" + std::to_string(n) + " (" +
                           std::to_string(all.size()) + " graphs, " + std::to_string(ham) + " Hamiltonian)",
          "property", "0 mismatches", std::to_string(bad) + " mismatches");
  }
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void group_properties(Builder& b) {
  std::mt19937_64 rng(b.opts().seed);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  std::size_t eq3_bad = 0;
  std::size_t star_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    if (two_matching_closed(g).value != count_sub(gen::matching(2), g).value) ++eq3_bad;
    for (std::size_t s = 2; s <= 4; ++s) {
      if (star_count_closed(g, s).value != count_sub(gen::star(s), g).value) ++star_bad;
    }
  }
  b.row("properties", "two-matching closed form vs count, 200 random graphs", "property", "0 mismatches",
        std::to_string(eq3_bad) + " mismatches");
  b.row("properties", "star closed form vs count, s=2..4, 200 random graphs", "property", "0 mismatches",
        std::to_string(star_bad) + " mismatches");

  const std::pair<Graph, Graph> pairs[] = {{named("C(6)"), named("2*C(3)")}, {named("C(7)"), named("C(4)+C(3)")}};
  std::size_t union_bad = 0;
  for (const auto& [a, bb] : pairs) {
    for (const auto& [a2, b2] : pairs) {
      if (!equiv_1wl(disjoint_union(a, a2), disjoint_union(bb, b2))) ++union_bad;
    }
  }
  b.row("properties", "1-WL equivalence closed under disjoint union", "property", "0 failures",
        std::to_string(union_bad) + " failures");

  // Equal cell sizes and degree matrices iff 1-WL equivalent; hierarchy and
  // relabeling invariance of k-WL over all pairs of graphs with n <= 6.
  std::size_t dm_bad = 0;
  std::size_t hier_bad = 0;
  std::size_t iso_bad = 0;
  std::size_t pair_total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto& all = enumerate_nonisomorphic(n);
    std::vector<StablePartition> parts;
    for (const auto& g : all) parts.push_back(refine_1wl(g));
    const auto c1 = wl_classes(std::span<const Graph>(all), 1);
    const auto c2 = wl_classes(std::span<const Graph>(all), 2);
    const auto c3 = wl_classes(std::span<const Graph>(all), 3);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        ++pair_total;
        std::vector<std::size_t> si;
        std::vector<std::size_t> sj;
        for (const auto& c : parts[i].cells) si.push_back(c.size());
        for (const auto& c : parts[j].cells) sj.push_back(c.size());
        const bool same = si == sj && parts[i].degree_matrix == parts[j].degree_matrix;
        if (same != equiv_1wl(all[i], all[j])) ++dm_bad;
        if (same != (c1[i] == c1[j])) ++dm_bad;
        if (c3[i] == c3[j] && c2[i] != c2[j]) ++hier_bad;
        if (c2[i] == c2[j] && c1[i] != c1[j]) ++hier_bad;
      }
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph r = all[i].relabeled(perm);
      for (int k = 1; k <= 3; ++k) iso_bad += equiv_kwl(all[i], r, k) ? 0 : 1;
    }
  }
  b.row("properties", "degree matrices agree iff 1-WL equivalent, " + std::to_string(pair_total) + " pairs n<=6",
        "property", "0 failures", std::to_string(dm_bad) + " failures");
  b.row("properties", "3-WL refines 2-WL refines 1-WL, " + std::to_string(pair_total) + " pairs n<=6", "property",
        "0 failures", std::to_string(hier_bad) + " failures");
  b.row("properties", "k-WL invariant under relabeling, k=1..3, n<=6", "property", "0 failures",
        std::to_string(iso_bad) + " failures");

  std::size_t cover_bad = 0;
  const char* trees[] = {"P(4)", "P(5)", "P(6)", "P(7)"};
  for (const char* t : trees) {
    auto cw = covering_witness(named(t));
    if (!is_covering_map(cw.g, cw.t_prime, cw.projection)) ++cover_bad;
    const Graph* gs[] = {&cw.g, &cw.t_prime};
    auto jc = joint_refine(gs, 1);
    std::vector<std::size_t> cg(jc.palette, 0);
    std::vector<std::size_t> ct(jc.palette, 0);
    for (Color c : jc.colors[0]) ++cg[c];
    for (Color c : jc.colors[1]) ct[c] += 2;
    if (cg != ct) ++cover_bad;
  }
  b.row("properties", "covering map doubles 1-WL color multiplicities", "property", "0 failures",
        std::to_string(cover_bad) + " failures");
}

struct Group {
  const char* name;
  void (*run)(Builder&);
};

constexpr Group kGroups[] = {
    {"table1", group_table1},         {"matching", group_matching},   {"paths", group_paths},
    {"equivalence", group_equivalence}, {"girth", group_girth},     {"classify", group_classify},
    {"witnesses", group_witnesses},   {"amenability", group_amenability}, {"forbidden", group_forbidden},
    {"reduction", group_reduction},   {"properties", group_properties},
};

bool extend_path(const Graph& g, std::vector<bool>& used, Vertex end, std::size_t length, std::size_t target) {
  if (length >= target) return true;
  // Bound: vertices reachable through unused vertices, of which at most one
  // dead end (at most one neighbor in reach) can be used.
  std::vector<Vertex> reach;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{end};
  seen[end] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!used[w] && !seen[w]) {
        seen[w] = true;
        reach.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::size_t dead = 0;
  for (Vertex x : reach) {
    std::size_t deg = 0;
    for (Vertex w : g.neighbors(x)) deg += seen[w] ? 1 : 0;
    if (deg <= 1) ++dead;
  }
  const std::size_t bound = length + reach.size() - (dead > 1 ? dead - 1 : 0);
  if (bound < target) return false;
  for (Vertex w : g.neighbors(end)) {
    if (used[w]) continue;
    used[w] = true;
    const bool ok = extend_path(g, used, w, length + 1, target);
    used[w] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

Json VerifyReport::to_json() const {
  Json j;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["id"] = r.id;
    x["group"] = r.group;
    x["source"] = r.source;
    x["expected"] = r.expected;
    x["measured"] = r.measured;
    x["pass"] = r.pass;
    arr.push_back(std::move(x));
  }
  j["rows"] = std::move(arr);
  j["total"] = std::to_string(rows.size());
  j["failed"] = std::to_string(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
  j["pass"] = pass();
  return j;
}

std::string VerifyReport::to_table() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.group << ' ' << r.id << "  expected="
        << r.expected << "  measured=" << r.measured << '\n';
    failed += r.pass ? 0 : 1;
  }
  out << rows.size() - failed << '/' << rows.size() << " rows pass\n";
  return out.str();
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& g : kGroups) v.emplace_back(g.name);
    return v;
  }();
  return names;
}

VerifyReport verify_all(const VerifyOptions& opts) {
  if (opts.only) {
    const auto& names = verify_groups();
    if (std::find(names.begin(), names.end(), *opts.only) == names.end()) {
      throw GraphError("unknown verify group '" + *opts.only + "'");
    }
  }
  const std::size_t saved_cap = enumeration_cap();
  set_enumeration_cap(std::max(opts.enum_cap, saved_cap));
  VerifyReport report;
  Builder builder(opts, report);
  try {
    for (const auto& g : kGroups) {
      if (!opts.only || *opts.only == g.name) g.run(builder);
    }
  } catch (...) {
    set_enumeration_cap(saved_cap);
    throw;
  }
  set_enumeration_cap(saved_cap);
  return report;
}

bool is_hamiltonian_bruteforce(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return false;
  if (n == 2) return g.adjacent(0, 1);
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  do {
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool has_path_on(const Graph& g, std::size_t vertices) {
  if (vertices == 0) return true;
  if (vertices > g.order()) return false;
  std::vector<bool> used(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    used[s] = true;
    const bool ok = extend_path(g, used, s, 1, vertices);
    used[s] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace wlpat
