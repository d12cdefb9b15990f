#include "wlpat/patterns.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <map>

namespace wlpat {
namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int min_params;
  int max_params;  // -1: unbounded
};

constexpr std::array<FamilyInfo, 22> kFamilies{{
    {Family::empty, "empty", 1, 1},
    {Family::complete, "complete", 1, 1},
    {Family::path, "path", 1, 1},
    {Family::cycle, "cycle", 1, 1},
    {Family::star, "star", 1, 1},
    {Family::matching, "matching", 1, 1},
    {Family::complete_bipartite, "complete_bipartite", 2, 2},
    {Family::star_forest, "star_forest", 1, -1},
    {Family::windmill, "windmill", 1, 1},
    {Family::complete_split, "complete_split", 1, 1},
    {Family::rook4, "rook4", 0, 0},
    {Family::shrikhande, "shrikhande", 0, 0},
    {Family::wagner, "wagner", 0, 0},
    {Family::net, "net", 0, 0},
    {Family::petersen, "petersen", 0, 0},
    {Family::heawood, "heawood", 0, 0},
    {Family::mcgee, "mcgee", 0, 0},
    {Family::tutte_coxeter, "tutte_coxeter", 0, 0},
    {Family::robertson, "robertson", 0, 0},
    {Family::union_of, "union", 0, 0},
    {Family::join_of, "join", 0, 0},
    {Family::copies, "copies", 1, 1},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw GraphError("unknown family");
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PatternName parse() {
    auto p = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw GraphError("pattern parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  PatternName sum() {
    std::vector<PatternName> terms{term()};
    while (eat('+')) terms.push_back(term());
    if (terms.size() == 1) return terms.front();
    return {Family::union_of, {}, std::move(terms)};
  }

  PatternName term() {
    if (at_digit()) {
      int k = integer();
      if (!eat('*')) fail("expected '*' after multiplicity");
      return {Family::copies, {k}, {atom()}};
    }
    return atom();
  }

  PatternName atom() {
    if (eat('(')) {
      auto p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a family name");

    std::vector<int> ints;
    std::vector<PatternName> kids;
    if (eat('(')) {
      do {
        if (at_digit() && !looks_like_multiple()) {
          ints.push_back(integer());
        } else {
          kids.push_back(sum());
        }
      } while (eat(','));
      if (!eat(')')) fail("expected ')'");
    }

    static const std::map<std::string, Family> aliases{{"K", Family::complete}, {"P", Family::path},
                                                       {"C", Family::cycle}};
    if (auto it = aliases.find(name); it != aliases.end()) {
      Family f = it->second;
      if (f == Family::complete && ints.size() == 2) f = Family::complete_bipartite;
      return build(f, std::move(ints), std::move(kids));
    }
    for (const auto& i : kFamilies) {
      if (name == i.name) return build(i.family, std::move(ints), std::move(kids));
    }
    fail("unknown family '" + name + "'");
  }

  bool looks_like_multiple() {
    std::size_t save = pos_;
    integer();
    bool star = eat('*');
    pos_ = save;
    return star;
  }

  PatternName build(Family f, std::vector<int> ints, std::vector<PatternName> kids) {
    if (f == Family::union_of || f == Family::join_of) {
      if (!ints.empty() || kids.empty()) fail(std::string(info(f).name) + " takes graph arguments");
    } else if (f == Family::copies) {
      if (ints.size() != 1 || kids.size() != 1) fail("copies takes (count, graph)");
    } else if (!kids.empty()) {
      fail(std::string(info(f).name) + " takes integer arguments");
    }
    return {f, std::move(ints), std::move(kids)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::size_t positive(const PatternName& p, std::size_t i) {
  int v = p.params.at(i);
  if (v <= 0) {
    throw GraphError(std::string(info(p.family).name) + " requires positive parameters, got " + std::to_string(v));
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

PatternName PatternName::parse(std::string_view text) { return Parser(text).parse(); }

std::string PatternName::to_string() const {
  const auto& fi = info(family);
  std::string out = fi.name;
  if (family == Family::union_of) {
    out.clear();
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += "+";
      out += children[i].to_string();
    }
    return out;
  }
  if (family == Family::copies) return std::to_string(params.at(0)) + "*(" + children.at(0).to_string() + ")";
  if (params.empty() && children.empty()) return out;
  out += "(";
  bool first = true;
  for (int p : params) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  for (const auto& c : children) {
    if (!first) out += ",";
    out += c.to_string();
    first = false;
  }
  return out + ")";
}

Graph generate(const PatternName& p) {
  const auto& fi = info(p.family);
  const auto np = static_cast<int>(p.params.size());
  if (np < fi.min_params || (fi.max_params >= 0 && np > fi.max_params)) {
    throw GraphError(std::string(fi.name) + ": wrong number of parameters");
  }
  switch (p.family) {
    case Family::empty: return gen::empty(positive(p, 0));
    case Family::complete: return gen::complete(positive(p, 0));
    case Family::path: return gen::path(positive(p, 0));
    case Family::cycle:
      if (positive(p, 0) < 3) throw GraphError("cycle requires at least 3 vertices");
      return gen::cycle(positive(p, 0));
    case Family::star: return gen::star(positive(p, 0));
    case Family::matching: return gen::matching(positive(p, 0));
    case Family::complete_bipartite: return gen::complete_bipartite(positive(p, 0), positive(p, 1));
    case Family::star_forest: {
      std::vector<std::size_t> arms;
      for (std::size_t i = 0; i < p.params.size(); ++i) arms.push_back(positive(p, i));
      return gen::star_forest(arms);
    }
    case Family::windmill: return gen::windmill(positive(p, 0));
    case Family::complete_split: return gen::complete_split(positive(p, 0));
    case Family::rook4: return gen::rook4();
    case Family::shrikhande: return gen::shrikhande();
    case Family::wagner: return gen::wagner();
    case Family::net: return gen::net();
    case Family::petersen: return gen::petersen();
    case Family::heawood: return gen::heawood();
    case Family::mcgee: return gen::mcgee();
    case Family::tutte_coxeter: return gen::tutte_coxeter();
    case Family::robertson: return gen::robertson();
    case Family::union_of: {
      std::vector<Graph> parts;
      for (const auto& c : p.children) parts.push_back(generate(c));
      return disjoint_union(parts);
    }
    case Family::join_of: {
      Graph g = generate(p.children.at(0));
      for (std::size_t i = 1; i < p.children.size(); ++i) g = join(g, generate(p.children[i]));
      return g;
    }
    case Family::copies: return repeat(generate(p.children.at(0)), positive(p, 0));
  }
  throw GraphError("unknown family");
}

namespace gen {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle requires at least 3 vertices");
  Graph g = path(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph star(std::size_t s) {
  Graph g(s + 1);
  for (Vertex v = 1; v <= s; ++v) g.add_edge(0, v);
  return g;
}

Graph matching(std::size_t s) {
  Graph g(2 * s);
  for (Vertex i = 0; i < s; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph complete_bipartite(std::size_t s, std::size_t t) {
  Graph g(s + t);
  for (Vertex u = 0; u < s; ++u) {
    for (Vertex v = 0; v < t; ++v) g.add_edge(u, static_cast<Vertex>(s + v));
  }
  return g;
}

Graph star_forest(std::span<const std::size_t> arms) {
  std::vector<Graph> parts;
  for (auto a : arms) parts.push_back(star(a));
  return disjoint_union(parts);
}

Graph windmill(std::size_t s) { return join(complete(1), matching(s)); }

Graph complete_split(std::size_t s) { return join(complete(2), empty(s)); }

Graph rook4() {
  Graph g(16);
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(u, v);
    }
  }
  return g;
}

Graph shrikhande() {
  constexpr std::array<std::pair<int, int>, 6> kConnection{{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}};
  Graph g(16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (auto [da, db] : kConnection) {
        g.add_edge(static_cast<Vertex>(4 * a + b), static_cast<Vertex>(4 * ((a + da) % 4) + (b + db) % 4));
      }
    }
  }
  return g;
}

Graph wagner() {
  Graph g = cycle(8);
  for (Vertex i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

Graph net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph lcf(std::size_t n, std::span<const int> shifts) {
  Graph g = cycle(n);
  const auto sn = static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    long j = (static_cast<long>(i) + shifts[i % shifts.size()]) % sn;
    if (j < 0) j += sn;
    if (static_cast<std::size_t>(j) != i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return g;
}

Graph heawood() {
  constexpr int kShifts[] = {5, -5};
  return lcf(14, kShifts);
}

Graph mcgee() {
  constexpr int kShifts[] = {12, 7, -7};
  return lcf(24, kShifts);
}

Graph tutte_coxeter() {
  constexpr int kShifts[] = {-13, -9, 7, -7, 9, 13};
  return lcf(30, kShifts);
}

Graph robertson() {
  constexpr int kShifts[] = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
  return lcf(19, kShifts);
}

}  // namespace gen
}  // namespace wlpat
