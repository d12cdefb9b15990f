#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wlpat/classify.hpp"
#include "wlpat/counting.hpp"
#include "wlpat/harness.hpp"
#include "wlpat/io.hpp"
#include "wlpat/patterns.hpp"
#include "wlpat/refinement.hpp"
#include "wlpat/serialize.hpp"
#include "wlpat/witnesses.hpp"

using namespace wlpat;

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// "-" reads graph6 from stdin, "@path" reads the text format from a file,
// anything else is graph6 or, failing that, a pattern name.
Graph read_graph(const std::string& arg) {
  if (arg == "-") return from_graph6(trim(slurp(std::cin)));
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw GraphError("cannot open '" + arg.substr(1) + "'");
    return from_text(slurp(f));
  }
  try {
    return from_graph6(arg);
  } catch (const GraphError& g6_error) {
    try {
      return generate(PatternName::parse(arg));
    } catch (const GraphError&) {
      throw GraphError(std::string("not graph6 or a pattern name: ") + g6_error.what());
    }
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& args) {
  std::vector<std::size_t> out;
  for (const auto& a : args) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(a, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != a.size() || a.empty()) throw GraphError("expected a non-negative integer, got '" + a + "'");
    out.push_back(v);
  }
  return out;
}

WitnessPair make_witness(const std::string& name, const std::vector<std::string>& params, std::uint64_t seed,
                         const CountOptions& opts) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw GraphError("witness '" + name + "' takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "basic_star_forest") {
    if (params.empty()) throw GraphError("witness 'basic_star_forest' takes arm lengths");
    return basic_star_forest_witness(parse_sizes(params));
  }
  if (name == "matching") {
    need(1);
    return matching_witness(parse_sizes(params)[0], opts);
  }
  if (name == "long_cycle") {
    need(1);
    return long_cycle_witness(parse_sizes(params)[0]);
  }
  if (name == "long_path") {
    need(1);
    return long_path_witness(parse_sizes(params)[0]);
  }
  need(1);
  const Graph f = read_graph(params[0]);
  if (name == "table1") return table1_witness(f);
  if (name == "star_forest") return star_forest_witness(f);
  if (name == "covering") return covering_witness(f).pair();
  if (name == "forest") return forest_witness(f);
  if (name == "no_cycle") return no_cycle_witness(f, seed);
  if (name == "unique_4clique") return unique_4clique_witness(f);
  if (name == "r1") return r1_refutation(f, seed);
  if (name == "c1") return c1_refutation(f, seed);
  throw GraphError("unknown witness '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman refinement, pattern counting and witness construction"};
  app.require_subcommand(1);

  std::string a;
  std::string b;
  int k = 1;
  bool json = false;

  auto* gen_cmd = app.add_subcommand("gen", "Generate a pattern graph");
  bool as_edges = false;
  gen_cmd->add_option("pattern", a, "Pattern name, e.g. 'P(3)+2*P(2)' or rook4")->required();
  gen_cmd->add_flag("--g6", "Print graph6 (default)");
  gen_cmd->add_flag("--edges", as_edges, "Print the text edge-list format");

  auto* refine_cmd = app.add_subcommand("refine", "Stable k-WL coloring");
  refine_cmd->add_option("graph", a, "Graph (graph6, -, @file)")->required();
  refine_cmd->add_option("-k", k, "Dimension")->check(CLI::Range(1, 3));

  auto* equiv_cmd = app.add_subcommand("equiv", "k-WL equivalence of two graphs");
  equiv_cmd->add_option("first", a, "First graph")->required();
  equiv_cmd->add_option("second", b, "Second graph")->required();
  equiv_cmd->add_option("-k", k, "Dimension")->check(CLI::Range(1, 3));

  auto* count_cmd = app.add_subcommand("count", "Count subgraphs or homomorphisms");
  bool hom = false;
  std::uint64_t count_budget = 0;
  count_cmd->add_option("pattern", a, "Pattern (graph6 or pattern name)")->required();
  count_cmd->add_option("host", b, "Host graph")->required();
  count_cmd->add_flag("--hom", hom, "Count homomorphisms instead of subgraphs");
  count_cmd->add_option("--budget", count_budget, "Search-node budget");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a pattern");
  classify_cmd->add_option("pattern", a, "Pattern (graph6 or pattern name)")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Construct and verify a witness pair");
  std::vector<std::string> params;
  std::uint64_t witness_seed = 1;
  witness_cmd->add_option("name", a,
                          "table1, basic_star_forest, star_forest, covering, forest, no_cycle, matching, "
                          "long_cycle, long_path, unique_4clique, r1, c1")
      ->required();
  witness_cmd->add_option("params", params, "Witness parameters");
  witness_cmd->add_option("--seed", witness_seed, "Seed for randomized constructions");

  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction harness");
  VerifyOptions vopts;
  std::string only;
  verify_cmd->add_option("--only", only, "Run one group")->check(CLI::IsMember(verify_groups()));
  verify_cmd->add_option("--enum-cap", vopts.enum_cap, "Largest order for exhaustive enumeration")
      ->check(CLI::Range(1, 10));
  verify_cmd->add_option("--seed", vopts.seed, "Seed for random property checks");
  verify_cmd->add_option("--budget", vopts.budget, "Search-node budget");
  verify_cmd->add_flag("--json", json, "Print JSON instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      const Graph g = generate(PatternName::parse(a));
      std::cout << (as_edges ? to_text(g) : to_graph6(g) + "\n");
    } else if (*refine_cmd) {
      const Graph g = read_graph(a);
      if (k == 1) {
        print(to_json(refine_1wl(g)));
      } else if (k == 2) {
        print(to_json(refine_2wl(g)));
      } else {
        print(to_json(refine_3wl(g)));
      }
    } else if (*equiv_cmd) {
      Json j;
      j["k"] = k;
      j["equivalent"] = equiv_kwl(read_graph(a), read_graph(b), k);
      print(j);
    } else if (*count_cmd) {
      const Graph f = read_graph(a);
      const Graph g = read_graph(b);
      CountOptions opts;
      opts.budget = count_budget;
      const CountResult r = hom ? count_hom(f, g, opts) : count_sub(f, g, opts);
      Json j;
      j["pattern"] = to_graph6(f);
      j["host"] = g.order() <= 62 ? Json(to_graph6(g)) : Json(to_text(g));
      j["kind"] = hom ? "hom" : "sub";
      j["value"] = decimal(r.value);
      j["method"] = to_string(r.method);
      print(j);
    } else if (*classify_cmd) {
      print(to_json(classify(read_graph(a))));
    } else if (*witness_cmd) {
      CountOptions opts;
      const WitnessPair w = make_witness(a, params, witness_seed, opts);
      const WitnessReport r = verify(w, opts);
      Json j = to_json(w);
      j["report"] = to_json(r);
      print(j);
      return r.pass ? 0 : 1;
    } else if (*verify_cmd) {
      if (!only.empty()) vopts.only = only;
      const VerifyReport report = verify_all(vopts);
      if (json) {
        print(report.to_json());
      } else {
        std::cout << report.to_table();
      }
      return report.pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
