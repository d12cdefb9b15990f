#include "wlpat/serialize.hpp"

#include "wlpat/io.hpp"

namespace wlpat {
namespace {

template <typename Coloring>
Json coloring_json(const Coloring& c) {
  Json j;
  j["n"] = std::to_string(c.n);
  j["round_count"] = std::to_string(c.round_count);
  j["class_count"] = std::to_string(c.class_count);
  j["color"] = c.color;
  return j;
}

}  // namespace

std::string decimal(const BigInt& x) { return x.str(); }

Json graph_json(const Graph& g) {
  Json j;
  if (g.order() <= 62) {
    j["g6"] = to_graph6(g);
  } else {
    j["text"] = to_text(g.uncolored());
  }
  if (g.colored()) j["colors"] = g.colors();
  return j;
}

Json to_json(const StablePartition& p) {
  Json j;
  j["cells"] = p.cells;
  j["cell_color"] = p.cell_color;
  Json matrix = Json::array();
  for (const auto& row : p.degree_matrix) {
    Json r = Json::array();
    for (auto x : row) r.push_back(std::to_string(x));
    matrix.push_back(std::move(r));
  }
  j["degree_matrix"] = std::move(matrix);
  j["rounds"] = std::to_string(p.rounds);
  return j;
}

Json to_json(const PairColoring& c) {
  Json j = coloring_json(c);
  Json rows = Json::array();
  for (std::size_t u = 0; u < c.n; ++u) {
    rows.push_back(std::vector<Color>(c.color.begin() + static_cast<std::ptrdiff_t>(u * c.n),
                                      c.color.begin() + static_cast<std::ptrdiff_t>((u + 1) * c.n)));
  }
  j["color"] = std::move(rows);
  return j;
}

Json to_json(const TripleColoring& c) { return coloring_json(c); }

Json to_json(const Classification& c) {
  Json j;
  j["in_C1"] = c.in_C1;
  j["in_R1"] = c.in_R1;
  j["tw_le_2"] = c.tw_le_2;
  j["htw_le_1"] = c.htw_le_1;
  j["htw_le_2"] = c.htw_le_2;
  j["evidence"] = c.evidence ? Json(c.evidence->blocks()) : Json(nullptr);
  return j;
}

Json to_json(const WitnessPair& w) {
  Json j;
  j["name"] = w.name;
  auto put = [&](const char* key, const Graph& g) {
    Json gj = graph_json(g);
    for (auto& [k, v] : gj.items()) j[std::string(k) + "_" + key] = v;
  };
  put("G", w.g);
  put("H", w.h);
  j["pattern_g6"] = to_graph6(w.pattern);
  j["level"] = w.level;
  j["claim"] = to_string(w.claim);
  if (w.expected_g) j["expected_G"] = decimal(*w.expected_g);
  if (w.expected_h) j["expected_H"] = decimal(*w.expected_h);
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["equivalent"] = r.equivalent;
  if (r.uncolored_equivalent) j["uncolored_equivalent"] = *r.uncolored_equivalent;
  j["claim_holds"] = r.claim_holds;
  j["measured_G"] = decimal(r.measured_g);
  j["measured_H"] = decimal(r.measured_h);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace wlpat
