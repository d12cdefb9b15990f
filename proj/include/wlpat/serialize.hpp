#pragma once

#include <json.hpp>

#include "wlpat/classify.hpp"
#include "wlpat/counting.hpp"
#include "wlpat/refinement.hpp"
#include "wlpat/witnesses.hpp"

namespace wlpat {

// Quantities (counts, sizes, round numbers) are decimal strings; vertex ids
// and color ids are plain integers.
using Json = nlohmann::ordered_json;

std::string decimal(const BigInt& x);
Json graph_json(const Graph& g);  // graph6 when possible, else the text format
Json to_json(const StablePartition& p);
Json to_json(const PairColoring& c);
Json to_json(const TripleColoring& c);
Json to_json(const Classification& c);
Json to_json(const WitnessPair& w);
Json to_json(const WitnessReport& r);

}  // namespace wlpat
