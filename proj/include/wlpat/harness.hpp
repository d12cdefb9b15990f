#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wlpat/counting.hpp"
#include "wlpat/enumerate.hpp"
#include "wlpat/serialize.hpp"

namespace wlpat {

struct ReportRow {
  std::string id;
  std::string group;
  std::string source;  // "reference" (published value), "derived" or "property"
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct VerifyReport {
  std::vector<ReportRow> rows;
  bool pass() const;
  Json to_json() const;
  std::string to_table() const;
};

using SubCounter = std::function<BigInt(const Graph& pattern, const Graph& host)>;

struct VerifyOptions {
  std::optional<std::string> only;  // group name
  std::size_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // 0: default or WLP_BUDGET
  SubCounter counter;         // replaces count_sub in the numeric groups when set
};

const std::vector<std::string>& verify_groups();
// Throws GraphError for an unknown group.
VerifyReport verify_all(const VerifyOptions& opts = {});

// Brute-force helpers shared with the CLI. Hamiltonicity follows the closed
// walk convention: K1 is not Hamiltonian, K2 is.
bool is_hamiltonian_bruteforce(const Graph& g);
bool has_path_on(const Graph& g, std::size_t vertices);

}  // namespace wlpat
