#ifndef DIVGRAPH_CLI_HPP
#define DIVGRAPH_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "divgraph/group.hpp"

namespace divgraph {

enum class ExitStatus : int {
  Ok = 0,
  ValidationFailure = 1,
  CapacityExhausted = 2,
  InternalViolation = 3,
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;    // JSON group files
  std::vector<std::string> catalogs;  // catalog descriptors
  std::string format = "json";        // json | dot
  std::size_t order_cap = Limits{}.order_cap;
  std::size_t lattice_cap = Limits{}.lattice_order_cap;
  std::size_t search_budget = Limits{}.search_budget;
  std::optional<std::string> division;  // element name
  std::optional<std::string> out;       // file; standard output if empty
  std::size_t degree = 0;               // an-divisions
  std::size_t max_order = 15;           // conjecture-scan without descriptors

  Limits limits() const;
};

const std::vector<std::string>& command_names();

/// Parses the JSON group format: {"name", "order", "table"} with 0-based
/// entries, or {"name", "degree", "generators"} with 1-based image lists.
Group group_from_json(const nlohmann::json& j, const Limits& limits = {});
Group group_from_file(const std::string& path, const Limits& limits = {});

/// Executes one command. The artifact goes to `out` (or the configured
/// file), diagnostics to `err`.
ExitStatus run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace divgraph

#endif  // DIVGRAPH_CLI_HPP
