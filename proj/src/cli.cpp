#include "divgraph/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "divgraph/analysis.hpp"
#include "divgraph/catalog.hpp"
#include "divgraph/certificate.hpp"
#include "divgraph/division_graph.hpp"
#include "divgraph/divisions.hpp"
#include "divgraph/error.hpp"
#include "divgraph/lattice.hpp"

namespace divgraph {

Limits RunConfig::limits() const {
  Limits l;
  l.order_cap = order_cap;
  l.lattice_order_cap = lattice_cap;
  l.search_budget = search_budget;
  return l;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "validate", "subgroups",       "divisions",    "division-graph",  "analyze",
      "compare",  "verify-lagarias", "an-divisions", "conjecture-scan"};
  return names;
}

Group group_from_json(const nlohmann::json& j, const Limits& limits) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "group must be a JSON object");
  const std::string name = j.value("name", std::string{});
  try {
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<long long>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
        throw Error(ErrorCode::ParseError, "order " + j.at("order").dump() +
                                               " does not match " +
                                               std::to_string(table.size()) + " table rows");
      }
      std::vector<std::string> names;
      if (j.contains("elements")) names = j.at("elements").get<std::vector<std::string>>();
      return validate_cayley_table(table, limits, name, std::move(names));
    }
    if (j.contains("generators")) {
      const auto degree = j.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (const auto& images : j.at("generators").get<std::vector<std::vector<int>>>()) {
        if (images.size() != degree) {
          throw Error(ErrorCode::DegreeMismatch, "generator with " +
                                                     std::to_string(images.size()) +
                                                     " images in degree " + std::to_string(degree));
        }
        gens.push_back(Permutation::from_one_based(images));
      }
      return from_permutation_generators(gens, degree, limits, name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "group needs either \"table\" or \"generators\"");
}

Group group_from_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return group_from_json(j, limits);
}

namespace {

std::vector<Group> load_groups(const RunConfig& c) {
  std::vector<Group> groups;
  for (const auto& path : c.inputs) groups.push_back(group_from_file(path, c.limits()));
  for (const auto& d : c.catalogs) groups.push_back(catalog::from_descriptor(d, c.limits()));
  return groups;
}

Group single_group(const RunConfig& c) {
  auto groups = load_groups(c);
  if (groups.size() != 1) {
    throw Error(ErrorCode::ParseError, "command '" + c.command + "' takes exactly one group, got " +
                                           std::to_string(groups.size()));
  }
  return std::move(groups.front());
}

void require_format(const RunConfig& c, bool dot_allowed) {
  if (c.format == "json" || (dot_allowed && c.format == "dot")) return;
  throw Error(ErrorCode::ParseError, "format '" + c.format + "' is not available for " + c.command);
}

std::string type_key(const CycleType& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

// The artifact plus the status it implies.
struct Outcome {
  std::string text;
  ExitStatus status = ExitStatus::Ok;
};

Outcome cmd_validate(const RunConfig& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : load_groups(c))
    arr.push_back({{"name", g.name()}, {"order", g.order()}, {"valid", true}});
  return {arr.dump(2) + "\n"};
}

Outcome cmd_subgroups(const RunConfig& c) {
  require_format(c, true);
  auto g = single_group(c);
  auto lattice = all_subgroups(g, c.limits());
  if (c.format == "dot") return {lattice_to_dot(g, lattice)};
  return {lattice_to_json(g, lattice).dump(2) + "\n"};
}

Outcome cmd_divisions(const RunConfig& c) {
  require_format(c, false);
  auto g = single_group(c);
  return {divisions_to_json(g, divisions(g)).dump(2) + "\n"};
}

Outcome cmd_division_graph(const RunConfig& c) {
  require_format(c, true);
  auto g = single_group(c);
  auto lattice = all_subgroups(g, c.limits());
  auto dg = division_graph(g, lattice);
  for (const auto& comp : dg.components) {
    auto problem = check_component(lattice, comp);
    if (!problem.empty()) {
      throw Error(ErrorCode::MalformedGraph,
                  "component [" + g.element_name(comp.division_rep) + "]: " + problem);
    }
  }
  if (c.division) {
    auto e = g.find_element(*c.division);
    if (!e) throw Error(ErrorCode::ParseError, "no element named '" + *c.division + "'");
    DivisionGraph one;
    one.group_name = dg.group_name;
    for (std::size_t i = 0; i < dg.divisions.size(); ++i) {
      if (dg.divisions[i].contains(*e)) {
        one.divisions.push_back(dg.divisions[i]);
        one.components.push_back(dg.components[i]);
      }
    }
    dg = std::move(one);
  }
  if (c.format == "dot") return {division_graph_to_dot(g, dg)};
  return {division_graph_to_json(g, dg).dump(2) + "\n"};
}

Outcome cmd_analyze(const RunConfig& c) {
  require_format(c, false);
  auto report = analyze(single_group(c), c.limits());
  Outcome o{report_to_json(report).dump(2) + "\n"};
  if (!report.all_agree()) o.status = ExitStatus::InternalViolation;
  return o;
}

Outcome cmd_compare(const RunConfig& c) {
  require_format(c, false);
  auto groups = load_groups(c);
  if (groups.size() != 2) {
    throw Error(ErrorCode::ParseError,
                "compare takes exactly two groups, got " + std::to_string(groups.size()));
  }
  const auto limits = c.limits();
  nlohmann::json j{{"first", groups[0].name()}, {"second", groups[1].name()}};
  try {
    auto ca = certificate(division_graph(groups[0], limits), limits.search_budget);
    auto cb = certificate(division_graph(groups[1], limits), limits.search_budget);
    j["result"] = ca == cb ? "same" : "different";
    j["certificates"] = {ca.hex(), cb.hex()};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CanonicalizationBudgetExceeded) throw;
    j["result"] = "inconclusive";
    j["reason"] = e.what();
    return {j.dump(2) + "\n", ExitStatus::CapacityExhausted};
  }
  return {j.dump(2) + "\n"};
}

Outcome cmd_verify_lagarias(const RunConfig& c, std::ostream& err) {
  require_format(c, false);
  auto groups = load_groups(c);
  if (groups.empty()) throw Error(ErrorCode::ParseError, "verify-lagarias needs a group");
  nlohmann::json arr = nlohmann::json::array();
  Outcome o;
  for (const auto& g : groups) {
    auto report = verify_lagarias(g, all_subgroups(g, c.limits()));
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : report.violations) {
      v.push_back({{"first", g.element_name(x.first)},
                   {"second", g.element_name(x.second)},
                   {"same_division", x.same_division}});
      err << "LAGARIAS COUNTEREXAMPLE in " << g.name() << ": " << g.element_name(x.first)
          << " and " << g.element_name(x.second)
          << (x.same_division ? " share a division but split differently\n"
                              : " split alike across different divisions\n");
    }
    if (!report.ok()) o.status = ExitStatus::InternalViolation;
    arr.push_back({{"group", g.name()},
                   {"pairs_checked", report.pairs_checked},
                   {"subgroups_checked", report.subgroups_checked},
                   {"ok", report.ok()},
                   {"violations", v}});
  }
  o.text = arr.dump(2) + "\n";
  return o;
}

Outcome cmd_an_divisions(const RunConfig& c) {
  require_format(c, false);
  std::size_t n = c.degree;
  if (n == 0 && c.catalogs.size() == 1 && c.catalogs[0].rfind("alternating:", 0) == 0)
    n = std::stoul(c.catalogs[0].substr(12));
  if (n == 0) throw Error(ErrorCode::ParseError, "an-divisions needs --degree n");

  auto by_type = alternating_divisions_by_type(n);
  nlohmann::json types = nlohmann::json::array();
  for (const auto& [type, count] : by_type) {
    bool splits = class_splits_in_alternating(type);
    types.push_back({{"type", type},
                     {"splits", splits},
                     {"inverse_closed",
                      splits ? nlohmann::json(split_class_inverse_closed(type)) : nlohmann::json()},
                     {"divisions", count}});
  }
  nlohmann::json j{{"degree", n}, {"types", types}, {"ambivalent", ambivalent_alternating(n)}};

  // Within the order cap the table-based count is reported alongside.
  std::uint64_t order = 1;
  for (std::size_t k = 3; k <= n && order <= c.order_cap; ++k) order *= k;
  if (n >= 2 && order <= c.order_cap) {
    auto g = catalog::alternating(n, c.limits());
    std::map<std::string, int> brute;
    for (const auto& d : divisions(g)) {
      const auto& p = g.permutation(d.representative);
      auto full = p.cycle_type();
      ++brute[type_key(full)];
    }
    bool agree = brute.size() == by_type.size();
    for (const auto& [type, count] : by_type) agree = agree && brute[type_key(type)] == count;
    j["table_check"] = {{"order", g.order()}, {"agrees", agree}};
    if (!agree) return {j.dump(2) + "\n", ExitStatus::InternalViolation};
  }
  return {j.dump(2) + "\n"};
}

Outcome cmd_conjecture_scan(const RunConfig& c) {
  require_format(c, false);
  auto descriptors = c.catalogs.empty() ? catalog::listing(c.max_order) : c.catalogs;
  auto report = conjecture_scan(descriptors, c.limits());
  Outcome o{scan_to_json(report).dump(2) + "\n"};
  if (!report.invariance_failures.empty()) o.status = ExitStatus::InternalViolation;
  return o;
}

Outcome dispatch(const RunConfig& c, std::ostream& err) {
  if (c.command == "validate") return cmd_validate(c);
  if (c.command == "subgroups") return cmd_subgroups(c);
  if (c.command == "divisions") return cmd_divisions(c);
  if (c.command == "division-graph") return cmd_division_graph(c);
  if (c.command == "analyze") return cmd_analyze(c);
  if (c.command == "compare") return cmd_compare(c);
  if (c.command == "verify-lagarias") return cmd_verify_lagarias(c, err);
  if (c.command == "an-divisions") return cmd_an_divisions(c);
  if (c.command == "conjecture-scan") return cmd_conjecture_scan(c);
  throw Error(ErrorCode::ParseError, "unknown command '" + c.command + "'");
}

ExitStatus status_of(const Error& e) {
  switch (category(e.code())) {
    case ErrorCategory::Validation: return ExitStatus::ValidationFailure;
    case ErrorCategory::Capacity: return ExitStatus::CapacityExhausted;
    case ErrorCategory::Internal: return ExitStatus::InternalViolation;
  }
  return ExitStatus::InternalViolation;
}

}  // namespace

ExitStatus run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.order_cap == 0 || config.lattice_cap == 0 || config.search_budget == 0) {
    err << "error: caps must be positive\n";
    return ExitStatus::ValidationFailure;
  }
  Outcome outcome;
  try {
    outcome = dispatch(config, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return status_of(e);
  }
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      err << "error: cannot write " << *config.out << "\n";
      return ExitStatus::ValidationFailure;
    }
    file << outcome.text;
  } else {
    out << outcome.text;
  }
  return outcome.status;
}

}  // namespace divgraph
