#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "divgraph/cli.hpp"

namespace {

const std::map<std::string, std::string> kSummaries = {
    {"validate", "check that the input is a group"},
    {"subgroups", "subgroup lattice with relative-index labels"},
    {"divisions", "conjugacy classes fused into divisions"},
    {"division-graph", "the division graph, one component per division"},
    {"analyze", "properties read from the division graph, with direct checks"},
    {"compare", "canonical certificates of two division graphs"},
    {"verify-lagarias", "brute-force Lagarias equivalence check"},
    {"an-divisions", "divisions of the alternating group by cycle type"},
    {"conjecture-scan", "certificate collisions among non-isomorphic groups"},
};

}  // namespace

int main(int argc, char** argv) {
  divgraph::RunConfig config;
  CLI::App app{"Division graphs of finite groups"};
  app.require_subcommand(1, 1);

  for (const auto& name : divgraph::command_names()) {
    auto* sub = app.add_subcommand(name, kSummaries.count(name) ? kSummaries.at(name) : "");
    sub->add_option("inputs", config.inputs, "JSON group files");
    sub->add_option("--input,-i", config.inputs, "JSON group file");
    sub->add_option("--catalog,-c", config.catalogs, "catalog descriptor, e.g. symmetric:4");
    sub->add_option("--format,-f", config.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--order-cap", config.order_cap)->check(CLI::PositiveNumber);
    sub->add_option("--lattice-cap", config.lattice_cap)->check(CLI::PositiveNumber);
    sub->add_option("--budget", config.search_budget, "canonical search node budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--division", config.division, "keep the component of this element");
    sub->add_option("--out,-o", config.out, "output file");
    if (name == "an-divisions") sub->add_option("--degree,-n", config.degree);
    if (name == "conjecture-scan") sub->add_option("--max-order", config.max_order);
    sub->callback([&config, sub] { config.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(divgraph::ExitStatus::ValidationFailure);
  }
  return static_cast<int>(divgraph::run(config, std::cout, std::cerr));
}
