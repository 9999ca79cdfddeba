#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <tuple>

#include "divgraph/catalog.hpp"
#include "divgraph/cli.hpp"

namespace py = pybind11;

namespace {

std::tuple<int, std::string, std::string> run_command(
    const std::string& command, const std::vector<std::string>& catalogs,
    const std::vector<std::string>& inputs, const std::string& format, std::size_t degree,
    std::size_t max_order, std::optional<std::string> division, std::size_t search_budget) {
  divgraph::RunConfig c;
  c.command = command;
  c.catalogs = catalogs;
  c.inputs = inputs;
  c.format = format;
  c.degree = degree;
  c.max_order = max_order;
  c.division = std::move(division);
  if (search_budget) c.search_budget = search_budget;
  std::ostringstream out, err;
  divgraph::ExitStatus status;
  {
    py::gil_scoped_release release;
    status = divgraph::run(c, out, err);
  }
  return {static_cast<int>(status), out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Division graphs of finite groups";
  m.def("run", &run_command, py::arg("command"), py::arg("catalogs") = std::vector<std::string>{},
        py::arg("inputs") = std::vector<std::string>{}, py::arg("format") = "json",
        py::arg("degree") = 0, py::arg("max_order") = 15, py::arg("division") = py::none(),
        py::arg("search_budget") = 0,
        "Run one CLI command. Returns (exit status, artifact text, diagnostics).");
  m.def("commands", &divgraph::command_names);
  m.def("listing", &divgraph::catalog::listing, py::arg("max_order"));
  m.def("descriptor_order", &divgraph::catalog::descriptor_order, py::arg("descriptor"));
}
