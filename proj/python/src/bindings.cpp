#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "netform/netform.hpp"

namespace py = pybind11;
using netform::Graph;
using netform::io::json;

namespace {

netform::GameSpec spec_from(const std::string& text) {
  return netform::io::game_spec_from_json(netform::io::parse_json(text, "<spec>"));
}

}  // namespace

PYBIND11_MODULE(_netform, m) {
  m.doc() = "Native core of netform. Rationals cross the boundary as \"p/q\" strings.";
  m.attr("__version__") = netform::kVersion;

  py::register_exception<netform::Error>(m, "NetformError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_static("from_code", &Graph::from_code_string, py::arg("n"), py::arg("code"))
      .def_property_readonly("n", &Graph::n)
      .def("has_edge", &Graph::has_edge)
      .def("with_edge", &Graph::with_edge)
      .def("without_edge", &Graph::without_edge)
      .def("degree", &Graph::degree)
      .def("degree_sequence", [](const Graph& g) { return g.degree_sequence().values(); })
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def_property_readonly("code", &Graph::code_string)
      .def("to_json", [](const Graph& g) { return netform::io::graph_to_json(g).dump(); })
      .def("to_dot", &netform::io::graph_to_dot, py::arg("name") = "G")
      .def(py::self == py::self)
      .def("__hash__", [](const Graph& g) { return py::hash(py::make_tuple(g.n(), g.code_string())); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("eg_check", [](const std::vector<int>& d) { return netform::eg_check(netform::DegreeSequence(d)); });
  m.def("realize", [](const std::vector<int>& d) { return netform::realize(netform::DegreeSequence(d)); });

  m.def("normalize_spec", [](const std::string& spec) { return netform::io::game_spec_to_json(spec_from(spec)).dump(); });

  m.def("payoffs", [](const std::string& spec, const Graph& g) {
    return netform::io::payoffs_to_json(netform::PayoffModel(spec_from(spec)).payoffs(g)).dump();
  });
  m.def("cournot_outcome", [](const std::string& spec, const Graph& g) {
    return netform::io::cournot_outcome_to_json(netform::cournot_outcome(spec_from(spec), g)).dump();
  });
  m.def("is_pairwise_stable", [](const std::string& spec, const Graph& g) {
    return netform::io::stability_report_to_json(netform::is_pairwise_stable(spec_from(spec), g)).dump();
  });
  m.def(
      "enumerate_stable",
      [](const std::string& spec, int threads) {
        const netform::PayoffModel model(spec_from(spec));
        netform::StableCensus census;
        {
          py::gil_scoped_release release;
          census = netform::enumerate_stable(model, threads);
        }
        return netform::io::census_to_json(census, model).dump();
      },
      py::arg("spec"), py::arg("threads") = 1);
  m.def("is_pareto_optimal", [](const std::string& spec, const Graph& g) {
    const auto r = netform::is_pareto_optimal(spec_from(spec), g);
    return std::make_pair(r.optimal, r.dominated_by);
  });
  m.def(
      "check_nonneg_condition",
      [](const std::string& spec, const std::optional<Graph>& at) {
        const auto r = netform::check_nonneg_condition(spec_from(spec), at);
        json rows = json::array({netform::io::condition_to_json(r.bound)});
        if (r.ineq_plus) rows.push_back(netform::io::condition_to_json(*r.ineq_plus));
        if (r.ineq_minus) rows.push_back(netform::io::condition_to_json(*r.ineq_minus));
        return rows.dump();
      },
      py::arg("spec"), py::arg("at") = std::nullopt);
  m.def("check_complete_graph_conditions", [](const std::string& spec) {
    json rows = json::array();
    for (const auto& c : netform::check_complete_graph_conditions(spec_from(spec))) {
      rows.push_back(netform::io::condition_to_json(c));
    }
    return rows.dump();
  });
  m.def("simulate", [](const std::string& config) {
    const auto c = netform::io::formation_config_from_json(netform::io::parse_json(config, "<config>"));
    std::optional<netform::FormationResult> r;
    {
      py::gil_scoped_release release;
      r = netform::simulate(c);
    }
    return py::make_tuple(r->graph, r->steps, netform::to_string(r->outcome), r->trace);
  });
  m.def(
      "run_ensemble",
      [](const std::string& config, int runs, int threads) {
        const auto c = netform::io::formation_config_from_json(netform::io::parse_json(config, "<config>"));
        netform::EnsembleStats stats;
        {
          py::gil_scoped_release release;
          stats = netform::run_ensemble(c, runs, threads);
        }
        return netform::io::ensemble_to_json(stats).dump();
      },
      py::arg("config"), py::arg("runs"), py::arg("threads") = 1);
}
