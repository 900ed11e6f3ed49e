#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crsn/config.hpp"
#include "crsn/report.hpp"
#include "crsn/spectrum.hpp"
#include "crsn/sim.hpp"
#include "crsn/sweep.hpp"

namespace py = pybind11;
using namespace crsn;

PYBIND11_MODULE(_crsn, m) {
  m.doc() = "Clustered cognitive-radio sensor network simulator core";

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def_readonly("name", &ScenarioConfig::name)
      .def_readonly("node_count", &ScenarioConfig::node_count)
      .def_readonly("cluster_count", &ScenarioConfig::cluster_count)
      .def_readonly("periods", &ScenarioConfig::periods)
      .def_readonly("seeds", &ScenarioConfig::seeds)
      .def_readonly("root_seed", &ScenarioConfig::root_seed)
      .def_property_readonly("digest",
                             [](const ScenarioConfig& c) { return config_digest(c); })
      .def("__repr__", [](const ScenarioConfig& c) {
        return "<ScenarioConfig '" + c.name + "'>";
      });

  py::class_<SimulationReport>(m, "SimulationReport")
      .def_readonly("config_digest", &SimulationReport::config_digest)
      .def_readonly("seed", &SimulationReport::seed)
      .def_property_readonly(
          "period_count",
          [](const SimulationReport& r) { return r.periods.size(); })
      .def("total_j",
           [](const SimulationReport& r, const std::string& strategy) {
             return r.total_j(parse_strategy(strategy));
           })
      .def("transcript_csv",
           [](const SimulationReport& r) { return transcript_csv(r); });

  m.def("load_config", &load_config, py::arg("path"),
        "Parse and validate a scenario JSON file");
  m.def("run_scenario", &run_scenario, py::arg("config"), py::arg("seed"),
        "Deterministic run of one (config, seed) pair across all strategies");
  m.def(
      "run_sweep",
      [](const ScenarioConfig& config) {
        py::list out;
        for (const auto& row : run_sweep(config)) {
          py::dict d;
          d["sweep_name"] = row.sweep_name;
          d["sweep_value"] = row.sweep_value;
          d["strategy"] = row.strategy;
          d["mean_energy_j"] = row.mean_energy_j;
          d["ci95_j"] = row.ci95_j;
        out.append(d);
        }
        return out;
      },
      py::arg("config"), "Run the configured sweep; one dict per (point, strategy)");
  m.def("q_function", &q_function, py::arg("z"));
  m.def(
      "channel_available_duration",
      [](double p_r, double p_off, double fused_false_alarm, double mean_idle_s) {
        return channel_available_duration(p_r, p_off, fused_false_alarm, mean_idle_s);
      },
      py::arg("p_r"), py::arg("p_off"), py::arg("fused_false_alarm"),
      py::arg("mean_idle_s"),
      "Collision-bounded channel holding time, or None when infeasible");
}
