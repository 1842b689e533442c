#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subdamp/analysis.hpp"
#include "subdamp/companions.hpp"
#include "subdamp/config.hpp"
#include "subdamp/damping.hpp"
#include "subdamp/hyperbolic.hpp"
#include "subdamp/oracle.hpp"
#include "subdamp/presets.hpp"

namespace py = pybind11;
using namespace subdamp;

namespace {

OracleInput oracle_input_from_text(const std::string& config_text) {
  return oracle_input_from_config(parse_config(config_text));
}

py::dict run_from_text(const std::string& config_text) {
  const RunConfig cfg = parse_config(config_text);
  RunRecord record;
  switch (cfg.model) {
    case Model::conservation: record = run_conservation(cfg); break;
    case Model::viscous: record = run_viscous(cfg); break;
    case Model::wave: record = run_wave(cfg); break;
    case Model::nls: record = run_nls(cfg); break;
  }
  py::dict series;
  for (const auto& [name, s] : record.series) {
    py::dict one;
    one["t"] = s.t;
    one["v"] = s.v;
    series[name.c_str()] = one;
  }
  py::dict out;
  out["config_hash"] = config_hash(record.config);
  out["series"] = series;
  if (!record.snapshots.empty()) {
    const RealField& last = record.snapshots.back();
    out["final_time"] = last.time;
    out["final_values"] = last.values;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_subdamp, m) {
  m.doc() =
      "Scalar conservation laws with localized sublinear damping: exact "
      "damping flows, the crossing oracle, and the PDE solvers.";

  m.def("damping_flow_scalar", &damping_flow_scalar, py::arg("u0"),
        py::arg("a"), py::arg("alpha"), py::arg("dt"),
        "Exact solution at time dt of du/dt = -a u / |u|^alpha.");
  m.def("pointwise_extinction_time", &pointwise_extinction_time,
        py::arg("u0"), py::arg("a"), py::arg("alpha"),
        "Time at which the damping flow reaches exactly zero.");

  m.def(
      "oracle_epsilon",
      [](const std::string& config_text) -> py::object {
        const auto eps = epsilon_threshold(oracle_input_from_text(config_text));
        if (!eps) return py::none();
        return py::float_(*eps);
      },
      py::arg("config_text"),
      "Threshold entry value that just fails to cross the damping window "
      "(None when nothing crosses).");
  m.def(
      "oracle_g",
      [](const std::string& config_text, double v) {
        return g_integral(oracle_input_from_text(config_text), v);
      },
      py::arg("config_text"), py::arg("v"),
      "Distance a characteristic entering the window with value v travels "
      "before dying.");
  m.def(
      "oracle_sequences",
      [](const std::string& config_text) {
        const OracleSequences s =
            iterate_sequences(oracle_input_from_text(config_text));
        py::dict d;
        d["u"] = s.u;
        d["t"] = s.t;
        d["v"] = s.v;
        d["tau"] = s.tau;
        d["n0"] = s.n0;
        d["c0"] = s.c0;
        d["T_star_seq"] = s.T_star_seq;
        d["t_star_seq"] = s.t_star_seq;
        return d;
      },
      py::arg("config_text"), "Crossing recursion (entry/exit values and times).");
  m.def(
      "oracle_T_star_trace",
      [](const std::string& config_text) {
        return T_star_trace(oracle_input_from_text(config_text));
      },
      py::arg("config_text"),
      "First time the inflow trace drops to the crossing threshold.");

  m.def(
      "parse_and_serialize",
      [](const std::string& config_text) {
        return serialize_config(parse_config(config_text));
      },
      py::arg("config_text"),
      "Canonical round-trip of a config (fixed key order, 17 digits).");
  m.def(
      "config_hash_of",
      [](const std::string& config_text) {
        return config_hash(parse_config(config_text));
      },
      py::arg("config_text"), "FNV-1a hash of the canonical serialization.");

  m.def("preset_names", &preset_names, "Names of the built-in presets.");
  m.def(
      "preset_text",
      [](const std::string& name) { return find_preset(name).text; },
      py::arg("name"), "Config text of a built-in preset.");

  m.def("run", &run_from_text, py::arg("config_text"),
        "Run a model from config text; returns series and the final real "
        "snapshot.");
}
