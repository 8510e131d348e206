// Copyright 2026 The hfphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hfphase/config.hpp"
#include "hfphase/csv.hpp"
#include "hfphase/dynamics.hpp"
#include "hfphase/entanglement.hpp"
#include "hfphase/errors.hpp"
#include "hfphase/geomphase.hpp"
#include "hfphase/hamiltonian.hpp"
#include "hfphase/scenarios.hpp"
#include "hfphase/sweep.hpp"
#include "hfphase/thermal.hpp"

namespace py = pybind11;
using hfphase::Complex;
using hfphase::ComplexMatrix;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw py::value_error("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  ComplexMatrix m(n);
  auto view = a.unchecked<2>();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = view(r, c);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < n; ++r)
    for (py::ssize_t c = 0; c < n; ++c) view(r, c) = m(r, c);
  return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

double or_nan(const std::optional<double>& v) { return v.value_or(std::numeric_limits<double>::quiet_NaN()); }

// Column arrays keyed by CSV column name; missing values are NaN.
py::dict rows_to_columns(const std::vector<hfphase::SweepRow>& rows, bool with_populations) {
  const auto n = static_cast<py::ssize_t>(rows.size());
  const char* names[] = {"J", "C", "D", "epsilon", "beta", "t", "gamma_g", "gamma_g_unwrapped",
                         "magnitude", "concurrence", "oracle_delta"};
  std::vector<py::array_t<double>> cols;
  for (std::size_t i = 0; i < std::size(names); ++i) cols.emplace_back(n);
  std::vector<py::array_t<double>> pops;
  if (with_populations)
    for (int i = 0; i < 4; ++i) pops.emplace_back(n);
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    const double values[] = {r.J, r.C, r.D, r.epsilon, r.beta, r.t, or_nan(r.gamma_g), or_nan(r.gamma_g_unwrapped),
                             or_nan(r.magnitude), or_nan(r.concurrence), or_nan(r.oracle_delta)};
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c].mutable_data()[i] = values[c];
    for (std::size_t p = 0; p < pops.size(); ++p) {
      pops[p].mutable_data()[i] = r.populations ? (*r.populations)[p] : std::numeric_limits<double>::quiet_NaN();
    }
  }
  py::dict out;
  for (std::size_t c = 0; c < cols.size(); ++c) out[names[c]] = cols[c];
  for (std::size_t p = 0; p < pops.size(); ++p) out[("p" + std::to_string(p + 1)).c_str()] = pops[p];
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermal geometric phase and concurrence of the hyperfine two-spin model";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<hfphase::Error>(m, "HfphaseError", PyExc_RuntimeError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hfphase::Error& e) {
      const py::object& type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("code") = std::string(hfphase::to_string(e.code()));
      py::set_error(type, instance);
    }
  });

  m.def("h0", [](double J) { return to_array(hfphase::build_h0(J)); }, py::arg("J"));
  m.def("hi", [](double C, double D) { return to_array(hfphase::build_hi(C, D)); }, py::arg("C"), py::arg("D") = 0.0);
  m.def(
      "hamiltonian",
      [](double J, double C, double D, double epsilon, bool quenched) {
        return to_array(hfphase::build_full({J, C, D, epsilon}, quenched));
      },
      py::arg("J"), py::arg("C"), py::arg("D") = 0.0, py::arg("epsilon") = 0.0, py::arg("quenched") = false,
      "H0 + H_I, or H0 + (1 + epsilon) H_I when quenched.");
  m.def("analytic_spectrum", &hfphase::analytic_spectrum, py::arg("J"), py::arg("C"));
  m.def(
      "field_to_couplings",
      [](double field, double scale) {
        const auto c = hfphase::field_to_couplings(field, scale);
        return py::make_tuple(c.C, c.D);
      },
      py::arg("mu_b_field"), py::arg("energy_scale") = 1.0);

  m.def(
      "eigh",
      [](const CArray& a) {
        const auto eig = hfphase::hermitian_eig(to_matrix(a));
        return py::make_tuple(to_array(eig.eigenvalues), to_array(eig.eigenvectors));
      },
      py::arg("m"), "Ascending eigenvalues and gauge-fixed eigenvectors (columns).");

  py::class_<hfphase::ThermalState>(m, "ThermalState")
      .def_readonly("beta", &hfphase::ThermalState::beta)
      .def_property_readonly("rho", [](const hfphase::ThermalState& s) { return to_array(s.rho); })
      .def_property_readonly("basis", [](const hfphase::ThermalState& s) { return to_array(s.basis); })
      .def_property_readonly("populations", [](const hfphase::ThermalState& s) { return to_array(s.populations); })
      .def_readonly("log_partition_function", &hfphase::ThermalState::log_partition_function);

  m.def(
      "gibbs_state",
      [](const CArray& h, double beta, std::optional<CArray> reference) {
        if (reference) return hfphase::gibbs_state(to_matrix(h), beta, to_matrix(*reference));
        return hfphase::gibbs_state(to_matrix(h), beta);
      },
      py::arg("hamiltonian"), py::arg("beta"), py::arg("reference") = py::none());

  m.def("propagator", [](const CArray& h, double t) { return to_array(hfphase::propagator(to_matrix(h), t)); },
        py::arg("hamiltonian"), py::arg("t"));
  m.def("evolve", [](const CArray& rho, const CArray& u) { return to_array(hfphase::evolve(to_matrix(rho), to_matrix(u))); },
        py::arg("rho"), py::arg("U"));

  py::class_<hfphase::PhaseResult>(m, "PhaseResult")
      .def_readonly("gamma", &hfphase::PhaseResult::gamma)
      .def_readonly("magnitude", &hfphase::PhaseResult::magnitude)
      .def_readonly("well_defined", &hfphase::PhaseResult::well_defined)
      .def_readonly("sum", &hfphase::PhaseResult::sum)
      .def("__repr__", [](const hfphase::PhaseResult& r) {
        std::ostringstream os;
        os << "PhaseResult(gamma=" << r.gamma << ", magnitude=" << r.magnitude << ")";
        return os.str();
      });

  m.def(
      "geometric_phase",
      [](const hfphase::ThermalState& state, const CArray& hprime, double t, std::optional<CArray> dynamical_h) {
        const auto hp = to_matrix(hprime);
        return hfphase::geometric_phase_closed(state, hp, t, dynamical_h ? to_matrix(*dynamical_h) : hp);
      },
      py::arg("state"), py::arg("hprime"), py::arg("t"), py::arg("dynamical_h") = py::none());
  m.def(
      "geometric_phase_integrated",
      [](const hfphase::ThermalState& state, const CArray& hprime, double t, int steps) {
        return hfphase::geometric_phase_integrated(state, to_matrix(hprime), t, steps);
      },
      py::arg("state"), py::arg("hprime"), py::arg("t"), py::arg("steps") = 10000);
  m.def("wrap_phase", &hfphase::wrap_phase, py::arg("angle"));

  m.def("concurrence", [](const CArray& rho) { return hfphase::concurrence(to_matrix(rho)).value; }, py::arg("rho"));
  m.def("spin_flip", [](const CArray& rho) { return to_array(hfphase::spin_flip(to_matrix(rho))); }, py::arg("rho"));

  py::class_<hfphase::SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("scenario", &hfphase::SweepConfig::scenario)
      .def_readwrite("J", &hfphase::SweepConfig::J)
      .def_readwrite("C", &hfphase::SweepConfig::C)
      .def_readwrite("D", &hfphase::SweepConfig::D)
      .def_readwrite("epsilon", &hfphase::SweepConfig::epsilon)
      .def_readwrite("beta", &hfphase::SweepConfig::beta)
      .def_readwrite("t", &hfphase::SweepConfig::t)
      .def_readwrite("oracle_check", &hfphase::SweepConfig::oracle_check)
      .def_readwrite("steps", &hfphase::SweepConfig::steps)
      .def_readwrite("threads", &hfphase::SweepConfig::threads)
      .def_readwrite("max_rows", &hfphase::SweepConfig::max_rows)
      .def("set", [](hfphase::SweepConfig& c, const std::string& key, const std::string& value) {
        hfphase::apply_setting(c, key, value);
      }, py::arg("key"), py::arg("value"), "Applies one `key = value` setting.")
      .def("row_count", &hfphase::SweepConfig::row_count)
      .def("validate", &hfphase::SweepConfig::validate);

  m.def("parse_config", [](const std::string& text) { return hfphase::parse_config(text); }, py::arg("text"));
  m.def("load_scenario", [](const std::string& name) { return hfphase::load_scenario(name); }, py::arg("name"));
  m.def("scenario_names", &hfphase::scenario_names);

  m.def(
      "run_sweep",
      [](const hfphase::SweepConfig& config) {
        std::vector<hfphase::SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = hfphase::run_sweep(config);
        }
        return rows_to_columns(rows, config.outputs.populations);
      },
      py::arg("config"), "Runs the grid and returns a dict of column arrays; missing values are NaN.");
  m.def(
      "sweep_csv",
      [](const hfphase::SweepConfig& config) {
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          hfphase::CsvWriter writer(out, config.outputs.populations);
          hfphase::run_sweep(config, [&](const hfphase::SweepRow& row) { writer.write(row); });
        }
        return out.str();
      },
      py::arg("config"));

  m.def(
      "unwrap_phase",
      [](const std::vector<double>& times, const std::vector<double>& phases) {
        std::vector<std::optional<double>> in;
        for (double p : phases) in.push_back(std::isnan(p) ? std::nullopt : std::optional<double>(p));
        std::vector<double> out;
        for (const auto& v : hfphase::unwrap_phase(times, in)) out.push_back(or_nan(v));
        return to_array(out);
      },
      py::arg("times"), py::arg("phases"), "NaN entries are passed through.");
}
