#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermowire/asymptotics.hpp"
#include "thermowire/geometry.hpp"
#include "thermowire/langevin.hpp"
#include "thermowire/model.hpp"
#include "thermowire/spectral.hpp"
#include "thermowire/validation.hpp"

namespace py = pybind11;
using namespace thermowire;

PYBIND11_MODULE(_thermowire, m) {
  m.doc() = "thermal interaction of two inductively coupled noisy wires";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);

  py::class_<ReducedParams>(m, "ReducedParams")
      .def(py::init([](double m_, double omega_r, std::optional<double> omega_c,
                       double t) {
             ReducedParams p;
             p.m = m_;
             p.omega_r = omega_r;
             p.omega_c = omega_c;
             p.t = t;
             p.validate();
             return p;
           }),
           py::arg("m") = 0.0, py::arg("omega_r") = 0.0,
           py::arg("omega_c") = std::nullopt, py::arg("t") = 0.0)
      .def_readwrite("m", &ReducedParams::m)
      .def_readwrite("omega_r", &ReducedParams::omega_r)
      .def_readwrite("omega_c", &ReducedParams::omega_c)
      .def_readwrite("t", &ReducedParams::t);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double l, double m_, double r,
                       std::optional<double> c, double temp) {
             PhysicalParams p;
             p.inductance = l;
             p.mutual_inductance = m_;
             p.resistance = r;
             p.capacitance = c;
             p.temperature = temp;
             p.validate();
             return p;
           }),
           py::arg("inductance"), py::arg("mutual_inductance"),
           py::arg("resistance"), py::arg("capacitance") = std::nullopt,
           py::arg("temperature") = 0.0)
      .def_readwrite("inductance", &PhysicalParams::inductance)
      .def_readwrite("mutual_inductance", &PhysicalParams::mutual_inductance)
      .def_readwrite("resistance", &PhysicalParams::resistance)
      .def_readwrite("capacitance", &PhysicalParams::capacitance)
      .def_readwrite("temperature", &PhysicalParams::temperature);

  py::class_<ThermoResult>(m, "ThermoResult")
      .def_readonly("value", &ThermoResult::value)
      .def_readonly("abs_error_estimate", &ThermoResult::abs_error_estimate)
      .def("__repr__", [](const ThermoResult& r) {
        return "ThermoResult(value=" + std::to_string(r.value) +
               ", abs_error_estimate=" + std::to_string(r.abs_error_estimate) +
               ")";
      });

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions);

  py::class_<ResistanceModel>(m, "ResistanceModel")
      .def_static("fixed", &ResistanceModel::fixed)
      .def_static("power_law", &ResistanceModel::power_law, py::arg("c"),
                  py::arg("p"));

  m.def("bose_factor", &bose_factor, py::arg("y"));
  m.def("response_denominator", &response_denominator, py::arg("omega"),
        py::arg("params"));
  m.def(
      "to_reduced",
      [](const PhysicalParams& p, std::optional<double> omega_ref) {
        const ReducedWithRef r = to_reduced(p, omega_ref);
        return py::make_tuple(r.reduced, r.omega_ref);
      },
      py::arg("params"), py::arg("omega_ref") = std::nullopt,
      "returns (ReducedParams, omega_ref)");
  m.def("from_reduced", &from_reduced, py::arg("params"), py::arg("omega_ref"),
        py::arg("inductance"));

  m.def("h_factor", &h_factor, py::arg("params"),
        py::arg("quadrature") = QuadratureConfig{});
  m.def("force_reduced", &force_reduced, py::arg("params"), py::arg("dm2_da"),
        py::arg("quadrature") = QuadratureConfig{});
  m.def("interaction_free_energy", &interaction_free_energy, py::arg("params"),
        py::arg("quadrature") = QuadratureConfig{});
  m.def("self_free_energy", &self_free_energy, py::arg("t"));
  m.def("self_entropy", &self_entropy, py::arg("t"));
  m.def("interaction_entropy", &interaction_entropy, py::arg("params"),
        py::arg("resistance_model"), py::arg("quadrature") = QuadratureConfig{});
  m.def("total_entropy", &total_entropy, py::arg("params"),
        py::arg("resistance_model"), py::arg("quadrature") = QuadratureConfig{});
  m.def(
      "spectral_density",
      [](double omega, const ReducedParams& p, const std::string& which) {
        const auto kind = which == "h-integrand"
                              ? SpectralDensityKind::kHIntegrand
                              : SpectralDensityKind::kFreeEnergyIntegrand;
        return spectral_density(omega, p, kind);
      },
      py::arg("omega"), py::arg("params"), py::arg("which"));

  m.def("h_classical", &asymptotics::h_classical, py::arg("m"));
  m.def("g_classical", &asymptotics::g_classical, py::arg("m"));
  m.def("nernst_entropy_limit", &asymptotics::nernst_entropy_limit,
        py::arg("m"));
  m.def("low_t_capacitive_free_energy",
        &asymptotics::low_t_capacitive_free_energy, py::arg("t"), py::arg("m"),
        py::arg("omega_r"));

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("inductance", &SimConfig::inductance)
      .def_readwrite("mutual_inductance", &SimConfig::mutual_inductance)
      .def_readwrite("resistance", &SimConfig::resistance)
      .def_readwrite("kT", &SimConfig::kT)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("n_steps", &SimConfig::n_steps)
      .def_readwrite("burn_in", &SimConfig::burn_in)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("n_replicas", &SimConfig::n_replicas);

  py::class_<LangevinEstimate>(m, "LangevinEstimate")
      .def_readonly("corr_12", &LangevinEstimate::corr_12)
      .def_readonly("var_1", &LangevinEstimate::var_1)
      .def_readonly("var_2", &LangevinEstimate::var_2)
      .def_readonly("stderr_corr", &LangevinEstimate::stderr_corr)
      .def_readonly("stderr_var", &LangevinEstimate::stderr_var)
      .def_readonly("n_effective", &LangevinEstimate::n_effective)
      .def_readonly("rng_algorithm", &LangevinEstimate::rng_algorithm);

  m.def("equipartition_covariance", &equipartition_covariance,
        py::arg("inductance"), py::arg("mutual_inductance"), py::arg("kT"));
  m.def("simulate_correlator", &simulate_correlator, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("oracle_force", &oracle_force, py::arg("config"), py::arg("grad_M"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<Polyline3>(m, "Polyline3")
      .def(py::init([](std::vector<Vec3> pts, bool closed) {
             Polyline3 c{std::move(pts), closed};
             c.validate();
             return c;
           }),
           py::arg("points"), py::arg("closed") = false)
      .def_readwrite("points", &Polyline3::points)
      .def_readwrite("closed", &Polyline3::closed)
      .def("length", &Polyline3::length);

  py::class_<InductanceResult>(m, "InductanceResult")
      .def_readonly("mutual", &InductanceResult::mutual)
      .def_readonly("quadrature_error", &InductanceResult::quadrature_error);

  py::class_<NeumannConfig>(m, "NeumannConfig")
      .def(py::init<>())
      .def_readwrite("contact_cutoff", &NeumannConfig::contact_cutoff)
      .def_readwrite("panel_variation", &NeumannConfig::panel_variation);

  m.def("neumann_mutual_inductance", &neumann_mutual_inductance,
        py::arg("c1"), py::arg("c2"), py::arg("a"),
        py::arg("config") = NeumannConfig{});
  m.def("grad_m2", &grad_m2, py::arg("c1"), py::arg("c2"), py::arg("a"),
        py::arg("inductance"), py::arg("config") = NeumannConfig{});
  m.def("physical_force", &physical_force, py::arg("c1"), py::arg("c2"),
        py::arg("a"), py::arg("inductance"), py::arg("resistance"),
        py::arg("capacitance"), py::arg("temperature"),
        py::arg("quadrature") = QuadratureConfig{},
        py::arg("config") = NeumannConfig{});

  m.def(
      "run_validation",
      [](double tighten, const std::string& filter) {
        ValidationOptions opts;
        opts.tighten = tighten;
        opts.filter = filter;
        py::list out;
        for (const CriterionResult& r : run_validation(opts)) {
          out.append(py::dict(py::arg("name") = r.name,
                              py::arg("passed") = r.passed,
                              py::arg("detail") = r.detail));
        }
        return out;
      },
      py::arg("tighten") = 1.0, py::arg("filter") = "");
}
