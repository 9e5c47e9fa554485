#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vqr/channels.hpp"
#include "vqr/error.hpp"
#include "vqr/harness.hpp"

namespace py = pybind11;
using namespace vqr;

namespace {

py::dict report_dict(const RealismReport& r) {
  py::dict d;
  d["kind"] = r.kind.name();
  d["r_value"] = r.r_value;
  d["r_max"] = r.r_max;
  d["delta_i"] = r.delta_i;
  d["vqr_detected"] = r.vqr_detected;
  d["unverified_axioms"] = r.unverified_axioms;
  return d;
}

MonotoneKind kind_arg(const std::string& s) { return parse_monotone_kind(s); }

harness::SweepSpec spec_for(harness::Experiment e, std::size_t trials, std::uint64_t seed) {
  harness::SweepSpec spec;
  spec.experiment = e;
  spec.trials = trials;
  spec.seed = seed;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_vqr, m) {
  m.doc() = "Realism monotones, their distances and the audit/verify harness.";

  static py::exception<vqr::Error> vqr_error(m, "VqrError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const vqr::Error& e) {
      py::object err = vqr_error;
      py::object inst = err(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("magnitude") = e.magnitude();
      PyErr_SetObject(err.ptr(), inst.ptr());
    }
  });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<Matrix, Dims>(), py::arg("matrix"), py::arg("dims"))
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def("purity", &DensityMatrix::purity);

  py::class_<Observable>(m, "Observable")
      .def(py::init<std::vector<Matrix>, std::vector<double>, std::size_t>(), py::arg("projectors"),
           py::arg("eigenvalues"), py::arg("subsystem") = 0)
      .def_property_readonly("projectors", &Observable::projectors)
      .def_property_readonly("eigenvalues", &Observable::eigenvalues)
      .def_property_readonly("subsystem", &Observable::subsystem)
      .def("local_operator", &Observable::local_operator);

  m.def("werner", &werner, py::arg("epsilon"));
  m.def("mu_state", &mu_state, py::arg("mu"));
  m.def("max_entangled", &max_entangled, py::arg("d"));
  m.def("random_density", py::overload_cast<std::size_t, std::size_t, std::uint64_t>(&random_density), py::arg("d"),
        py::arg("rank"), py::arg("seed"));
  m.def("spin_observable", &spin_observable, py::arg("theta"), py::arg("phi"), py::arg("subsystem") = 0);
  m.def("computational_observable",
        py::overload_cast<std::size_t, std::size_t, const Dims&>(&computational_observable), py::arg("d"),
        py::arg("subsystem"), py::arg("dims"));
  m.def("measure", py::overload_cast<const DensityMatrix&, const Observable&>(&measure_nonselective),
        py::arg("rho"), py::arg("observable"));

  m.def("trace_distance", &trace_distance);
  m.def("hs_distance", &hs_distance);
  m.def("lp_distance", &lp_distance, py::arg("rho"), py::arg("sigma"), py::arg("p"));
  m.def("fidelity", &fidelity);
  m.def("bures_distance_sq", &bures_distance_sq);
  m.def("hellinger_distance_sq", &hellinger_distance_sq);
  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("relative_entropy", [](const Matrix& r, const Matrix& s) { return relative_entropy(r, s).value; });
  m.def("renyi_divergence",
        [](const Matrix& r, const Matrix& s, double alpha) { return renyi_divergence(r, s, alpha).value; });
  m.def("sandwiched_renyi_divergence", [](const Matrix& r, const Matrix& s, double alpha) {
    return sandwiched_renyi_divergence(r, s, alpha).value;
  });

  m.def("irrealism", &irrealism);
  m.def(
      "realism",
      [](const DensityMatrix& rho, const Observable& a, const std::string& kind) {
        return report_dict(realism(rho, a, kind_arg(kind)));
      },
      py::arg("rho"), py::arg("observable"), py::arg("kind"));
  m.def(
      "realism_max", [](const std::string& kind, std::size_t d_e) { return realism_max(kind_arg(kind), d_e); },
      py::arg("kind"), py::arg("d_e"));
  m.def(
      "delta_information",
      [](const DensityMatrix& rho, const Observable& a, const std::string& kind, bool full_space) {
        return full_space ? delta_information_full_space(rho, a, kind_arg(kind))
                          : delta_information_closed_form(rho, a, kind_arg(kind));
      },
      py::arg("rho"), py::arg("observable"), py::arg("kind"), py::arg("full_space") = false);

  m.def(
      "werner_sweep_csv",
      [](std::size_t eps_steps, const std::string& kinds) {
        harness::SweepSpec spec;
        spec.eps_steps = eps_steps;
        spec.kinds = parse_monotone_kinds(kinds);
        return harness::to_csv(harness::run_werner_sweep(spec));
      },
      py::arg("eps_steps") = 101, py::arg("kinds") = "tr,hs,bu,he,vn");
  m.def(
      "audit_json",
      [](std::size_t trials, std::uint64_t seed) {
        return harness::dump_json(harness::to_json(
            harness::run_axiom_audit(spec_for(harness::Experiment::AxiomAudit, trials, seed))));
      },
      py::arg("trials") = 200, py::arg("seed") = 1);
  m.def(
      "verify_json",
      [](std::size_t trials, std::uint64_t seed) {
        return harness::dump_json(
            harness::to_json(harness::run_verify(spec_for(harness::Experiment::Verify, trials, seed))));
      },
      py::arg("trials") = 100, py::arg("seed") = 1);
}
