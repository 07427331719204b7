#include <complex>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/error.hpp"
#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/geodesic.hpp"
#include "hsgeo/hs_solve.hpp"
#include "hsgeo/periodic_ch.hpp"
#include "hsgeo/rmap.hpp"
#include "hsgeo/soliton.hpp"
#include "hsgeo/twocomp.hpp"
#include "hsgeo/verify.hpp"

namespace py = pybind11;
using namespace hsgeo;

namespace {

template <class T>
py::array_t<T> to_array(const BasicGridFunction<T>& f) {
  auto v = f.values();
  return py::array_t<T>(static_cast<py::ssize_t>(v.size()), v.data());
}

GridFunction from_array(const Grid& grid, py::array_t<double, py::array::c_style | py::array::forcecast> a,
                        const std::string& decay) {
  if (a.ndim() != 1) throw Error(ErrorKind::InvalidArgument, "expected a 1-d array");
  std::vector<double> v(a.data(), a.data() + a.size());
  return {grid, std::move(v), decay_from_string(decay)};
}

py::object flow_result(const std::variant<Diffeo, MonotoneMap>& m) {
  return std::visit([](const auto& x) { return py::cast(x); }, m);
}

}  // namespace

PYBIND11_MODULE(_hsgeo, m) {
  m.doc() = "Hunter-Saxton geometry on diffeomorphism groups of the line and circle";

  // the module attribute keeps the type alive
  static py::handle error_type;
  error_type = py::exception<Error>(m, "HsgeoError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::enum_<GroupClass>(m, "GroupClass")
      .value("A", GroupClass::A)
      .value("A1", GroupClass::A1)
      .value("A2", GroupClass::A2)
      .value("PeriodicLift", GroupClass::PeriodicLift);

  py::class_<Grid>(m, "Grid")
      .def_static("line", &Grid::line, py::arg("n"), py::arg("x_min"), py::arg("x_max"))
      .def_static("periodic", &Grid::periodic, py::arg("n"))
      .def_static("default_line", &Grid::default_line)
      .def_property_readonly("size", &Grid::size)
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("is_periodic", &Grid::is_periodic)
      .def("nodes", [](const Grid& g) {
        auto n = g.nodes();
        return py::array_t<double>(static_cast<py::ssize_t>(n.size()), n.data());
      });

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init(&from_array), py::arg("grid"), py::arg("values"), py::arg("decay") = "rapidly-decreasing")
      .def_property_readonly("grid", &GridFunction::grid)
      .def_property_readonly("decay", [](const GridFunction& f) { return std::string(to_string(f.decay())); })
      .def_property_readonly("values", [](const GridFunction& f) { return to_array(f); })
      .def("__len__", &GridFunction::size);

  m.def("sample", [](const std::string& spec, const Grid& grid) { return FunctionSpec::parse(spec).sample(grid); },
        py::arg("spec"), py::arg("grid"), "Sample a named family such as 'gaussian:amp=0.5'.");
  m.def("integrate", [](const GridFunction& f) { return integrate(f); });
  m.def("derivative", [](const GridFunction& f) { return derivative(f); });

  py::class_<MonotoneMap>(m, "MonotoneMap")
      .def_property_readonly("f", &MonotoneMap::f)
      .def_property_readonly("phi", &MonotoneMap::phi)
      .def_property_readonly("dphi", &MonotoneMap::dphi)
      .def_property_readonly("min_derivative", &MonotoneMap::min_derivative)
      .def_property_readonly("group_class", &MonotoneMap::group_class);
  py::class_<Diffeo, MonotoneMap>(m, "Diffeo")
      .def_static("identity", &Diffeo::identity)
      .def_static("from_displacement",
                  [](GridFunction f, std::optional<GroupClass> cls) {
                    return cls ? Diffeo::from_displacement(std::move(f), *cls)
                               : Diffeo::from_displacement(std::move(f));
                  },
                  py::arg("f"), py::arg("group_class") = py::none());

  m.def("compose", [](const Diffeo& a, const Diffeo& b) { return compose(a, b); });
  m.def("invert", [](const Diffeo& a) { return invert(a); });
  m.def("shifts", [](const Diffeo& a) { return shifts(a); });

  m.def("r_map", [](const Diffeo& phi) { return r_map(phi).gamma(); });
  m.def("r_inverse", [](const GridFunction& gamma) { return r_inverse(RPoint::from_gamma(gamma)); });
  m.def("tangent_r", [](const Diffeo& phi, const GridFunction& h) { return tangent_r(phi, h); });
  m.def("image_defect", &image_defect);
  m.def("distance", [](const Diffeo& a, const Diffeo& b) { return distance(a, b); });

  py::class_<GeodesicPath>(m, "GeodesicPath")
      .def_property_readonly("gamma0", &GeodesicPath::gamma0)
      .def_property_readonly("k", &GeodesicPath::k)
      .def_property_readonly("t_exit_forward", &GeodesicPath::t_exit_forward)
      .def_property_readonly("t_exit_backward", &GeodesicPath::t_exit_backward)
      .def("gamma_at", &GeodesicPath::gamma_at)
      .def("displacement", [](const GeodesicPath& p, double t) { return evaluate_displacement(p, t); })
      .def("evaluate", [](const GeodesicPath& p, double t) { return flow_result(evaluate(p, t)); });
  m.def("geodesic_bvp", [](const Diffeo& a, const Diffeo& b) { return geodesic_bvp(a, b); });
  m.def("geodesic_ivp", [](const Diffeo& a, const GridFunction& h) { return geodesic_ivp(a, h); });
  m.def("geodesic_from_identity", &geodesic_from_identity);
  m.def("shift_along_geodesic", &shift_along_geodesic);

  py::class_<HSSolution>(m, "HSSolution")
      .def_property_readonly("t_blowup", &HSSolution::t_blowup)
      .def_property_readonly("t_blowup_backward", &HSSolution::t_blowup_backward)
      .def("velocity", [](const HSSolution& s, double t) { return hs_velocity(s, t); })
      .def("flow", [](const HSSolution& s, double t) { return flow_result(hs_flow(s, t)); })
      .def("residual", [](const HSSolution& s, double t, double dt) { return hs_residual(s, t, dt); });
  m.def("hs_solve", [](const GridFunction& u0) { return hs_solve(u0); });

  py::class_<SolitonState>(m, "SolitonState")
      .def(py::init([](std::vector<double> y, std::vector<double> a) {
             SolitonState s{std::move(y), std::move(a), 0.0};
             s.validate();
             return s;
           }),
           py::arg("y"), py::arg("a"))
      .def_readonly("y", &SolitonState::y)
      .def_readonly("a", &SolitonState::a)
      .def_readonly("time", &SolitonState::time);
  m.def("soliton_energy", &soliton_energy);
  m.def("soliton_blowup_time", &soliton_blowup_time);
  m.def("soliton_flow", &soliton_flow_closed_form);
  m.def("soliton_rk4", &soliton_rk4);
  m.def("soliton_to_velocity", &soliton_to_velocity);

  py::class_<TwoCompSolution>(m, "TwoCompSolution")
      .def_property_readonly("t_breakdown", &TwoCompSolution::t_breakdown)
      .def("velocity", &TwoCompSolution::velocity)
      .def("gamma", [](const TwoCompSolution& s, double t) { return to_array(s.gamma(t)); });
  m.def("twocomp_solve", [](const GridFunction& u0, const GridFunction& rho0) { return twocomp_solve(u0, rho0); });

  py::class_<PeriodicHSSolution>(m, "PeriodicHSSolution")
      .def(py::init([](const GridFunction& u0) { return PeriodicHSSolution(u0); }))
      .def_property_readonly("omega", &PeriodicHSSolution::omega)
      .def_property_readonly("t_positivity", &PeriodicHSSolution::t_positivity)
      .def("gamma", &PeriodicHSSolution::gamma)
      .def("flow", &PeriodicHSSolution::flow)
      .def("velocity", &PeriodicHSSolution::velocity);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("id", &CheckResult::id)
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("value", &CheckResult::value)
      .def_readonly("threshold", &CheckResult::threshold)
      .def_readonly("detail", &CheckResult::detail);
  m.def("run_check", [](int id) { return run_check(id); }, py::arg("id"));
}
