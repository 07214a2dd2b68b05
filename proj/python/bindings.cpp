#include "ulamfloat/asa.hpp"
#include "ulamfloat/caps.hpp"
#include "ulamfloat/centroid.hpp"
#include "ulamfloat/cli.hpp"
#include "ulamfloat/float_bodies.hpp"
#include "ulamfloat/floatsim.hpp"
#include "ulamfloat/spec_io.hpp"
#include "ulamfloat/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace ulamfloat;

namespace {

py::dict approximation_dict(const BodyApproximation& a) {
  std::vector<Vec> dirs;
  dirs.reserve(a.directions.size());
  for (const auto& d : a.directions) {
    dirs.push_back(d.vec());
  }
  py::dict r;
  r["kind"] = to_string(a.kind);
  r["dim"] = a.dim;
  r["param"] = a.param;
  r["directions"] = dirs;
  r["support_values"] = a.support_values;
  r["boundary_points"] = a.boundary_points;
  r["gap_estimate"] = a.gap_estimate;
  r["inner_volume"] = a.inner_volume;
  r["outer_volume"] = a.outer_volume;
  r["empty"] = a.empty;
  return r;
}

Weight weight_or_one(const std::optional<Weight>& w) {
  return w ? *w : Weight::constant(1.0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<Body>(m, "Body")
      .def_static("ball", &Body::ball, py::arg("center"), py::arg("radius"))
      .def_static("ellipsoid", &Body::ellipsoid, py::arg("center"), py::arg("shape"))
      .def_static("polytope", &Body::polytope, py::arg("vertices"))
      .def_static("from_json", &parse_body, py::arg("text"))
      .def_property_readonly("dim", &Body::dim)
      .def_property_readonly("kind", [](const Body& b) { return to_string(b.kind()); })
      .def_property_readonly("volume", &Body::volume)
      .def_property_readonly("barycenter", &Body::barycenter)
      .def("support", [](const Body& b, const Vec& u) { return b.support(u); })
      .def("contains", [](const Body& b, const Vec& x) { return b.contains(x); })
      .def("recentered", &Body::recentered)
      .def("normalized", &Body::normalized);

  py::class_<Weight>(m, "Weight")
      .def_static("constant", &Weight::constant, py::arg("value"))
      .def_static("gaussian", &Weight::gaussian, py::arg("center"), py::arg("sigma"),
                  py::arg("scale") = 1.0)
      .def_static(
          "phi_p",
          [](double p, const Body& host, const std::string& ext, double collar) {
            if (ext != "radial" && ext != "collar") {
              throw InvalidInput("extension must be 'radial' or 'collar'");
            }
            return Weight::phi_p(p, host,
                                 ext == "collar" ? PhiExtension::Collar : PhiExtension::Radial,
                                 collar);
          },
          py::arg("p"), py::arg("host"), py::arg("extension") = "radial",
          py::arg("collar") = 0.1)
      .def_static("from_json", &parse_weight, py::arg("text"), py::arg("host"))
      .def_property_readonly("id", &Weight::id)
      .def("__call__", [](const Weight& w, const Vec& x) { return w(x); });

  m.def(
      "cut_height",
      [](const Body& b, const Vec& theta, double delta, std::optional<Weight> w) {
        return cut_height(b, weight_or_one(w), Direction(theta), delta);
      },
      py::arg("body"), py::arg("theta"), py::arg("delta"), py::arg("weight") = py::none());
  m.def(
      "cap_cut",
      [](const Body& b, const Vec& theta, double delta, std::optional<Weight> w) {
        const CapCut c = cap_cut(b, weight_or_one(w), Direction(theta), delta);
        py::dict r;
        r["d"] = c.d;
        r["mass"] = c.mass;
        r["barycenter"] = c.barycenter;
        r["backend"] = to_string(c.backend);
        r["error_estimate"] = c.error_estimate;
        return r;
      },
      py::arg("body"), py::arg("theta"), py::arg("delta"), py::arg("weight") = py::none());
  m.def(
      "ulam_body",
      [](const Body& b, double delta, int m_dirs, std::optional<Weight> w) {
        return approximation_dict(build_ulam_body(b, weight_or_one(w), delta, m_dirs));
      },
      py::arg("body"), py::arg("delta"), py::arg("m") = 256, py::arg("weight") = py::none());
  m.def(
      "floating_body",
      [](const Body& b, double delta, int m_dirs, std::optional<Weight> w) {
        return approximation_dict(build_floating_body(b, weight_or_one(w), delta, m_dirs));
      },
      py::arg("body"), py::arg("delta"), py::arg("m") = 256, py::arg("weight") = py::none());
  m.def(
      "zp_support",
      [](const Body& b, double p, const Vec& theta) {
        const ZpValue z = zp_support(b, p, Direction(theta));
        return std::make_tuple(z.h, z.x);
      },
      py::arg("body"), py::arg("p"), py::arg("theta"));

  m.def("asa_p", &asa_p, py::arg("body"), py::arg("p"), py::arg("rel_tol") = 1e-9);
  m.def("asa_p_ball", &asa_p_ball, py::arg("n"), py::arg("rho"), py::arg("p"));
  m.def("ball_shrinkage", &ball_shrinkage, py::arg("n"), py::arg("rho"), py::arg("delta"),
        py::arg("s") = 1.0);
  m.def("c_n", &c_n_proposition, py::arg("n"));
  m.def("c_n_theorem", &c_n_theorem, py::arg("n"));
  m.def(
      "limit_experiment",
      [](const Body& b, std::optional<Weight> w, double delta0, int steps, int m_dirs) {
        LimitOptions o;
        o.delta0 = delta0;
        o.steps = steps;
        o.m = m_dirs;
        const ExperimentRecord rec = limit_experiment(b, weight_or_one(w), o);
        py::list rows;
        for (const auto& row : rec.rows) {
          py::dict d;
          d["k"] = row.k;
          d["delta"] = row.delta;
          d["ratio_lo"] = row.ratio_lo;
          d["ratio_hi"] = row.ratio_hi;
          rows.append(d);
        }
        py::dict r;
        r["rows"] = rows;
        r["extrapolated"] = rec.extrapolated;
        r["uncertainty"] = rec.uncertainty;
        r["reference"] = rec.reference;
        r["monotone"] = rec.monotone;
        return r;
      },
      py::arg("body"), py::arg("weight") = py::none(), py::arg("delta0") = 1e-2,
      py::arg("steps") = 6, py::arg("m") = 2048);
  m.def(
      "equilibrium_directions",
      [](const Body& b, double rho, int samples) {
        const auto eq = equilibrium_directions(b, rho, samples);
        return std::make_tuple(eq.angles, eq.every_position);
      },
      py::arg("body"), py::arg("rho"), py::arg("samples") = 720);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"ulamfloat"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) {
          argv.push_back(a.c_str());
        }
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
