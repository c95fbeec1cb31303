#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chordgeom/asymptotics.hpp"
#include "chordgeom/chord.hpp"
#include "chordgeom/curve.hpp"
#include "chordgeom/errors.hpp"
#include "chordgeom/report.hpp"
#include "chordgeom/section.hpp"

namespace py = pybind11;
using namespace chordgeom;

namespace {

CurveKind kind_from_name(const std::string& name) {
  if (name == "parabola") return CurveKind::parabola;
  if (name == "circle") return CurveKind::circle;
  if (name == "ellipse") return CurveKind::ellipse;
  if (name == "catenary") return CurveKind::catenary;
  if (name == "exp" || name == "exponential") return CurveKind::exponential;
  if (name == "poly" || name == "polynomial") return CurveKind::polynomial;
  throw py::value_error("unknown curve kind '" + name + "'");
}

py::tuple pt(Vec2 v) { return py::make_tuple(v.x, v.y); }

py::dict row_dict(const SweepRow& r) {
  py::dict d;
  d["curve"] = r.curve;
  d["xp"] = r.xp;
  d["h"] = r.h;
  d["L"] = r.L;
  d["S"] = r.S;
  d["T"] = r.T;
  d["g"] = r.g;
  d["j"] = r.j;
  d["k"] = r.k;
  d["delta"] = r.delta;
  d["alpha"] = r.alpha;
  d["S_over_T"] = r.S_over_T;
  d["g_over_h"] = r.g_over_h;
  d["j_over_h"] = r.j_over_h;
  d["k_over_h"] = r.k_over_h;
  return d;
}

py::dict limit_dict(const LimitEstimate& e, double target) {
  py::dict d;
  d["value"] = e.value;
  d["err"] = e.err;
  d["target"] = target;
  d["samples"] = e.samples;
  return d;
}

py::dict fit_dict(const PowerLawFit& f) {
  py::dict d;
  d["lambda"] = f.lambda;
  d["mu"] = f.mu;
  d["residual"] = f.residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chord, tangent-triangle and section-centroid analysis of convex plane curves";

  py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_RuntimeError);

  py::class_<CurveSpec>(m, "CurveSpec")
      .def_property_readonly("kind", [](const CurveSpec& c) { return std::string(to_string(c.kind())); })
      .def_property_readonly("params", &CurveSpec::params)
      .def_property_readonly("domain",
                             [](const CurveSpec& c) { return py::make_tuple(c.domain().lo, c.domain().hi); })
      .def_property_readonly("label", &CurveSpec::label)
      .def("f", &CurveSpec::f)
      .def("df", &CurveSpec::df)
      .def("d2f", &CurveSpec::d2f)
      .def("__repr__", [](const CurveSpec& c) { return "<CurveSpec " + c.label() + ">"; });

  py::class_<ProbeFrame>(m, "ProbeFrame")
      .def_property_readonly("xp", [](const ProbeFrame& f) { return f.xp; })
      .def_property_readonly("point", [](const ProbeFrame& f) { return pt(f.point); })
      .def_property_readonly("tangent", [](const ProbeFrame& f) { return pt(f.tangent); })
      .def_property_readonly("normal", [](const ProbeFrame& f) { return pt(f.normal); })
      .def_property_readonly("theta", [](const ProbeFrame& f) { return f.theta; })
      .def("to_frame", [](const ProbeFrame& f, double x, double y) { return pt(f.to_frame({x, y})); })
      .def("from_frame", [](const ProbeFrame& f, double u, double v) { return pt(f.from_frame({u, v})); });

  py::class_<ChordSolution>(m, "ChordSolution")
      .def_readonly("h", &ChordSolution::h)
      .def_readonly("xa", &ChordSolution::xa)
      .def_readonly("xb", &ChordSolution::xb)
      .def_readonly("s", &ChordSolution::s)
      .def_readonly("t", &ChordSolution::t)
      .def_readonly("length", &ChordSolution::length)
      .def_readonly("residual", &ChordSolution::residual)
      .def_property_readonly("a", [](const ChordSolution& c) { return pt(c.a); })
      .def_property_readonly("b", [](const ChordSolution& c) { return pt(c.b); });

  m.def("make_curve",
        [](const std::string& kind, std::vector<double> params) {
          return make_curve(kind_from_name(kind), std::move(params));
        },
        py::arg("kind"), py::arg("params") = std::vector<double>{});
  m.def("parse_curve_spec", [](const std::string& text) { return parse_curve_spec(text); });
  m.def("curvature_at", &curvature_at);
  m.def("canonical_quadratic_coefficient", &canonical_quadratic_coefficient);
  m.def("probe_frame", &probe_frame);
  m.def("h_max", [](const CurveSpec& c, double xp) { return h_max(c, probe_frame(c, xp)); });
  m.def("chord_endpoints",
        [](const CurveSpec& c, double xp, double h) { return chord_endpoints(c, probe_frame(c, xp), h); },
        py::arg("curve"), py::arg("xp"), py::arg("h"));

  m.def("probe",
        [](const CurveSpec& c, double xp, double h) {
          const ProbeFrame frame = probe_frame(c, xp);
          const ProbeMeasurement meas = measure(c, frame, h);
          py::dict d = row_dict(make_row(c.label(), xp, h, meas));
          d["Q"] = pt(meas.triangle.apex.world);
          d["y0"] = meas.triangle.apex.local.y;
          d["A1"] = pt(meas.triangle.feet.a1);
          d["B1"] = pt(meas.triangle.feet.b1);
          d["G"] = pt(meas.section.centroid);
          d["d"] = meas.section.d;
          return d;
        },
        py::arg("curve"), py::arg("xp"), py::arg("h"));

  m.def("sweep",
        [](const CurveSpec& c, std::vector<double> xps, double h0, double ratio, int n) {
          py::list rows;
          for (const auto& r : sweep(c, xps, h0, ratio, n)) rows.append(row_dict(r));
          return rows;
        },
        py::arg("curve"), py::arg("xps"), py::arg("h0") = 0.0, py::arg("ratio") = 0.5, py::arg("n") = 8);

  m.def("estimate_limit", [](const std::vector<Sample>& samples) {
    const auto e = estimate_limit(samples);
    return py::make_tuple(e.value, e.err);
  });
  m.def("power_law_fit", [](const std::vector<Sample>& samples) { return fit_dict(power_law_fit(samples)); });

  m.def("limit_suite",
        [](const CurveSpec& c, double xp, double h0, double ratio, int n) {
          const LimitSuite s = limit_suite(c, xp, LimitConfig{h0, ratio, n});
          py::dict d;
          d["kappa"] = s.kappa;
          d["j_over_h"] = limit_dict(s.j_over_h, s.target_j);
          d["k_over_h"] = limit_dict(s.k_over_h, s.target_k);
          d["L_over_sqrt_h"] = limit_dict(s.length_over_sqrt_h, s.target_length);
          d["alpha"] = limit_dict(s.alpha, s.target_alpha);
          return d;
        },
        py::arg("curve"), py::arg("xp"), py::arg("h0") = 1.0 / 64.0, py::arg("ratio") = 0.5,
        py::arg("n") = 8);

  m.def("classify_parabola",
        [](const CurveSpec& c, std::vector<double> probes, double tol_mu, double tol_lam, double tol_res,
           double tol_ratio) {
          DetectConfig cfg;
          cfg.tol_mu = tol_mu;
          cfg.tol_lam = tol_lam;
          cfg.tol_res = tol_res;
          cfg.tol_ratio = tol_ratio;
          const Verdict v = classify_parabola(c, probes, cfg);
          py::list outcomes;
          for (const auto& p : v.probes) {
            py::dict d;
            d["xp"] = p.xp;
            d["pass"] = p.pass();
            d["inconclusive"] = p.inconclusive;
            d["note"] = p.note;
            d["h"] = p.grid.h;
            d["j_fit"] = fit_dict(p.j_power_law.fit);
            d["k_fit"] = fit_dict(p.k_power_law.fit);
            d["S_over_T"] = p.archimedes.values;
            d["g_over_h"] = p.g_ratio.values;
            outcomes.append(d);
          }
          py::dict out;
          out["classification"] = std::string(to_string(v.classification));
          out["probes"] = outcomes;
          out["flags"] = v.flags;
          return out;
        },
        py::arg("curve"), py::arg("probes"), py::arg("tol_mu") = 1e-3, py::arg("tol_lam") = 1e-3,
        py::arg("tol_res") = 1e-6, py::arg("tol_ratio") = 1e-6);

  m.def("verify_identities", [](const CurveSpec& c, std::vector<double> xps) {
    py::list out;
    for (const auto& r : verify_identities(c, xps)) {
      py::dict d;
      d["test"] = r.name;
      d["group"] = r.group;
      d["max_deviation"] = r.max_deviation;
      d["tolerance"] = r.tolerance;
      d["pass"] = r.pass;
      out.append(d);
    }
    return out;
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
