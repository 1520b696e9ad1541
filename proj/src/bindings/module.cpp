// Python bindings. Structured values cross the boundary as JSON text in the
// same formats the CLI consumes and emits; the g2exact package wraps these
// with json.loads/dumps so Python callers see plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g2x/checks.hpp"
#include "g2x/cubic.hpp"
#include "g2x/curves.hpp"
#include "g2x/liealg.hpp"
#include "g2x/serial.hpp"
#include "g2x/threeform.hpp"

namespace py = pybind11;
using namespace g2x;

namespace {

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::string kappa_json(const std::string& form) {
  return scalar_to_json(kappa(seven_data(altform_from_json(parse(form, "form"))))).dump();
}

std::string metric_json(const std::string& form) {
  return mat_to_json(metric_from_rho(seven_data(altform_from_json(parse(form, "form"))))).dump();
}

int stabilizer_dim_json(const std::string& forms) {
  Json j = parse(forms, "forms");
  if (!j.is_array() || j.empty()) throw ParseError("forms: expected a nonempty array");
  std::vector<AltForm> fs;
  for (const Json& jf : j) fs.push_back(altform_from_json(jf));
  return stabilizer_dim(fs).dim;
}

std::string lambda_json(const std::string& form) {
  return scalar_to_json(lambda_invariant(six_data(altform_from_json(parse(form, "form"))))).dump();
}

std::string char_poly_json(const std::string& matrix) {
  AlgElement el(mat_from_json(parse(matrix, "matrix")));
  return unipoly_to_json(char_poly(el)).dump();
}

py::tuple g2_invariants_json(const std::string& matrix) {
  AlgElement el(mat_from_json(parse(matrix, "matrix")));
  el.stabilizes_threeform = true;
  G2Invariants inv = g2_invariants(el);
  return py::make_tuple(scalar_to_json(inv.f).dump(), scalar_to_json(inv.q).dump());
}

std::string dualize_json(const std::string& curve) {
  return curve_to_json(dualize(curve_from_json(parse(curve, "curve")))).dump();
}

std::string discriminant_json(const std::string& curve) {
  return unipoly_to_json(discriminant(curve_from_json(parse(curve, "curve")))).dump();
}

std::string cubic_form_json(const std::string& curve, const std::string& t1,
                            const std::string& t2, const std::string& t3) {
  CurveFamily c = curve_from_json(parse(curve, "curve"));
  return scalar_to_json(cubic_form(c, tangent_from_json(parse(t1, "tangent")),
                                   tangent_from_json(parse(t2, "tangent")),
                                   tangent_from_json(parse(t3, "tangent"))))
      .dump();
}

py::dict numerology_py(int g, int m) {
  NumerologyReport n = numerology(g, m);
  py::dict d;
  d["g"] = n.g;
  d["m"] = n.m;
  d["g_s_gl"] = n.g_s_gl.str();
  d["g_s_g2"] = n.g_s_g2.str();
  d["g_c"] = n.g_c.str();
  d["g_w"] = n.g_w.str();
  d["g_sbar"] = n.g_sbar.str();
  d["prym_dim_sp"] = n.prym_dim_sp.str();
  d["prym_dim_g2"] = n.prym_dim_g2.str();
  d["base_dim_g2"] = n.base_dim_g2.str();
  d["order_sections"] = n.order_sections.str();
  d["order_components"] = n.order_components.str();
  d["order_covering"] = n.order_covering.str();
  d["order_p2"] = n.order_p2.str();
  d["chain_value"] = n.chain_value.str();
  d["chain_ok"] = n.chain_ok;
  return d;
}

py::list run_suite_py(const std::string& suite, std::uint64_t seed, int count) {
  std::vector<CheckResult> rs;
  if (suite == "all" || suite == "threeform") {
    auto r = run_threeform_suite(seed, count);
    rs.insert(rs.end(), r.begin(), r.end());
  }
  if (suite == "all" || suite == "liealg") {
    auto r = run_liealg_suite(seed, count);
    rs.insert(rs.end(), r.begin(), r.end());
  }
  if (suite == "all" || suite == "curves") {
    auto r = run_curves_suite(seed, count);
    rs.insert(rs.end(), r.begin(), r.end());
  }
  if (suite == "all" || suite == "cubic") {
    auto r = run_cubic_suite(seed, count);
    rs.insert(rs.end(), r.begin(), r.end());
  }
  if (rs.empty()) throw ParseError("suite: expected all, threeform, liealg, curves, or cubic");
  py::list out;
  for (const CheckResult& r : rs) out.append(py::make_tuple(r.name, r.pass, r.witness));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact invariants of stable three-forms, spectral curve duality, and the cubic form";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedOrbitError>(m, "UnsupportedOrbitError", PyExc_ArithmeticError);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ArithmeticError);

  m.def("rho0_json", [] { return altform_to_json(rho0()).dump(); },
        "reference stable three-form in dimension 7, as JSON text");
  m.def("omega_norm1_json", [] { return altform_to_json(omega_norm1()).dump(); });
  m.def("omega_norm2_json", [] { return altform_to_json(omega_norm2()).dump(); });
  m.def("omega_symp_json", [] { return altform_to_json(omega_symp()).dump(); });

  m.def("kappa", &kappa_json, py::arg("form"),
        "kappa of a 3-form on a 7-space (JSON in, scalar JSON out)");
  m.def("metric", &metric_json, py::arg("form"));
  m.def("stabilizer_dim", &stabilizer_dim_json, py::arg("forms"),
        "dimension of the common annihilator in gl(n) of a JSON list of forms");
  m.def("lambda_invariant", &lambda_json, py::arg("form"));
  m.def("char_poly", &char_poly_json, py::arg("matrix"));
  m.def("g2_invariants", &g2_invariants_json, py::arg("matrix"),
        "(f, q) scalars read off the degree-7 characteristic polynomial");
  m.def("dualize", &dualize_json, py::arg("curve"));
  m.def("discriminant", &discriminant_json, py::arg("curve"));
  m.def("cubic_form", &cubic_form_json, py::arg("curve"), py::arg("t1"), py::arg("t2"),
        py::arg("t3"));
  m.def("numerology", &numerology_py, py::arg("g"), py::arg("m"),
        "genus, dimension, and torsion-order bookkeeping as exact decimal strings");
  m.def("run_suite", &run_suite_py, py::arg("suite"), py::arg("seed") = 12345,
        py::arg("count") = 25, "run a property suite; returns (name, pass, witness) tuples");
}
