#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2x/checks.hpp"
#include "g2x/serial.hpp"

namespace g2x {
namespace {

Json load_input(const std::string& path) {
  if (path.empty()) throw ParseError("missing --input file");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

/// Accumulates the run report. Byte-identical output for identical inputs:
/// insertion-ordered keys, no floats, no timestamps.
struct Report {
  Json doc;
  bool failed = false;

  Report(const std::string& command, const Json& digest_source) {
    doc["command"] = command;
    doc["inputs_digest"] = digest(digest_source);
    doc["results"] = Json::object();
    doc["checks"] = Json::array();
  }

  Json& results() { return doc["results"]; }

  void check(const std::string& name, bool pass, const std::string& witness) {
    Json c;
    c["name"] = name;
    c["status"] = pass ? "pass" : "fail";
    c["witness"] = witness;
    doc["checks"].push_back(std::move(c));
    if (!pass) failed = true;
  }

  void add(const std::vector<CheckResult>& rs) {
    for (const CheckResult& r : rs) check(r.name, r.pass, r.witness);
  }
};

void emit(const Report& rep, const std::string& mode) {
  if (mode == "text") {
    std::cout << "command: " << rep.doc["command"].get<std::string>() << "\n";
    std::cout << "inputs_digest: " << rep.doc["inputs_digest"].get<std::string>() << "\n";
    for (const auto& [k, v] : rep.doc["results"].items()) std::cout << k << ": " << v.dump() << "\n";
    for (const Json& c : rep.doc["checks"])
      std::cout << "[" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>()
                << " (" << c["witness"].get<std::string>() << ")\n";
  } else {
    std::cout << rep.doc.dump(2) << "\n";
  }
}

int finish(Report& rep, const std::string& mode) {
  emit(rep, mode);
  return rep.failed ? 1 : 0;
}

int cmd_invariants(const std::string& input_path, const std::string& mode) {
  const Json input = load_input(input_path);
  Report rep("invariants", input);
  const AltForm form = altform_from_json(need(input, "form"));
  if (form.degree != 3 || (form.dim != 6 && form.dim != 7))
    throw ParseError("invariants: expected a 3-form on a 6- or 7-dimensional space");
  if (form.dim == 7) {
    const SevenFormData dat = seven_data(form);
    const Scalar kap = kappa(dat);
    const Mat g = metric_from_rho(dat);
    const StabilizerResult stab = stabilizer_dim({form});
    rep.results()["kappa"] = scalar_to_json(kap);
    rep.results()["metric"] = mat_to_json(g);
    rep.results()["stabilizer_dim"] = stab.dim;
    rep.check("kappa_nonzero", !kap.is_zero(), "metric normalization is defined");
    rep.check("metric_symmetric", g.is_symmetric(), "g = g^T");
  } else {
    const SixFormData dat = six_data(form);
    const Mat k = k_omega(dat);
    rep.results()["k_matrix"] = mat_to_json(k);
    try {
      const Scalar lam = lambda_invariant(dat);
      rep.results()["lambda"] = scalar_to_json(lam);
      rep.check("k_squared_scalar", true, "K^2 = lambda id");
      if (lam.is_zero()) {
        rep.results()["kernel_dim"] = static_cast<int>(nullspace(k).size());
      } else {
        try {
          const EigenspacesW eig = eigenspaces_w(dat);
          rep.results()["sqrt_lambda"] = scalar_to_json(eig.sqrt_lambda);
          rep.results()["eigenspace_dims"] =
              Json::array({eig.w_plus.size(), eig.w_minus.size()});
        } catch (const UnsupportedOrbitError& e) {
          rep.results()["eigenspaces"] = e.what();
        }
      }
    } catch (const std::logic_error& e) {
      rep.check("k_squared_scalar", false, e.what());
    }
  }
  return finish(rep, mode);
}

int cmd_stabilizer(const std::string& input_path, const std::string& mode) {
  const Json input = load_input(input_path);
  Report rep("stabilizer", input);
  const Json& jforms = need(input, "forms");
  if (!jforms.is_array() || jforms.empty())
    throw ParseError("stabilizer: \"forms\" must be a nonempty array");
  std::vector<AltForm> forms;
  for (const Json& jf : jforms) forms.push_back(altform_from_json(jf));
  const StabilizerResult stab = stabilizer_dim(forms);
  rep.results()["dim"] = stab.dim;
  Json basis = Json::array();
  bool annihilates = true;
  for (const AlgElement& el : stab.basis) {
    basis.push_back(mat_to_json(el.mat));
    for (const AltForm& f : forms)
      if (!lie_action(el.mat, f).terms.empty()) annihilates = false;
  }
  rep.results()["basis"] = std::move(basis);
  rep.check("basis_annihilates", annihilates, "every basis element kills every form");
  return finish(rep, mode);
}

int cmd_charpoly(const std::string& input_path, const std::string& mode) {
  const Json input = load_input(input_path);
  Report rep("charpoly", input);
  AlgElement el(mat_from_json(need(input, "matrix")));
  if (el.mat.rows != el.mat.cols) throw ParseError("charpoly: matrix must be square");
  if (input.contains("tags")) {
    const Json& tags = input.at("tags");
    el.stabilizes_threeform = tags.value("threeform", false);
    el.stabilizes_symplectic = tags.value("symplectic", false);
    el.skew_for_metric = tags.value("skew", false);
  }
  const UniPoly p = char_poly(el);
  rep.results()["charpoly"] = unipoly_to_json(p);
  try {
    const G2Invariants inv = g2_invariants(el);
    rep.results()["g2_shape"] = true;
    rep.results()["f"] = scalar_to_json(inv.f);
    rep.results()["q"] = scalar_to_json(inv.q);
  } catch (const std::domain_error& e) {
    rep.results()["g2_shape"] = false;
    rep.results()["g2_shape_note"] = e.what();
  }
  rep.check("charpoly_monic", p.degree() >= 0 && p.lead() == Scalar(1), "leading coefficient 1");
  return finish(rep, mode);
}

int cmd_curve(const std::string& input_path, const std::string& mode) {
  const Json input = load_input(input_path);
  Report rep("curve", input);
  const CurveFamily c = curve_from_json(input);
  int m = 3;
  if (input.contains("m")) {
    if (!input.at("m").is_number_integer()) throw ParseError("curve: m must be an integer");
    m = input.at("m").get<int>();
    if (m < 1) throw ParseError("curve: m must be at least 1");
  }
  rep.results()["dual_q"] = unipoly_to_json(dual_q(c));
  bool disc_ok = true;
  std::string disc_witness = "both factorizations verified";
  try {
    rep.results()["discriminant"] = unipoly_to_json(discriminant(c));
  } catch (const std::logic_error& e) {
    disc_ok = false;
    disc_witness = e.what();
  }
  rep.check("discriminant_factorizations", disc_ok, disc_witness);

  try {
    require_admissible(c);
    rep.results()["smooth"] = true;
  } catch (const AdmissibilityError& e) {
    rep.results()["smooth"] = false;
    Json detail;
    detail["reason"] = e.what();
    detail["witness"] = unipoly_to_json(e.witness);
    rep.results()["smooth_witness"] = std::move(detail);
  }

  const NumerologyReport num = numerology(c.g_base, m);
  Json jn;
  jn["g"] = num.g;
  jn["m"] = num.m;
  jn["g_s_gl"] = num.g_s_gl.str();
  jn["g_s_g2"] = num.g_s_g2.str();
  jn["g_c"] = num.g_c.str();
  jn["g_w"] = num.g_w.str();
  jn["g_sbar"] = num.g_sbar.str();
  jn["prym_dim_sp"] = num.prym_dim_sp.str();
  jn["prym_dim_g2"] = num.prym_dim_g2.str();
  jn["base_dim_g2"] = num.base_dim_g2.str();
  jn["order_sections"] = num.order_sections.str();
  jn["order_components"] = num.order_components.str();
  jn["order_covering"] = num.order_covering.str();
  jn["order_p2"] = num.order_p2.str();
  jn["chain_value"] = num.chain_value.str();
  rep.results()["numerology"] = std::move(jn);
  rep.check("numerology_chain", num.chain_ok, "genus chain equals 14(g-1)");

  // Degree bounds are metadata, not requirements: record them.
  Json bounds;
  bounds["deg_f_max"] = 4 * (c.g_base - 1);
  bounds["deg_q_max"] = 12 * (c.g_base - 1);
  bounds["deg_f"] = c.f.degree();
  bounds["deg_q"] = c.q.degree();
  rep.results()["degree_bounds"] = std::move(bounds);
  return finish(rep, mode);
}

int cmd_cubic(const std::string& input_path, const std::string& mode, std::uint64_t seed) {
  const Json input = load_input(input_path);
  Report rep("cubic", input);
  const CurveFamily c = curve_from_json(need(input, "curve"));
  const Json& jt = need(input, "tangents");
  if (!jt.is_array() || jt.size() != 3)
    throw ParseError("cubic: \"tangents\" must be an array of three tangent vectors");
  const TangentVec t1 = tangent_from_json(jt[0]);
  const TangentVec t2 = tangent_from_json(jt[1]);
  const TangentVec t3 = tangent_from_json(jt[2]);

  const Scalar value = cubic_form(c, t1, t2, t3);
  const CurveFamily dual = dualize(c);
  const Scalar dual_value =
      cubic_form(dual, dual_tangent(c, t1), dual_tangent(c, t2), dual_tangent(c, t3));
  rep.results()["value"] = scalar_to_json(value);
  rep.results()["dual_value"] = scalar_to_json(dual_value);
  rep.results()["invariant"] = (value == dual_value);
  Rng rng(seed);
  const bool cos6 = verify_cos6_identity();
  const bool bvw = verify_bvw_identity(rng);
  Json certs;
  certs["cos6"] = cos6;
  certs["bvw"] = bvw;
  rep.results()["certificates"] = std::move(certs);
  rep.check("involution_invariance", value == dual_value, "value equals dual value");
  rep.check("cos6_identity", cos6, "Chebyshev expansion matches");
  rep.check("branch_weight_identity", bvw, "40 random samples");
  return finish(rep, mode);
}

int cmd_check(const std::string& suite, std::uint64_t seed, int count, const std::string& mode) {
  Json digest_source;
  digest_source["suite"] = suite;
  digest_source["seed"] = seed;
  digest_source["count"] = count;
  Report rep("check", digest_source);
  rep.results()["suite"] = suite;
  rep.results()["seed"] = seed;
  rep.results()["count"] = count;
  if (suite == "all" || suite == "threeform") rep.add(run_threeform_suite(seed, count));
  if (suite == "all" || suite == "liealg") rep.add(run_liealg_suite(seed, count));
  if (suite == "all" || suite == "curves") rep.add(run_curves_suite(seed, count));
  if (suite == "all" || suite == "cubic") rep.add(run_cubic_suite(seed, count));
  return finish(rep, mode);
}

int emit_error(const std::string& kind, const std::string& message, const std::string& mode,
               const Json& extra = Json()) {
  if (mode == "text") {
    std::cout << "error (" << kind << "): " << message << "\n";
  } else {
    Json err;
    err["error"] = Json::object();
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    if (!extra.is_null()) err["error"]["witness"] = extra;
    std::cout << err.dump(2) << "\n";
  }
  return 2;
}

}  // namespace
}  // namespace g2x

int main(int argc, char** argv) {
  using namespace g2x;
  CLI::App app{"exact invariants of stable three-forms, spectral curve duality, and the"
               " associated cubic form"};
  app.require_subcommand(1);

  std::string input_path, output_mode = "json", suite = "all";
  std::uint64_t seed = 12345;
  int count = 25;

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", input_path, "JSON input file")->required();
    sub->add_option("--output", output_mode, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "random seed for sampled certificates");
    sub->add_option("--count", count, "sample count for sampled certificates");
  };

  CLI::App* c_inv = app.add_subcommand("invariants", "kappa, metric, and stabilizer of a 3-form");
  add_common(c_inv, true);
  CLI::App* c_stab = app.add_subcommand("stabilizer", "common annihilator of a list of forms");
  add_common(c_stab, true);
  CLI::App* c_char = app.add_subcommand("charpoly", "characteristic polynomial and its shape");
  add_common(c_char, true);
  CLI::App* c_curve = app.add_subcommand("curve", "duality, discriminant, and numerology");
  add_common(c_curve, true);
  CLI::App* c_cubic = app.add_subcommand("cubic", "the cubic form and its certificates");
  add_common(c_cubic, true);
  CLI::App* c_check = app.add_subcommand("check", "run property suites");
  c_check->add_option("suite", suite, "all, threeform, liealg, curves, or cubic")
      ->check(CLI::IsMember({"all", "threeform", "liealg", "curves", "cubic"}));
  add_common(c_check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), output_mode);
  }

  try {
    if (*c_inv) return cmd_invariants(input_path, output_mode);
    if (*c_stab) return cmd_stabilizer(input_path, output_mode);
    if (*c_char) return cmd_charpoly(input_path, output_mode);
    if (*c_curve) return cmd_curve(input_path, output_mode);
    if (*c_cubic) return cmd_cubic(input_path, output_mode, seed);
    if (*c_check) return cmd_check(suite, seed, count, output_mode);
  } catch (const ParseError& e) {
    return emit_error("input", e.what(), output_mode);
  } catch (const AdmissibilityError& e) {
    return emit_error("domain", e.what(), output_mode, unipoly_to_json(e.witness));
  } catch (const UnsupportedOrbitError& e) {
    return emit_error("domain", e.what(), output_mode);
  } catch (const std::invalid_argument& e) {
    return emit_error("domain", e.what(), output_mode);
  } catch (const std::domain_error& e) {
    return emit_error("domain", e.what(), output_mode);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), output_mode);
  }
  return emit_error("usage", "no subcommand selected", output_mode);
}
