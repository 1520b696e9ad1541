#include "g2x/checks.hpp"

#include <utility>

namespace g2x {

namespace {

CheckResult vacuous(const char* suite) { return {std::string(suite) + ".vacuous", true, "0 cases"}; }

void record(std::vector<CheckResult>& out, const std::string& name, bool pass,
            const std::string& fail_witness, const std::string& pass_witness = "ok") {
  out.push_back({name, pass, pass ? pass_witness : fail_witness});
}

}  // namespace

Mat random_matrix(Rng& rng, std::size_t n, long max_abs, long max_den) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(rng.rational(max_abs, max_den));
  return m;
}

Mat random_gl(Rng& rng, std::size_t n, long max_abs, long max_den) {
  while (true) {
    Mat m = random_matrix(rng, n, max_abs, max_den);
    if (!det(m).is_zero()) return m;
  }
}

Mat random_symplectic6(Rng& rng) {
  Mat s = Mat::identity(6);
  const int factors = static_cast<int>(rng.uniform(2, 4));
  for (int k = 0; k < factors; ++k) {
    Mat g = Mat::identity(6);
    switch (rng.uniform(0, 2)) {
      case 0: {  // upper unipotent: (x, y) -> (x + B y, y), B symmetric
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i; j < 3; ++j) {
            const Scalar v(rng.rational(2, 1));
            g.at(i, 3 + j) = v;
            g.at(j, 3 + i) = v;
          }
        break;
      }
      case 1: {  // lower unipotent: (x, y) -> (x, C x + y), C symmetric
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i; j < 3; ++j) {
            const Scalar v(rng.rational(2, 1));
            g.at(3 + i, j) = v;
            g.at(3 + j, i) = v;
          }
        break;
      }
      default: {  // block diagonal: (x, y) -> (A x, (A^T)^{-1} y)
        const Mat a = random_gl(rng, 3, 2);
        const Mat ainvt = inverse(a).value().transpose();
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            g.at(i, j) = a.at(i, j);
            g.at(3 + i, 3 + j) = ainvt.at(i, j);
          }
        break;
      }
    }
    s = s * g;
  }
  return s;
}

Mat random_sym_traceless3(Rng& rng, long max_abs) {
  Mat m(3, 3);
  m.at(0, 0) = Scalar(rng.rational(max_abs));
  m.at(1, 1) = Scalar(rng.rational(max_abs));
  m.at(2, 2) = -m.at(0, 0) - m.at(1, 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Scalar v(rng.rational(max_abs));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

Mat random_skew(Rng& rng, std::size_t n, long max_abs) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar v(rng.rational(max_abs));
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

UniPoly random_poly(Rng& rng, int max_deg, long max_abs, long max_den, bool field) {
  std::vector<Scalar> coeffs;
  const int deg = static_cast<int>(rng.uniform(0, max_deg));
  for (int k = 0; k <= deg; ++k)
    coeffs.push_back(field ? rng.scalar(max_abs, max_den) : Scalar(rng.rational(max_abs, max_den)));
  return UniPoly(std::move(coeffs));
}

CurveFamily random_admissible_curve(Rng& rng, int df, int dq, bool field) {
  while (true) {
    CurveFamily c;
    c.g_base = 2;
    c.f = random_poly(rng, df, 3, 1, field);
    c.q = random_poly(rng, dq, 3, 1, field);
    try {
      require_admissible(c);
      return c;
    } catch (const AdmissibilityError&) {
      continue;
    }
  }
}

std::vector<CheckResult> run_threeform_suite(std::uint64_t seed, int count) {
  std::vector<CheckResult> out;
  if (count == 0) {
    out.push_back(vacuous("threeform"));
    return out;
  }
  Rng rng(seed);
  const AltForm rho = rho0();
  const SevenFormData ref = seven_data(rho);
  const Mat c0 = bilinear_c(ref);
  const Mat g0 = metric_from_rho(ref);

  record(out, "threeform.kappa_reference", kappa(ref) == kappa_reference(),
         "kappa(rho0) != reference", "kappa(rho0) = 1/4");
  record(out, "threeform.metric_rho0", g0 == c0, "metric(rho0) != c(rho0)");
  record(out, "threeform.stab_dims_fixed",
         stabilizer_dim({rho}).dim == 14 &&
             stabilizer_dim({omega_symp(), omega_norm2()}).dim == 8 &&
             stabilizer_dim({omega_symp()}).dim == 21,
         "fixed stabilizer dimensions off", "14 / 8 / 21");

  bool pull_ok = true, stab_ok = true;
  std::string witness;
  for (int i = 0; i < count && pull_ok && stab_ok; ++i) {
    const Mat a = random_gl(rng, 7);
    const Scalar da = det(a);
    const AltForm pulled = pullback(a, rho);
    const SevenFormData dat = seven_data(pulled);
    const Scalar kap = kappa(dat);
    if (kap.is_zero() || kap != da * da * da * kappa_reference()) {
      pull_ok = false;
      witness = "kappa law failed at sample " + std::to_string(i);
      break;
    }
    const Mat g = metric_from_rho(dat);
    if (g != a.transpose() * g0 * a) {
      pull_ok = false;
      witness = "metric congruence failed at sample " + std::to_string(i);
      break;
    }
    if (stabilizer_dim({pulled}).dim != 14) {
      stab_ok = false;
      witness = "stabilizer dimension drifted at sample " + std::to_string(i);
    }
  }
  record(out, "threeform.pullback_family", pull_ok && stab_ok, witness,
         std::to_string(count) + " pullbacks");

  bool kw_ok = true;
  witness.clear();
  for (int i = 0; i < count && kw_ok; ++i) {
    const Mat a = random_gl(rng, 6);
    const Scalar da = det(a);
    {
      const SixFormData d1{pullback(a, omega_norm1()), omega_symp(), vol6_ref()};
      const Scalar lam = lambda_invariant(d1);
      if (lam != da * da) {
        kw_ok = false;
        witness = "lambda scaling failed (nondegenerate type) at sample " + std::to_string(i);
        break;
      }
      const EigenspacesW eig = eigenspaces_w(d1);
      if (eig.w_plus.size() != 3 || eig.w_minus.size() != 3) {
        kw_ok = false;
        witness = "eigenspace split failed at sample " + std::to_string(i);
        break;
      }
    }
    {
      const SixFormData d2{pullback(a, omega_norm2()), omega_symp(), vol6_ref()};
      const Mat k = k_omega(d2);
      if (!lambda_invariant(d2).is_zero() || nullspace(k).size() != 3) {
        kw_ok = false;
        witness = "nilpotent type lost rank-3 kernel at sample " + std::to_string(i);
        break;
      }
    }
  }
  record(out, "threeform.k_squared_families", kw_ok, witness, std::to_string(count) + " pullbacks");

  bool scale_ok = true;
  {
    const std::vector<Scalar> ts = {Scalar(2), Scalar(-3), Scalar(Rational(5, 7)),
                                    Scalar(1) + Scalar::unit_i()};
    for (const Scalar& t : ts) {
      const Scalar t3 = t * t * t;
      const SevenFormData scaled = seven_data(t3 * rho);
      if (metric_from_rho(scaled) != t * t * g0) scale_ok = false;
    }
  }
  record(out, "threeform.cube_scale_law", scale_ok, "g(t^3 rho) != t^2 g(rho)",
         "t in {2, -3, 5/7, 1+i}");

  bool prim_ok = true;
  for (int i = 0; i < count && prim_ok; ++i) {
    const Mat s = random_symplectic6(rng);
    const AltForm moved = pullback(s, omega_norm2());
    if (!wedge(moved, omega_symp()).terms.empty()) prim_ok = false;
  }
  record(out, "threeform.primitivity_preserved", prim_ok, "omega wedge pullback != 0",
         std::to_string(count) + " symplectic pullbacks");

  bool dec_ok = true;
  witness.clear();
  for (int i = 0; i < count && dec_ok; ++i) {
    const Mat a = random_gl(rng, 7, 2);
    const AltForm pulled = pullback(a, rho);
    const SevenFormData dat = seven_data(pulled);
    std::vector<Scalar> v(7);
    while (true) {
      for (auto& x : v) x = Scalar(rng.rational(3));
      try {
        const RhoSplit split = decompose_rho(dat, v);
        AltForm recon = split.omega7 + Scalar(1) / split.gvv * wedge(split.phi7, split.vflat);
        if (!(recon == pulled) || !interior(v, split.omega7).terms.empty()) {
          dec_ok = false;
          witness = "reconstruction failed at sample " + std::to_string(i);
        }
        if (split.six.omega3.dim != 6 || split.six.symp.dim != 6) {
          dec_ok = false;
          witness = "restricted data has wrong dimension at sample " + std::to_string(i);
        }
        break;
      } catch (const std::domain_error&) {
        continue;  // g-null vector, resample
      }
    }
  }
  record(out, "threeform.decompose_reconstruct", dec_ok, witness,
         std::to_string(count) + " decompositions");
  return out;
}

std::vector<CheckResult> run_liealg_suite(std::uint64_t seed, int count) {
  std::vector<CheckResult> out;
  if (count == 0) {
    out.push_back(vacuous("liealg"));
    return out;
  }
  Rng rng(seed);
  const AltForm rho = rho0();

  bool rep_ok = true;
  for (int i = 0; i < count && rep_ok; ++i) {
    const Mat a = random_matrix(rng, 7, 3);
    const Mat b = random_matrix(rng, 7, 3);
    const AltForm lhs = lie_action(a * b - b * a, rho);
    const AltForm rhs = lie_action(a, lie_action(b, rho)) - lie_action(b, lie_action(a, rho));
    if (!(lhs == rhs)) rep_ok = false;
  }
  record(out, "liealg.bracket_representation", rep_ok, "commutator action mismatch",
         std::to_string(count) + " pairs");

  record(out, "liealg.identity_acts_minus_degree",
         lie_action(Mat::identity(7), rho) == Scalar(-3) * rho, "identity action != -3 on 3-form");

  const StabilizerResult stab = stabilizer_dim({rho});
  bool stab_ok = stab.dim == 14;
  for (const AlgElement& el : stab.basis)
    if (!lie_action(el.mat, rho).terms.empty()) stab_ok = false;
  record(out, "liealg.stabilizer_basis", stab_ok, "basis does not annihilate the form",
         "dim 14, all annihilate");

  bool closed_ok = true;
  for (int i = 0; i < count && closed_ok; ++i) {
    const auto pick = [&]() -> const Mat& {
      return stab.basis[static_cast<std::size_t>(rng.uniform(0, stab.dim - 1))].mat;
    };
    const Mat& a = pick();
    const Mat& b = pick();
    if (!lie_action(a * b - b * a, rho).terms.empty()) closed_ok = false;
  }
  record(out, "liealg.bracket_closure", closed_ok, "bracket left the stabilizer",
         std::to_string(count) + " brackets");

  bool shape_ok = true;
  std::string witness;
  for (int i = 0; i < count && shape_ok; ++i) {
    Mat combo(7, 7);
    for (const AlgElement& el : stab.basis) combo = combo + Scalar(rng.rational(3)) * el.mat;
    AlgElement el(std::move(combo));
    el.stabilizes_threeform = true;
    try {
      const G2Invariants inv = g2_invariants(el);
      const UniPoly p = char_poly(el);
      if (p.coeff(3) != inv.f * inv.f * Scalar(Rational(1, 4))) {
        shape_ok = false;
        witness = "middle coefficient drifted at sample " + std::to_string(i);
      }
    } catch (const std::exception& e) {
      shape_ok = false;
      witness = std::string("shape rejected: ") + e.what();
    }
  }
  record(out, "liealg.char_shape", shape_ok, witness, std::to_string(count) + " elements");

  bool v0_ok = true;
  for (int i = 0; i < count && v0_ok; ++i) {
    AlgElement a(random_skew(rng, 7));
    a.skew_for_metric = true;
    const std::vector<Scalar> v0 = canonical_v0(a, top_form(7));
    bool zero = true;
    for (const Scalar& s : v0)
      if (!s.is_zero()) zero = false;
    if (zero) continue;  // degenerate sample, nothing to check
    for (const Scalar& s : a.mat.apply(v0))
      if (!s.is_zero()) v0_ok = false;
  }
  record(out, "liealg.v0_in_kernel", v0_ok, "a v0 != 0", std::to_string(count) + " skew samples");

  bool fib_ok = true;
  for (int i = 0; i < count && fib_ok; ++i) {
    std::vector<Scalar> a = {Scalar(rng.rational(3)), Scalar(rng.rational(3)),
                             Scalar(rng.rational(3))};
    const Mat m = random_sym_traceless3(rng);
    const Mat phi = fiform_element(a, m);
    if (!lie_action(phi, omega_symp()).terms.empty()) fib_ok = false;
    if (!lie_action(phi, omega_norm2()).terms.empty()) fib_ok = false;
    if (!verify_v0_equals_2a(a, m)) fib_ok = false;
  }
  record(out, "liealg.fiber_model", fib_ok, "fiber model identity failed",
         std::to_string(count) + " (a, M) samples");

  bool quad_ok = true;
  for (int i = 0; i < count && quad_ok; ++i) {
    // One nilpotent 2-block plus eigenvalue pairs (l2, l3) on sp(6).
    const Scalar l2(rng.nonzero_rational(4));
    const Scalar l3(rng.nonzero_rational(4));
    Mat phi(6, 6);
    phi.at(0, 3) = Scalar(1);   // b1 -> a1
    phi.at(1, 1) = l2;          // a2 -> l2 a2
    phi.at(4, 4) = -l2;         // b2 -> -l2 b2
    phi.at(2, 2) = l3;
    phi.at(5, 5) = -l3;
    AlgElement el(phi);
    el.stabilizes_symplectic = true;
    std::vector<Scalar> e(6, Scalar(0));
    e[3] = Scalar::unit_i() * l2 * l3;  // omega(phi e, e) = -l2^2 l3^2 = -a_4
    if (!quadratic_condition_check(el, e).is_zero()) quad_ok = false;
    e[3] = Scalar(2) * e[3];
    if (e[3].is_zero() || quadratic_condition_check(el, e).is_zero()) quad_ok = false;
  }
  record(out, "liealg.quadratic_condition", quad_ok, "degeneration condition misbehaved",
         std::to_string(count) + " sp(6) samples");
  return out;
}

std::vector<CheckResult> run_curves_suite(std::uint64_t seed, int count) {
  std::vector<CheckResult> out;
  if (count == 0) {
    out.push_back(vacuous("curves"));
    return out;
  }
  Rng rng(seed);

  bool dual_ok = true;
  for (int i = 0; i < count && dual_ok; ++i) {
    CurveFamily c;
    c.g_base = 2;
    c.f = random_poly(rng, 4, 3);
    c.q = random_poly(rng, 6, 3);
    const CurveFamily dd = dualize(dualize(c));
    if (!(dd.f == c.f) || !(dd.q == c.q)) dual_ok = false;
    TangentVec t{random_poly(rng, 4, 3), random_poly(rng, 6, 3)};
    const TangentVec tdd = dual_tangent(dualize(c), dual_tangent(c, t));
    if (!(tdd.f_dot == t.f_dot) || !(tdd.q_dot == t.q_dot)) dual_ok = false;
  }
  record(out, "curves.duality_involution", dual_ok, "double dual drifted",
         std::to_string(count) + " families");

  bool disc_ok = certify_discriminant_identity(rng);
  for (int i = 0; i < count && disc_ok; ++i) {
    CurveFamily c;
    c.g_base = 2;
    c.f = random_poly(rng, 4, 3);
    c.q = random_poly(rng, 6, 3);
    try {
      discriminant(c);
    } catch (const std::logic_error&) {
      disc_ok = false;
    }
  }
  record(out, "curves.discriminant_factorizations", disc_ok, "discriminant identity failed",
         "30-point certificate plus " + std::to_string(count) + " families");

  bool w_ok = true;
  std::string witness;
  for (int i = 0; i < count && w_ok; ++i) {
    const CameralPoint p = sample_w_point(rng);
    const EigenTriple t = cameral_eigenvalues(p);
    if (!(t.l1 + t.l2 + t.l3).is_zero()) {
      w_ok = false;
      witness = "trace failed";
      break;
    }
    if (t.l1 * t.l1 + t.l2 * t.l2 + t.l3 * t.l3 != p.f) {
      w_ok = false;
      witness = "sum of squares != f";
      break;
    }
    const Scalar prod = t.l1 * t.l2 * t.l3;
    if (prod * prod != p.q) {
      w_ok = false;
      witness = "product squared != q";
      break;
    }
    for (const Scalar& l : {t.l1, t.l2, t.l3, -t.l1, -t.l2, -t.l3})
      if (!sextic_at(p.f, p.q, l).is_zero()) {
        w_ok = false;
        witness = "an eigenvalue missed the sextic";
      }
    const Scalar z = project_to_c(p.x, p.f);
    if (z * z != p.q) {
      w_ok = false;
      witness = "projection z^2 != q";
    }
  }
  record(out, "curves.w_point_identities", w_ok, witness, std::to_string(count) + " points");

  bool d6_ok = true;
  {
    const std::vector<DihedralElement> all = d6_all();
    for (std::size_t i = 0; i < all.size() && d6_ok; ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (all[i].mat == all[j].mat) d6_ok = false;
    if (!(d6_element("rrrrrr").mat == Mat::identity(2))) d6_ok = false;
    if (!(d6_element("rrr").mat == Scalar(-1) * Mat::identity(2))) d6_ok = false;
    if (!(d6_element("ss").mat == Mat::identity(2))) d6_ok = false;
    if (!(d6_element("srs").mat == d6_element("R").mat)) d6_ok = false;
    for (int i = 0; i < count; ++i) {
      std::string word;
      Mat prod = Mat::identity(2);
      for (int k = 0; k < 6; ++k) {
        const char gens[] = {'r', 's', 'R', 'S'};
        const char ch = gens[rng.uniform(0, 3)];
        word.push_back(ch);
        Mat gm = (ch == 'r')   ? d6_from_normal_form(1, 0).mat
                 : (ch == 'R') ? d6_from_normal_form(5, 0).mat
                               : d6_from_normal_form(0, 1).mat;
        prod = prod * gm;
      }
      if (!(d6_element(word).mat == prod)) d6_ok = false;
    }
  }
  record(out, "curves.dihedral_group", d6_ok, "group law failed",
         "12 elements, relations, " + std::to_string(count) + " words");

  bool quot_ok = certify_quotient_substitution(rng);
  for (int i = 0; i < count && quot_ok; ++i) {
    const CameralPoint p = sample_w_point(rng);
    if (!quotient_equation(QuotientKind::ByS, p.f, p.q, p.x).is_zero()) quot_ok = false;
    if (!quotient_equation(QuotientKind::ByR3S, p.f, p.q, p.y).is_zero()) quot_ok = false;
  }
  record(out, "curves.quotient_equations", quot_ok, "quotient equation failed",
         "30-point certificate plus " + std::to_string(count) + " points");

  bool num_ok = true;
  for (int g = 2; g < 2 + std::min(count, 6) && num_ok; ++g)
    for (int m = 1; m <= 4; ++m)
      if (!numerology(g, m).chain_ok) num_ok = false;
  {
    const NumerologyReport rep = numerology(2, 3);
    if (rep.g_s_g2 != 37 || rep.g_c != 9 || rep.g_w != 85 || rep.prym_dim_g2 != 14 ||
        rep.g_sbar != 16 || rep.prym_dim_sp != 24 || rep.order_covering != 1024)
      num_ok = false;
  }
  record(out, "curves.numerology", num_ok, "integer invariants off", "g = 2, m = 3 pinned");
  return out;
}

std::vector<CheckResult> run_cubic_suite(std::uint64_t seed, int count) {
  std::vector<CheckResult> out;
  if (count == 0) {
    out.push_back(vacuous("cubic"));
    return out;
  }
  Rng rng(seed);

  bool tri_ok = true;
  for (int i = 0; i < count && tri_ok; ++i) {
    const CurveFamily c = random_admissible_curve(rng, 2, 3);
    const TangentVec t1{random_poly(rng, 2, 2), random_poly(rng, 3, 2)};
    const TangentVec t2{random_poly(rng, 2, 2), random_poly(rng, 3, 2)};
    const TangentVec t3{random_poly(rng, 2, 2), random_poly(rng, 3, 2)};
    const Scalar base = cubic_form(c, t1, t2, t3);
    if (base != cubic_form(c, t2, t1, t3) || base != cubic_form(c, t3, t2, t1) ||
        base != cubic_form(c, t1, t3, t2)) {
      tri_ok = false;
      break;
    }
    const Scalar al(rng.rational(3)), be(rng.rational(3));
    TangentVec mix{UniPoly::constant(al) * t1.f_dot + UniPoly::constant(be) * t2.f_dot,
                   UniPoly::constant(al) * t1.q_dot + UniPoly::constant(be) * t2.q_dot};
    if (cubic_form(c, mix, t2, t3) != al * base + be * cubic_form(c, t2, t2, t3)) tri_ok = false;
  }
  record(out, "cubic.trilinear_symmetric", tri_ok, "multilinearity or symmetry failed",
         std::to_string(count) + " triples");

  record(out, "cubic.cos6_identity", verify_cos6_identity(), "Chebyshev identity failed");
  record(out, "cubic.branch_weight_identity", verify_bvw_identity(rng),
         "branch weight identity failed", "40 samples");

  bool inv_ok = true;
  for (int i = 0; i < count && inv_ok; ++i) {
    const CurveFamily c = random_admissible_curve(rng, 4, 6);
    const TangentVec t1{random_poly(rng, 4, 2), random_poly(rng, 6, 2)};
    const TangentVec t2{random_poly(rng, 4, 2), random_poly(rng, 6, 2)};
    const TangentVec t3{random_poly(rng, 4, 2), random_poly(rng, 6, 2)};
    if (!verify_involution_invariance(c, t1, t2, t3)) inv_ok = false;
  }
  record(out, "cubic.involution_invariance", inv_ok, "dual evaluation disagreed",
         std::to_string(count) + " samples");

  bool oracle_ok = true;
  for (int i = 0; i < count && oracle_ok; ++i) {
    const CurveFamily c = random_admissible_curve(rng, 2, 4);
    const TangentVec t1{random_poly(rng, 2, 2), random_poly(rng, 4, 2)};
    const TangentVec t2{random_poly(rng, 2, 2), random_poly(rng, 4, 2)};
    const TangentVec t3{random_poly(rng, 2, 2), random_poly(rng, 4, 2)};
    const Scalar exact = cubic_form(c, t1, t2, t3);
    const std::complex<double> approx = cubic_form_numeric(c, t1, t2, t3);
    const std::complex<double> ex = exact.to_complex();
    const double scale = std::max(1.0, std::abs(ex));
    if (std::abs(ex - approx) > 1e-9 * scale) oracle_ok = false;
  }
  record(out, "cubic.float_oracle", oracle_ok, "numeric oracle disagreed beyond 1e-9",
         std::to_string(count) + " samples");

  {
    CurveFamily c;
    c.g_base = 2;
    c.f = UniPoly::constant(Scalar(3));
    c.q = UniPoly::x();
    const TangentVec u{UniPoly(), UniPoly::constant(Scalar(1))};
    const TangentVec w{UniPoly(), UniPoly::x()};
    const bool ex_ok = cubic_form(c, u, u, u).is_zero() &&
                       cubic_form(c, u, u, w) == Scalar(Rational(-1, 9));
    record(out, "cubic.pinned_examples", ex_ok, "pinned evaluations drifted",
           "c(u,u,u) = 0, c(u,u,w) = -1/9");
  }
  return out;
}

}  // namespace g2x
