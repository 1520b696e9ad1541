#include "g2x/threeform.hpp"

namespace g2x {

namespace {

std::vector<Scalar> basis_vector(int dim, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(dim), Scalar(0));
  v[static_cast<std::size_t>(k)] = Scalar(1);
  return v;
}

}  // namespace

AltForm rho0() {
  AltForm f(7, 3);
  f.add_term(0b0000111u, Scalar(1));  // e123
  f.add_term(0b0111000u, Scalar(1));  // e456
  f.add_term(0b1001001u, Scalar(1));  // e147
  f.add_term(0b1010010u, Scalar(1));  // e257
  f.add_term(0b1100100u, Scalar(1));  // e367
  return f;
}

AltForm vol7_ref() { return Scalar(6) * top_form(7); }

AltForm omega_norm1() {
  AltForm f(6, 3);
  f.add_term(0b000111u, Scalar(1));  // e123
  f.add_term(0b111000u, Scalar(1));  // e456
  return f;
}

AltForm omega_norm2() {
  // xi1^eta2^eta3 + xi2^eta3^eta1 + xi3^eta1^eta2 in the x,y basis order
  AltForm f(6, 3);
  f.add_term(0b110001u, Scalar(1));   // e156
  f.add_term(0b101010u, Scalar(-1));  // e246 carries the sign of xi2^eta3^eta1
  f.add_term(0b011100u, Scalar(1));   // e345
  return f;
}

AltForm omega_symp() {
  AltForm f(6, 2);
  f.add_term(0b001001u, Scalar(1));  // e14
  f.add_term(0b010010u, Scalar(1));  // e25
  f.add_term(0b100100u, Scalar(1));  // e36
  return f;
}

AltForm vol6_ref() { return top_form(6); }

SevenFormData seven_data(AltForm rho) { return {std::move(rho), vol7_ref()}; }

SixFormData six_data(AltForm omega3) { return {std::move(omega3), omega_symp(), vol6_ref()}; }

Scalar top_coeff(const AltForm& f, const AltForm& vol) {
  if (vol.degree != vol.dim || vol.terms.size() != 1) throw std::invalid_argument("volume must be a top form");
  if (f.dim != vol.dim || f.degree != f.dim) throw std::invalid_argument("form must be top degree");
  const std::uint32_t full = (1u << vol.dim) - 1;
  const Scalar cv = vol.coeff(full);
  if (cv.is_zero()) throw std::invalid_argument("volume must be nonzero");
  return f.coeff(full) / cv;
}

Mat bilinear_c(const SevenFormData& d) {
  std::vector<AltForm> contr;
  contr.reserve(7);
  for (int k = 0; k < 7; ++k) contr.push_back(interior(basis_vector(7, k), d.rho));
  Mat c(7, 7);
  for (int u = 0; u < 7; ++u)
    for (int v = u; v < 7; ++v) {
      const Scalar cuv = top_coeff(wedge(wedge(contr[u], contr[v]), d.rho), d.vol_ref);
      c.at(u, v) = cuv;
      c.at(v, u) = cuv;
    }
  return c;
}

Scalar kappa(const SevenFormData& d) {
  const Scalar dc = det(bilinear_c(d));
  auto root = cbrt_in_field(dc);
  if (!root) throw UnsupportedOrbitError();
  return *root;
}

Scalar kappa_reference() { return Scalar(Rational(1, 4)); }

Mat metric_from_rho(const SevenFormData& d) {
  const Mat c = bilinear_c(d);
  auto kap = cbrt_in_field(det(c));
  if (!kap) throw UnsupportedOrbitError();
  if (kap->is_zero()) throw std::domain_error("metric needs kappa != 0");
  auto scale = cbrt_in_field(*kap / kappa_reference());
  if (!scale) throw UnsupportedOrbitError();
  return scale->inverse() * c;
}

Mat k_omega(const SixFormData& d) {
  Mat k(6, 6);
  for (int j = 0; j < 6; ++j) {
    const AltForm five = wedge(interior(basis_vector(6, j), d.omega3), d.omega3);
    const auto w = form_to_vector(five, d.vol_ref);
    for (int i = 0; i < 6; ++i) k.at(i, j) = w[static_cast<std::size_t>(i)];
  }
  return k;
}

Scalar lambda_invariant(const SixFormData& d) {
  const Mat k = k_omega(d);
  const Mat k2 = k * k;
  const Scalar lam = k2.at(0, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Scalar expect = (i == j) ? lam : Scalar(0);
      if (k2.at(i, j) != expect)
        throw std::logic_error("K^2 is not a scalar multiple of the identity");
    }
  return lam;
}

EigenspacesW eigenspaces_w(const SixFormData& d) {
  const Scalar lam = lambda_invariant(d);
  if (lam.is_zero()) throw std::domain_error("eigenspaces need lambda != 0");
  auto s = sqrt_in_field(lam);
  if (!s) throw UnsupportedOrbitError("lambda is not a perfect square in the field");
  const Mat k = k_omega(d);
  Mat plus = k, minus = k;
  for (std::size_t i = 0; i < 6; ++i) {
    plus.at(i, i) -= *s;
    minus.at(i, i) += *s;
  }
  EigenspacesW out{nullspace(plus), nullspace(minus), *s};
  if (out.w_plus.size() != 3 || out.w_minus.size() != 3)
    throw std::logic_error("eigenspaces are not 3-dimensional");
  return out;
}

RhoSplit decompose_rho(const SevenFormData& d, const std::vector<Scalar>& v) {
  if (v.size() != 7) throw std::invalid_argument("vector length mismatch");
  const Mat g = metric_from_rho(d);
  const std::vector<Scalar> gv = g.apply(v);
  Scalar gvv(0);
  for (std::size_t i = 0; i < 7; ++i) gvv += v[i] * gv[i];
  if (gvv.is_zero()) throw std::domain_error("null vector: g(v,v) = 0");

  AltForm vflat(7, 1);
  for (int j = 0; j < 7; ++j) vflat.add_term(1u << j, gv[static_cast<std::size_t>(j)]);

  const AltForm phi7 = interior(v, d.rho);
  const AltForm omega7 = d.rho - gvv.inverse() * wedge(phi7, vflat);

  // Basis of the g-orthogonal complement: kernel of the covector g(v, .).
  Mat row(1, 7);
  for (std::size_t j = 0; j < 7; ++j) row.at(0, j) = gv[j];
  const auto ker = nullspace(row);
  if (ker.size() != 6) throw std::logic_error("orthogonal complement is not 6-dimensional");
  Mat basis(7, 6);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 7; ++i) basis.at(i, j) = ker[j][i];

  SixFormData six{pullback(basis, omega7), pullback(basis, phi7), vol6_ref()};
  return {basis, std::move(six), omega7, phi7, vflat, gvv};
}

}  // namespace g2x
