#include "g2x/liealg.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "g2x/threeform.hpp"

namespace g2x {

AltForm lie_action(const Mat& a, const AltForm& form) {
  if (a.rows != a.cols) throw std::invalid_argument("lie_action: matrix must be square");
  if (static_cast<int>(a.rows) != form.dim)
    throw std::invalid_argument("lie_action: matrix size does not match form dimension");
  AltForm out(form.dim, form.degree);
  if (form.degree == 0) return out;
  for (const auto& [mask, c] : form.terms) {
    int pos = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++pos) {
      const int ip = std::countr_zero(bits);
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << ip);
      for (int j = 0; j < form.dim; ++j) {
        const Scalar& aij = a.at(static_cast<std::size_t>(ip), static_cast<std::size_t>(j));
        if (aij.is_zero()) continue;
        if (rest & (std::uint32_t{1} << j)) continue;
        // Replace slot p's covector by e^j, then resort: e^j passes the
        // slots before p and the rest-indices below j.
        const int below = std::popcount(rest & ((std::uint32_t{1} << j) - 1));
        Scalar contrib = c * aij;
        if ((pos + below) & 1) contrib = -contrib;
        out.add_term(rest | (std::uint32_t{1} << j), -contrib);
      }
    }
  }
  return out;
}

StabilizerResult stabilizer_dim(const std::vector<AltForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("stabilizer_dim: need at least one form");
  const int n = forms.front().dim;
  for (const AltForm& f : forms)
    if (f.dim != n) throw std::invalid_argument("stabilizer_dim: forms live on different spaces");

  // Row space: for each form, every possible coefficient of its degree.
  // Column space: the n^2 matrix entries a[u][v], column index u*n + v.
  std::vector<std::pair<std::size_t, std::uint32_t>> row_keys;  // (form index, mask)
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
      if (std::popcount(m) == forms[fi].degree) row_keys.emplace_back(fi, m);
  }
  Mat sys(row_keys.size(), static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      Mat unit(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      unit.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = Scalar(1);
      const std::size_t col = static_cast<std::size_t>(u) * n + v;
      for (std::size_t fi = 0; fi < forms.size(); ++fi) {
        const AltForm acted = lie_action(unit, forms[fi]);
        if (acted.terms.empty()) continue;
        for (std::size_t r = 0; r < row_keys.size(); ++r) {
          if (row_keys[r].first != fi) continue;
          const Scalar cv = acted.coeff(row_keys[r].second);
          if (!cv.is_zero()) sys.at(r, col) = cv;
        }
      }
    }
  }

  bool has3 = false, has2 = false;
  for (const AltForm& f : forms) {
    if (f.degree == 3) has3 = true;
    if (f.degree == 2) has2 = true;
  }

  StabilizerResult res;
  for (const std::vector<Scalar>& vec : nullspace(sys)) {
    Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) m.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = vec[static_cast<std::size_t>(u) * n + v];
    AlgElement el(std::move(m));
    el.stabilizes_threeform = has3;
    el.stabilizes_symplectic = has2;
    res.basis.push_back(std::move(el));
  }
  res.dim = static_cast<int>(res.basis.size());
  return res;
}

UniPoly char_poly(const AlgElement& a) {
  UniPoly p = charpoly(a.mat);
  const int n = p.degree();
  if (a.stabilizes_symplectic && n % 2 == 0) {
    for (int k = 1; k < n; k += 2)
      if (!p.coeff(k).is_zero())
        throw std::logic_error("char_poly: symplectic-tagged element has an odd coefficient");
  }
  if (a.skew_for_metric && n % 2 == 1) {
    for (int k = 0; k < n; k += 2)
      if (!p.coeff(k).is_zero())
        throw std::logic_error("char_poly: skew-tagged element on odd space has an even coefficient");
  }
  return p;
}

G2Invariants g2_invariants(const AlgElement& a) {
  const UniPoly p = char_poly(a);
  if (p.degree() != 7) throw std::domain_error("g2_invariants: characteristic polynomial must have degree 7");
  for (int k : {0, 2, 4, 6})
    if (!p.coeff(k).is_zero())
      throw std::domain_error("g2_invariants: shape violation, even-power coefficient is nonzero");
  G2Invariants inv;
  inv.f = -p.coeff(5);
  inv.q = -p.coeff(1);
  const Scalar quarter(Rational(1, 4));
  if (p.coeff(3) != inv.f * inv.f * quarter)
    throw std::domain_error("g2_invariants: shape violation, cubic coefficient is not f^2/4");
  return inv;
}

std::vector<Scalar> canonical_v0(const AlgElement& a, const AltForm& vol) {
  const std::size_t n = a.mat.rows;
  if (a.mat.cols != n) throw std::invalid_argument("canonical_v0: matrix must be square");
  if (n % 2 != 1) throw std::invalid_argument("canonical_v0: space must be odd-dimensional");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.mat.at(i, j) != -a.mat.at(j, i))
        throw std::invalid_argument("canonical_v0: matrix must be skew");
  const int m = static_cast<int>(n) / 2;
  // alpha(u, w) = (a u, w) = a[w][u] in the standard dot product.
  AltForm alpha(static_cast<int>(n), 2);
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int w = u + 1; w < static_cast<int>(n); ++w)
      alpha.add_term((std::uint32_t{1} << u) | (std::uint32_t{1} << w),
                     a.mat.at(static_cast<std::size_t>(w), static_cast<std::size_t>(u)));
  AltForm power(static_cast<int>(n), 0);
  power.add_term(0, Scalar(1));
  Rational fact(1);
  for (int k = 1; k <= m; ++k) {
    power = wedge(power, alpha);
    fact *= k;
  }
  const Scalar inv_fact(Rational(1) / fact);
  return form_to_vector(inv_fact * power, vol);
}

Scalar quadratic_condition_check(const AlgElement& phi0, const std::vector<Scalar>& e) {
  const std::size_t n = phi0.mat.rows;
  if (phi0.mat.cols != n || n == 0 || n % 2 != 0)
    throw std::invalid_argument("quadratic_condition_check: need a square matrix of even size");
  if (e.size() != n) throw std::invalid_argument("quadratic_condition_check: vector size mismatch");
  const std::size_t m = n / 2;

  // Membership in sp(2m): phi0^T J + J phi0 = 0 for the standard J.
  Mat jmat(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    jmat.at(i, m + i) = Scalar(1);
    jmat.at(m + i, i) = Scalar(-1);
  }
  const Mat skew_test = phi0.mat.transpose() * jmat + jmat * phi0.mat;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!skew_test.at(i, j).is_zero())
        throw std::domain_error("quadratic_condition_check: matrix is not symplectic");

  const UniPoly p = charpoly(phi0.mat);
  for (int k = 1; k < static_cast<int>(n); k += 2)
    if (!p.coeff(k).is_zero())
      throw std::domain_error("quadratic_condition_check: characteristic polynomial is not even");
  if (!p.coeff(0).is_zero())
    throw std::domain_error("quadratic_condition_check: constant term must vanish");
  if (nullspace(phi0.mat).size() != 1)
    throw std::domain_error("quadratic_condition_check: kernel must be one-dimensional");

  const Scalar a_2m_minus_2 = p.coeff(2);
  const std::vector<Scalar> pe = phi0.mat.apply(e);
  Scalar omega_val(0);
  for (std::size_t i = 0; i < m; ++i) omega_val += pe[i] * e[m + i] - pe[m + i] * e[i];
  return omega_val + a_2m_minus_2;
}

namespace {

/// Matrix of u -> cross(a, u) = u x a, the reversed-orientation cross.
Mat cross_left(const std::vector<Scalar>& a) {
  Mat c(3, 3);
  c.at(0, 1) = a[2];
  c.at(0, 2) = -a[1];
  c.at(1, 0) = -a[2];
  c.at(1, 2) = a[0];
  c.at(2, 0) = a[1];
  c.at(2, 1) = -a[0];
  return c;
}

}  // namespace

Mat fiform_element(const std::vector<Scalar>& a_param, const Mat& m_sym) {
  if (a_param.size() != 3) throw std::invalid_argument("fiform_element: parameter a must have 3 entries");
  if (m_sym.rows != 3 || m_sym.cols != 3)
    throw std::invalid_argument("fiform_element: M must be 3x3");
  if (!m_sym.is_symmetric()) throw std::invalid_argument("fiform_element: M must be symmetric");
  if (!m_sym.trace().is_zero()) throw std::invalid_argument("fiform_element: M must be traceless");
  const Mat cl = cross_left(a_param);
  Mat phi(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      phi.at(i, j) = cl.at(i, j);
      phi.at(i, 3 + j) = m_sym.at(i, j);
      phi.at(3 + i, 3 + j) = cl.at(i, j);
    }
  }
  return phi;
}

Mat k0_matrix() {
  Mat k(6, 6);
  for (std::size_t i = 0; i < 3; ++i) k.at(i, 3 + i) = Scalar(-2);
  return k;
}

Mat symplectic_matrix_xy() {
  Mat j(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    j.at(i, 3 + i) = Scalar(1);
    j.at(3 + i, i) = Scalar(-1);
  }
  return j;
}

bool verify_v0_equals_2a(const std::vector<Scalar>& a_param, const Mat& m_sym) {
  const Mat phi = fiform_element(a_param, m_sym);
  const Mat rhs_form = (phi * k0_matrix()).transpose() * symplectic_matrix_xy();

  std::vector<Scalar> v0(6, Scalar(0));
  for (std::size_t i = 0; i < 3; ++i) v0[i] = Scalar(2) * a_param[i];
  const AltForm lhs = interior(v0, omega_norm2());

  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      Scalar lv(0);
      if (i != j) {
        const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
        lv = lhs.coeff(mask);
        if (i > j) lv = -lv;
      }
      if (lv != rhs_form.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) return false;
    }
  }
  return true;
}

}  // namespace g2x
