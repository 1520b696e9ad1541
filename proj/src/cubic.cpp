#include "g2x/cubic.hpp"

#include <utility>

namespace g2x {

namespace {

const Scalar kEighteenth(Rational(1, 18));

/// 2 sum over roots of r of (n1 n2 n3)/(f^2 r'^2), exactly.
Scalar side_sum(const UniPoly& f, const UniPoly& r, const UniPoly& n1, const UniPoly& n2,
                const UniPoly& n3) {
  if (r.degree() < 1) return Scalar(0);
  const UniPoly num = n1 * n2 * n3;
  const UniPoly rp = r.derivative();
  const UniPoly den = f * f * rp * rp;
  return Scalar(2) * root_sum(r, RatFunc(num, den));
}

}  // namespace

TangentVec dual_tangent(const CurveFamily& c, const TangentVec& t) {
  TangentVec d;
  d.f_dot = t.f_dot;
  d.q_dot = UniPoly::constant(kEighteenth) * (c.f * c.f * t.f_dot) - t.q_dot;
  return d;
}

void require_admissible(const CurveFamily& c) {
  if (c.q.degree() < 0) throw AdmissibilityError("q must be nonzero", c.q);
  const UniPoly qd = dual_q(c);
  if (qd.degree() < 0) throw AdmissibilityError("dual q must be nonzero", qd);
  if (!squarefree(c.q))
    throw AdmissibilityError("q has a repeated root", poly_gcd(c.q, c.q.derivative()));
  if (!squarefree(qd))
    throw AdmissibilityError("dual q has a repeated root", poly_gcd(qd, qd.derivative()));
  const auto need_coprime = [](const UniPoly& a, const UniPoly& b, const char* what) {
    const UniPoly g = poly_gcd(a, b);
    if (g.degree() > 0)
      throw AdmissibilityError(std::string("common roots between ") + what, g);
  };
  need_coprime(c.q, qd, "q and dual q");
  need_coprime(c.q, c.f, "q and f");
  need_coprime(qd, c.f, "dual q and f");
}

Scalar cubic_form(const CurveFamily& c, const TangentVec& t1, const TangentVec& t2,
                  const TangentVec& t3) {
  require_admissible(c);
  const UniPoly qd = dual_q(c);
  const TangentVec d1 = dual_tangent(c, t1);
  const TangentVec d2 = dual_tangent(c, t2);
  const TangentVec d3 = dual_tangent(c, t3);
  return side_sum(c.f, c.q, t1.q_dot, t2.q_dot, t3.q_dot) +
         side_sum(c.f, qd, d1.q_dot, d2.q_dot, d3.q_dot);
}

bool verify_involution_invariance(const CurveFamily& c, const TangentVec& t1,
                                  const TangentVec& t2, const TangentVec& t3) {
  const CurveFamily dual = dualize(c);
  const Scalar lhs = cubic_form(c, t1, t2, t3);
  const Scalar rhs =
      cubic_form(dual, dual_tangent(c, t1), dual_tangent(c, t2), dual_tangent(c, t3));
  return lhs == rhs;
}

bool verify_cos6_identity() {
  const UniPoly x = UniPoly::x();
  UniPoly prev = UniPoly::constant(Scalar(1));  // T_0
  UniPoly cur = x;                              // T_1
  for (int n = 1; n < 6; ++n) {
    UniPoly next = UniPoly::constant(Scalar(2)) * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  UniPoly expect;  // 32 x^6 - 48 x^4 + 18 x^2 - 1
  expect = UniPoly::monomial(6, Scalar(32)) + UniPoly::monomial(4, Scalar(-48)) +
           UniPoly::monomial(2, Scalar(18)) + UniPoly::constant(Scalar(-1));
  return cur == expect;
}

bool verify_bvw_identity(Rng& rng) {
  const Scalar third(Rational(1, 3));
  const Scalar quarter(Rational(1, 4));
  for (int iter = 0; iter < 40; ++iter) {
    const Scalar f(rng.nonzero_rational(5, 2));
    const Scalar cth(rng.rational(5, 2));
    const Scalar u = rng.scalar(3, 2);
    const Scalar v = rng.scalar(3, 2);
    const Scalar c2 = cth * cth;
    const Scalar cos6 =
        Scalar(32) * c2 * c2 * c2 - Scalar(48) * c2 * c2 + Scalar(18) * c2 - Scalar(1);
    const Scalar x2 = Scalar(Rational(2, 3)) * f * c2;
    const Scalar q = ((x2 - f) * x2 + f * f * quarter) * x2;
    const Scalar qdual = f * f * f * Scalar(Rational(1, 54)) - q;
    const Scalar lhs = f * third * ((Scalar(1) - cos6) * u + (Scalar(1) + cos6) * v);
    const Scalar rhs = Scalar(36) * (f * f).inverse() * (qdual * u + q * v);
    if (lhs != rhs) return false;
  }
  return true;
}

std::complex<double> cubic_form_numeric(const CurveFamily& c, const TangentVec& t1,
                                        const TangentVec& t2, const TangentVec& t3) {
  const auto side = [&c](const UniPoly& r, const UniPoly& n1, const UniPoly& n2,
                         const UniPoly& n3) {
    std::complex<double> acc(0.0, 0.0);
    if (r.degree() < 1) return acc;
    const UniPoly rp = r.derivative();
    for (const std::complex<double>& a : numeric_roots(r)) {
      const std::complex<double> fa = c.f.eval_complex(a);
      const std::complex<double> rpa = rp.eval_complex(a);
      acc += n1.eval_complex(a) * n2.eval_complex(a) * n3.eval_complex(a) / (fa * fa * rpa * rpa);
    }
    return 2.0 * acc;
  };
  const UniPoly qd = dual_q(c);
  const TangentVec d1 = dual_tangent(c, t1);
  const TangentVec d2 = dual_tangent(c, t2);
  const TangentVec d3 = dual_tangent(c, t3);
  return side(c.q, t1.q_dot, t2.q_dot, t3.q_dot) + side(qd, d1.q_dot, d2.q_dot, d3.q_dot);
}

}  // namespace g2x
