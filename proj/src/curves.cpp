#include "g2x/curves.hpp"

#include <stdexcept>
#include <utility>

namespace g2x {

namespace {

const Scalar kHalf(Rational(1, 2));
const Scalar kQuarter(Rational(1, 4));
const Scalar kTwoThirds(Rational(2, 3));

UniPoly scaled(const UniPoly& p, const Scalar& s) { return UniPoly::constant(s) * p; }

}  // namespace

UniPoly dual_q(const CurveFamily& c) {
  return scaled(c.f * c.f * c.f, Scalar(Rational(1, 54))) - c.q;
}

CurveFamily dualize(const CurveFamily& c) {
  CurveFamily d;
  d.g_base = c.g_base;
  d.f = c.f;
  d.q = dual_q(c);
  return d;
}

Scalar sextic_at(const Scalar& f, const Scalar& q, const Scalar& x) {
  const Scalar x2 = x * x;
  return ((x2 - f) * x2 + f * f * kQuarter) * x2 - q;
}

Scalar spectral_poly(const CurveFamily& c, const Scalar& x, const Scalar& z) {
  return sextic_at(c.f(z), c.q(z), x);
}

UniPoly discriminant(const CurveFamily& c) {
  // Cubic w^3 + b w^2 + cc w + d with b = -f, cc = f^2/4, d = -q.
  const UniPoly b = -c.f;
  const UniPoly cc = scaled(c.f * c.f, kQuarter);
  const UniPoly d = -c.q;
  const UniPoly disc = scaled(b * cc * d, Scalar(18)) - scaled(b * b * b * d, Scalar(4)) +
                       b * b * cc * cc - scaled(cc * cc * cc, Scalar(4)) -
                       scaled(d * d, Scalar(27));
  const UniPoly factored = c.q * (scaled(c.f * c.f * c.f, kHalf) - scaled(c.q, Scalar(27)));
  if (disc != factored)
    throw std::logic_error("discriminant: q (f^3/2 - 27 q) factorization failed");
  const UniPoly via_dual = scaled(c.q * dual_q(c), Scalar(27));
  if (disc != via_dual) throw std::logic_error("discriminant: 27 q q_dual factorization failed");
  return disc;
}

bool certify_discriminant_identity(Rng& rng) {
  for (int iter = 0; iter < 30; ++iter) {
    const Scalar f = rng.scalar(5, 2);
    const Scalar q = rng.scalar(5, 2);
    const Scalar b = -f;
    const Scalar cc = f * f * kQuarter;
    const Scalar d = -q;
    const Scalar disc = Scalar(18) * b * cc * d - Scalar(4) * b * b * b * d + b * b * cc * cc -
                        Scalar(4) * cc * cc * cc - Scalar(27) * d * d;
    const Scalar qd = f * f * f * Scalar(Rational(1, 54)) - q;
    if (disc != q * (f * f * f * kHalf - Scalar(27) * q)) return false;
    if (disc != Scalar(27) * q * qd) return false;
  }
  return true;
}

CameralPoint make_cameral_point(const Scalar& x, const Scalar& y, const Scalar& f, const Scalar& q) {
  if (x * x + y * y != kTwoThirds * f)
    throw std::domain_error("cameral point: x^2 + y^2 = 2f/3 fails");
  if (!sextic_at(f, q, x).is_zero())
    throw std::domain_error("cameral point: spectral sextic does not vanish at x");
  return CameralPoint{x, y, f, q};
}

CameralPoint sample_w_point(Rng& rng) {
  const Scalar x(rng.rational(4, 3));
  const Scalar y(rng.nonzero_rational(4, 3));
  const Scalar f = Scalar(Rational(3, 2)) * (x * x + y * y);
  const Scalar x2 = x * x;
  const Scalar q = ((x2 - f) * x2 + f * f * kQuarter) * x2;
  return make_cameral_point(x, y, f, q);
}

EigenTriple cameral_eigenvalues(const CameralPoint& p) {
  EigenTriple t;
  t.l1 = p.x;
  const Scalar s3y = Scalar::sqrt3() * p.y;
  t.l2 = (-p.x + s3y) * kHalf;
  t.l3 = (-p.x - s3y) * kHalf;
  return t;
}

DihedralElement d6_from_normal_form(int rot, int refl) {
  if (rot < 0 || rot > 5 || refl < 0 || refl > 1)
    throw std::invalid_argument("d6_from_normal_form: rot in 0..5, refl in 0..1");
  const Scalar half = kHalf;
  const Scalar s3half(Rational(0), Rational(0), Rational(1, 2), Rational(0));
  Mat r(2, 2);
  r.at(0, 0) = half;
  r.at(0, 1) = s3half;
  r.at(1, 0) = -s3half;
  r.at(1, 1) = half;
  Mat m = Mat::identity(2);
  for (int k = 0; k < rot; ++k) m = m * r;
  if (refl) {
    Mat s = Mat::identity(2);
    s.at(1, 1) = Scalar(-1);
    m = m * s;
  }
  DihedralElement e;
  e.rot = rot;
  e.refl = refl;
  e.mat = std::move(m);
  return e;
}

DihedralElement d6_element(const std::string& word) {
  int rot = 0, refl = 0;
  for (char ch : word) {
    switch (ch) {
      case 'r':
        rot = refl ? (rot + 5) % 6 : (rot + 1) % 6;
        break;
      case 'R':
        rot = refl ? (rot + 1) % 6 : (rot + 5) % 6;
        break;
      case 's':
      case 'S':
        refl ^= 1;
        break;
      case ' ':
        break;
      default:
        throw std::invalid_argument(std::string("d6_element: unknown generator '") + ch + "'");
    }
  }
  return d6_from_normal_form(rot, refl);
}

std::vector<DihedralElement> d6_all() {
  std::vector<DihedralElement> all;
  for (int refl = 0; refl < 2; ++refl)
    for (int rot = 0; rot < 6; ++rot) all.push_back(d6_from_normal_form(rot, refl));
  return all;
}

Scalar quotient_equation(QuotientKind k, const Scalar& f, const Scalar& q, const Scalar& t) {
  const Scalar t2 = t * t;
  switch (k) {
    case QuotientKind::ByS:
      return sextic_at(f, q, t);
    case QuotientKind::ByR3S:
      return ((t2 - f) * t2 + f * f * kQuarter) * t2 + q - f * f * f * Scalar(Rational(1, 54));
  }
  throw std::invalid_argument("quotient_equation: unknown kind");
}

bool certify_quotient_substitution(Rng& rng) {
  for (int iter = 0; iter < 30; ++iter) {
    const Scalar f = rng.scalar(5, 2);
    const Scalar q = rng.scalar(5, 2);
    const Scalar y = rng.scalar(5, 2);
    const Scalar w = kTwoThirds * f - y * y;  // x^2 on the curve
    const Scalar cubic = ((w - f) * w + f * f * kQuarter) * w - q;
    if (cubic != -quotient_equation(QuotientKind::ByR3S, f, q, y)) return false;
  }
  return true;
}

Scalar project_to_c(const Scalar& x, const Scalar& f_val) { return x * (x * x - f_val * kHalf); }

NumerologyReport numerology(int g, int m) {
  if (g < 2) throw std::invalid_argument("numerology: base genus must be at least 2");
  if (m < 1) throw std::invalid_argument("numerology: rank parameter must be at least 1");
  const BigInt gm1 = g - 1;
  NumerologyReport rep;
  rep.g = g;
  rep.m = m;
  rep.g_s_gl = BigInt(4) * m * m * gm1 + 1;
  rep.g_s_g2 = BigInt(36) * gm1 + 1;
  rep.g_c = BigInt(8) * gm1 + 1;
  rep.g_w = BigInt(84) * gm1 + 1;
  rep.g_sbar = (BigInt(2) * m * m - m) * gm1 + 1;
  rep.prym_dim_sp = BigInt(2) * m * (m + 1) * gm1;
  rep.prym_dim_g2 = BigInt(14) * gm1;
  rep.base_dim_g2 = rep.prym_dim_g2;
  const unsigned e = static_cast<unsigned>(4 * m * (g - 1));
  rep.order_sections = BigInt(1) << e;
  rep.order_components = BigInt(1) << (e - 1);
  rep.order_covering = BigInt(1) << (e - 2);
  rep.order_p2 = BigInt(1) << static_cast<unsigned>(4 * m * (m + 1) * (g - 1));
  const BigInt sbar3 = BigInt(15) * gm1 + 1;  // the m = 3 spectral quotient
  rep.chain_value = (rep.g_s_g2 - sbar3) - (rep.g_c - g);
  rep.chain_ok = rep.chain_value == BigInt(14) * gm1;
  return rep;
}

}  // namespace g2x
