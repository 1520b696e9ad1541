#include "g2x/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2x {

namespace mp = boost::multiprecision;

std::optional<BigInt> int_nth_root(const BigInt& x, unsigned k) {
  if (k == 0) return std::nullopt;
  if (x == 0) return BigInt(0);
  if (x < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = int_nth_root(BigInt(-x), k);
    if (!r) return std::nullopt;
    return BigInt(-*r);
  }
  if (k == 1) return x;
  // Root has between (bits-1)/k and bits/k + 1 bits; bisect that range.
  const unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
  BigInt lo = BigInt(1) << ((bits - 1) / k);
  BigInt hi = BigInt(2) << (bits / k);
  while (lo < hi) {
    BigInt mid = lo + (hi - lo + 1) / 2;
    if (mp::pow(mid, k) <= x) lo = mid; else hi = mid - 1;
  }
  if (mp::pow(lo, k) == x) return lo;
  return std::nullopt;
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned k) {
  auto rn = int_nth_root(numerator(x), k);
  if (!rn) return std::nullopt;
  auto rd = int_nth_root(denominator(x), k);
  if (!rd) return std::nullopt;
  return Rational(*rn) / Rational(*rd);
}

Rational rational_from_string(const std::string& s) {
  bool has_digit = false;
  for (char ch : s) has_digit = has_digit || (ch >= '0' && ch <= '9');
  if (!has_digit) throw std::invalid_argument("not a rational: '" + s + "'");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

std::string rational_to_string(const Rational& r) { return r.str(); }

Scalar Scalar::omega() {
  return Scalar(Rational(-1, 2), Rational(0), Rational(0), Rational(1, 2));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a += o.a; b += o.b; c += o.c; d += o.d;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a -= o.a; b -= o.b; c -= o.c; d -= o.d;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // Rational-by-rational is the dominant case in the linear algebra paths;
  // skip the twelve cross terms there.
  if (is_rational() && o.is_rational()) {
    a *= o.a;
    return *this;
  }
  const Rational na = a * o.a - b * o.b + 3 * (c * o.c - d * o.d);
  const Rational nb = a * o.b + b * o.a + 3 * (c * o.d + d * o.c);
  const Rational nc = a * o.c + c * o.a - b * o.d - d * o.b;
  const Rational nd = a * o.d + d * o.a + b * o.c + c * o.b;
  a = na; b = nb; c = nc; d = nd;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Rational Scalar::norm_q() const {
  const Rational n1a = a * a - b * b - 3 * (c * c - d * d);
  const Rational n1b = 2 * (a * b - 3 * c * d);
  return n1a * n1a + n1b * n1b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return Scalar(Rational(1) / a);
  // s * conj_r3(s) = n1 lies in Q(i); s * conj_r3(s) * conj_i(n1) = |n1|^2 in Q.
  const Rational n1a = a * a - b * b - 3 * (c * c - d * d);
  const Rational n1b = 2 * (a * b - 3 * c * d);
  const Rational n = n1a * n1a + n1b * n1b;
  const Scalar t = conj_r3() * Scalar(n1a, -n1b, Rational(0), Rational(0));
  return Scalar(t.a / n, t.b / n, t.c / n, t.d / n);
}

std::complex<double> Scalar::to_complex() const {
  static const double r3 = std::sqrt(3.0);
  return {a.convert_to<double>() + c.convert_to<double>() * r3,
          b.convert_to<double>() + d.convert_to<double>() * r3};
}

std::string Scalar::to_string() const {
  const Rational* comp[4] = {&a, &b, &c, &d};
  static const char* sym[4] = {"", "i", "s3", "i*s3"};
  std::string out;
  for (int j = 0; j < 4; ++j) {
    const Rational& v = *comp[j];
    if (v == 0) continue;
    std::string term;
    if (j == 0) term = v.str();
    else if (v == 1) term = sym[j];
    else if (v == -1) term = std::string("-") + sym[j];
    else term = v.str() + "*" + sym[j];
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

// Square root of e + f*i within Q(i); complete over that subfield.
std::optional<std::pair<Rational, Rational>> sqrt_qi(const Rational& e, const Rational& f) {
  if (f == 0) {
    if (e >= 0) {
      if (auto g = rational_nth_root(e, 2)) return std::make_pair(*g, Rational(0));
      return std::nullopt;
    }
    if (auto h = rational_nth_root(Rational(-e), 2)) return std::make_pair(Rational(0), *h);
    return std::nullopt;
  }
  // (g + h i)^2 = e + f i forces g^2 = (e + n)/2 with n^2 = e^2 + f^2, h = f/(2g).
  auto n = rational_nth_root(e * e + f * f, 2);
  if (!n) return std::nullopt;
  auto g = rational_nth_root((e + *n) / 2, 2);
  if (!g || *g == 0) return std::nullopt;
  return std::make_pair(*g, f / (2 * *g));
}

// Deterministic choice between r and -r: first nonzero coordinate positive.
Scalar normalize_sign(Scalar r) {
  for (const Rational* v : {&r.a, &r.b, &r.c, &r.d}) {
    if (*v == 0) continue;
    return (*v < 0) ? -r : r;
  }
  return r;
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
  // Write s = u + v*sqrt3 with u = a + b i and v = c + d i in Q(i).
  if (s.c == 0 && s.d == 0) {
    // Root is either in Q(i) or of the form (p + q i)*sqrt3.
    if (auto r = sqrt_qi(s.a, s.b))
      return normalize_sign(Scalar(r->first, r->second, 0, 0));
    if (auto r = sqrt_qi(s.a / 3, s.b / 3))
      return normalize_sign(Scalar(0, 0, r->first, r->second));
    return std::nullopt;
  }
  // v != 0: root p + q*sqrt3 needs p^2 = (u +/- w)/2 with w^2 = u^2 - 3v^2,
  // then q = v/(2p). If s is a square, u^2 - 3v^2 is a square in Q(i).
  const Scalar u(s.a, s.b, 0, 0), v(s.c, s.d, 0, 0);
  const Scalar disc = u * u - Scalar(3) * v * v;
  auto w = sqrt_qi(disc.a, disc.b);
  if (!w) return std::nullopt;
  for (int sign : {+1, -1}) {
    const Rational pe = (u.a + sign * w->first) / 2;
    const Rational pf = (u.b + sign * w->second) / 2;
    auto p = sqrt_qi(pe, pf);
    if (!p) continue;
    const Scalar ps(p->first, p->second, 0, 0);
    if (ps.is_zero()) continue;
    const Scalar qs = v / (Scalar(2) * ps);
    const Scalar root(ps.a, ps.b, qs.a, qs.b);
    if (root * root == s) return normalize_sign(root);
  }
  return std::nullopt;
}

namespace {

// Monotone bisection: largest y in [lo, hi] satisfying a predicate that is
// true on a prefix of the interval; nullopt if it fails already at lo.
template <class Pred>
std::optional<BigInt> last_true(BigInt lo, BigInt hi, Pred pred) {
  if (lo > hi || !pred(lo)) return std::nullopt;
  while (lo < hi) {
    BigInt mid = lo + (hi - lo + 1) / 2;
    if (pred(mid)) lo = mid; else hi = mid - 1;
  }
  return lo;
}

// Exact integer roots of Y^3 + B*Y + C via per-monotone-interval bisection.
std::vector<BigInt> monic_depressed_cubic_integer_roots(const BigInt& B, const BigInt& C) {
  std::vector<BigInt> roots;
  auto P = [&](const BigInt& y) -> BigInt { return y * y * y + B * y + C; };
  auto push = [&](const BigInt& y) {
    if (P(y) == 0 && std::find(roots.begin(), roots.end(), y) == roots.end())
      roots.push_back(y);
  };
  const BigInt ab = abs(B), ac = abs(C);
  const BigInt M = 1 + (ab > ac ? ab : ac);  // Cauchy bound on root size
  auto inc = [&](const BigInt& lo, const BigInt& hi) {
    if (auto y = last_true(lo, hi, [&](const BigInt& t) { return P(t) <= 0; })) push(*y);
  };
  auto dec = [&](const BigInt& lo, const BigInt& hi) {
    if (auto y = last_true(lo, hi, [&](const BigInt& t) { return P(t) >= 0; })) push(*y);
  };
  if (B >= 0) {
    inc(-M, M);
  } else {
    const BigInt nb3 = BigInt(-B) / 3;
    const BigInt cb = mp::sqrt(nb3);  // floor sqrt: critical points at +/- sqrt(-B/3)
    inc(-M, -cb - 1);
    dec(-cb, cb);
    inc(cb + 1, M);
    push(-cb - 1); push(-cb); push(cb); push(cb + 1);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// All rational roots of c3*X^3 + c1*X + c0 (c3 != 0), exactly.
std::vector<Rational> rational_roots_depressed_cubic(const Rational& c3, const Rational& c1,
                                                     const Rational& c0) {
  const BigInt l3 = denominator(c3), l1 = denominator(c1), l0 = denominator(c0);
  const BigInt L = mp::lcm(mp::lcm(l3, l1), l0);
  const BigInt A3 = numerator(c3) * (L / l3);
  const BigInt A1 = numerator(c1) * (L / l1);
  const BigInt A0 = numerator(c0) * (L / l0);
  // Substitute X = Y/A3: integer roots of Y^3 + (A1*A3) Y + A0*A3^2 cover all
  // rational roots (the denominator of a root divides the leading coefficient).
  const BigInt BB = A1 * A3;
  const BigInt CC = A0 * A3 * A3;
  std::vector<Rational> out;
  for (const BigInt& y : monic_depressed_cubic_integer_roots(BB, CC))
    out.push_back(Rational(y) / Rational(A3));
  return out;
}

}  // namespace

std::optional<Scalar> cbrt_in_field(const Scalar& s) {
  if (s.is_rational()) {
    if (auto r = rational_nth_root(s.a, 3)) return Scalar(*r);
    return std::nullopt;
  }
  // Quadratic subfield cases s = s1 + s2*theta with theta^2 = D rational.
  int idx;
  long D;
  if (s.c == 0 && s.d == 0) { idx = 1; D = -1; }
  else if (s.b == 0 && s.d == 0) { idx = 2; D = 3; }
  else if (s.b == 0 && s.c == 0) { idx = 3; D = -3; }
  else return std::nullopt;  // general elements are outside the supported classes
  const Rational& s1 = s.a;
  const Rational s2 = (idx == 1) ? s.b : (idx == 2) ? s.c : s.d;
  // Norm descent: a root p + q*theta has (p^2 - D q^2)^3 = s1^2 - D s2^2, and
  // eliminating q leaves 4p^3 - 3rp - s1 = 0, q = s2/(4p^2 - r).
  auto rr = rational_nth_root(s1 * s1 - D * (s2 * s2), 3);
  if (!rr) return std::nullopt;
  const Rational r = *rr;
  std::vector<Scalar> found;
  for (const Rational& p : rational_roots_depressed_cubic(Rational(4), -3 * r, -s1)) {
    const Rational denom = 4 * p * p - r;
    if (denom == 0) continue;
    const Rational q = s2 / denom;
    Scalar t(p, 0, 0, 0);
    if (idx == 1) t.b = q; else if (idx == 2) t.c = q; else t.d = q;
    if (t * t * t == s) found.push_back(t);
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(), [](const Scalar& x, const Scalar& y) {
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b > y.b;
    if (x.c != y.c) return x.c > y.c;
    return x.d > y.d;
  });
  return found.front();
}

}  // namespace g2x
