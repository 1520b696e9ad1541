#include "g2x/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2x {

UniPoly UniPoly::monomial(std::size_t k, const Scalar& v) {
  std::vector<Scalar> cs(k + 1, Scalar(0));
  cs[k] = v;
  return UniPoly(std::move(cs));
}

void UniPoly::normalize() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> r(a.c.size() + b.c.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const Scalar& s, const UniPoly& p) {
  UniPoly r = p;
  for (auto& v : r.c) v *= s;
  r.normalize();
  return r;
}

Scalar UniPoly::operator()(const Scalar& at) const {
  Scalar acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::complex<double> UniPoly::eval_complex(const std::complex<double>& at) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + it->to_complex();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c.size() <= 1) return UniPoly();
  std::vector<Scalar> r(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k)
    r[k - 1] = Scalar(static_cast<long>(k)) * c[k];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  return lead().inverse() * *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string term = "(" + c[k].to_string() + ")";
    if (k == 1) term += "*" + var;
    else if (k > 1) term += "*" + var + "^" + std::to_string(k);
    out += term;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  UniPoly r = a;
  std::vector<Scalar> qc(a.degree() >= db ? a.degree() - db + 1 : 0, Scalar(0));
  const Scalar binv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    const Scalar f = r.lead() * binv;
    qc[k] = f;
    for (int j = 0; j <= db; ++j) r.c[k + j] -= f * b.c[j];
    r.normalize();
  }
  return {UniPoly(std::move(qc)), r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PolyExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(Scalar(1)), u1;
  UniPoly v0, v1 = UniPoly::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const Scalar s = r0.lead().inverse();
  return {s * r0, s * u0, s * v0};
}

bool squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

std::optional<UniPoly> inverse_mod(const UniPoly& h, const UniPoly& m) {
  if (m.degree() < 1) throw std::domain_error("modulus must be nonconstant");
  auto e = poly_ext_gcd(h, m);
  if (e.g.degree() != 0) return std::nullopt;
  return divmod(e.u, m).second;
}

Scalar resultant(const UniPoly& a0, const UniPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Scalar(0);
  UniPoly a = a0, b = b0;
  Scalar res(1);
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      Scalar pw(1);
      for (int k = 0; k < m; ++k) pw *= b.lead();
      return res * pw;
    }
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) return Scalar(0);
    const int d = r.degree();
    if ((m * n) % 2 != 0) res = -res;
    Scalar pw(1);
    for (int k = 0; k < m - d; ++k) pw *= b.lead();
    res *= pw;
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<Scalar> power_sums(const UniPoly& r, std::size_t upto) {
  if (r.degree() < 1) throw std::domain_error("power sums need degree >= 1");
  const UniPoly m = r.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  std::vector<Scalar> p(upto + 1, Scalar(0));
  p[0] = Scalar(static_cast<long>(n));
  for (std::size_t k = 1; k <= upto; ++k) {
    Scalar s(0);
    const std::size_t jmax = std::min(k - 1, n);
    for (std::size_t j = 1; j <= jmax; ++j) s += m.coeff(n - j) * p[k - j];
    if (k <= n) s += Scalar(static_cast<long>(k)) * m.coeff(n - k);
    p[k] = -s;
  }
  return p;
}

std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<std::complex<double>> a(n + 1);
  const std::complex<double> lead = p.c.back().to_complex();
  for (int k = 0; k <= n; ++k) a[k] = p.c[k].to_complex() / lead;
  auto eval = [&](const std::complex<double>& x) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = n; k >= 0; --k) acc = acc * x + a[k];
    return acc;
  };
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> pw = seed;
  for (int k = 0; k < n; ++k) { z[k] = pw; pw *= seed; }
  for (int iter = 0; iter < 1000; ++iter) {
    double delta = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) den *= (z[k] - z[j]);
      const std::complex<double> step = eval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  return z;
}

RatFunc::RatFunc(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  const UniPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
}

}  // namespace g2x
