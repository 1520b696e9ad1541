#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2x/scalar.hpp"

namespace g2x {

/// Univariate polynomial over Q(i,√3); coefficients ascending, trailing zeros
/// stripped, so the leading coefficient is nonzero unless the polynomial is 0.
class UniPoly {
 public:
  std::vector<Scalar> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { normalize(); }

  static UniPoly constant(const Scalar& v) { return UniPoly({v}); }
  static UniPoly x() { return UniPoly({Scalar(0), Scalar(1)}); }
  static UniPoly monomial(std::size_t k, const Scalar& v);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  Scalar coeff(std::size_t k) const { return k < c.size() ? c[k] : Scalar(0); }
  Scalar lead() const { return c.empty() ? Scalar(0) : c.back(); }
  void normalize();

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Scalar& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  Scalar operator()(const Scalar& at) const;  // Horner
  std::complex<double> eval_complex(const std::complex<double>& at) const;

  UniPoly derivative() const;
  UniPoly monic() const;  // throws std::domain_error on the zero polynomial

  std::string to_string(const std::string& var = "z") const;
};

/// Euclidean division a = q*b + r with deg r < deg b; throws on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor; poly_gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Bezout data: u*a + v*b = g with g the monic gcd.
struct PolyExtGcd {
  UniPoly g, u, v;
};
PolyExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b);

/// True when p has no repeated roots, i.e. gcd(p, p') is constant.
bool squarefree(const UniPoly& p);

/// Inverse of h modulo m (gcd(h, m) constant required); nullopt otherwise.
std::optional<UniPoly> inverse_mod(const UniPoly& h, const UniPoly& m);

/// Resultant of a and b; zero exactly when they share a nonconstant factor.
Scalar resultant(const UniPoly& a, const UniPoly& b);

/// result[k] = sum of root^k over the roots of r (with multiplicity), for
/// k = 0..upto, via Newton's identities; r is treated as monic.
std::vector<Scalar> power_sums(const UniPoly& r, std::size_t upto);

/// Numeric roots by Durand-Kerner in double precision (oracle use only).
std::vector<std::complex<double>> numeric_roots(const UniPoly& p);

/// Rational function num/den, kept reduced: gcd(num, den) constant.
struct RatFunc {
  UniPoly num, den;

  RatFunc() : den(UniPoly::constant(Scalar(1))) {}
  RatFunc(UniPoly n, UniPoly d);  // reduces; throws on zero denominator

  std::complex<double> eval_complex(const std::complex<double>& at) const {
    return num.eval_complex(at) / den.eval_complex(at);
  }
};

}  // namespace g2x
