#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "g2x/rational.hpp"

namespace g2x {

/// Element of the field Q(i,√3), stored on the basis {1, i, √3, i√3}:
/// value = a + b·i + c·√3 + d·i√3 with exact rational coordinates.
class Scalar {
 public:
  Rational a, b, c, d;

  Scalar() = default;
  Scalar(long v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : a(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Scalar unit_i() { return Scalar(0, 1, 0, 0); }
  static Scalar sqrt3() { return Scalar(0, 0, 1, 0); }
  static Scalar i_sqrt3() { return Scalar(0, 0, 0, 1); }
  /// Primitive cube root of unity (−1 + i√3)/2; lies in the field.
  static Scalar omega();

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  Scalar operator-() const { return Scalar(-a, -b, -c, -d); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Galois conjugations generating Gal(Q(i,√3)/Q).
  Scalar conj_i() const { return Scalar(a, -b, c, -d); }
  Scalar conj_r3() const { return Scalar(a, b, -c, -d); }

  /// Field norm down to Q (product of the four Galois conjugates).
  Rational norm_q() const;

  Scalar inverse() const;  // throws std::domain_error on zero

  /// Numeric embedding i ↦ i, √3 ↦ +√3 (for oracle comparisons only).
  std::complex<double> to_complex() const;

  std::string to_string() const;
};

/// Exact square root in Q(i,√3); complete (finds a root whenever one exists).
/// The returned root is sign-normalized: first nonzero coordinate positive.
std::optional<Scalar> sqrt_in_field(const Scalar& s);

/// Exact cube root in Q(i,√3). Complete for arguments lying in Q or in one of
/// the quadratic subfields Q(i), Q(√3), Q(i√3); rational arguments get the
/// rational branch. Arguments outside those classes are not searched and
/// yield nullopt (callers report them as outside the supported orbit sample).
std::optional<Scalar> cbrt_in_field(const Scalar& s);

}  // namespace g2x
