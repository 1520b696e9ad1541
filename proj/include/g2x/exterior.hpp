#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2x/matrix.hpp"
#include "g2x/scalar.hpp"

namespace g2x {

/// Sparse alternating k-form on a space of dimension <= 8. Each term is keyed
/// by the bitmask of its strictly increasing index set (bit j = index j,
/// 0-based); zero coefficients are never stored.
class AltForm {
 public:
  int dim = 0;
  int degree = 0;
  std::map<std::uint32_t, Scalar> terms;

  AltForm() = default;
  AltForm(int dim_, int degree_);

  /// e^{i1} ^ ... ^ e^{ik} for strictly increasing 0-based indices.
  static AltForm basis(int dim, const std::vector<int>& idx);

  bool is_zero() const { return terms.empty(); }
  void add_term(std::uint32_t mask, const Scalar& coeff);  // accumulates, drops zeros
  Scalar coeff(std::uint32_t mask) const;

  AltForm operator-() const;
  AltForm& operator+=(const AltForm& o);
  AltForm& operator-=(const AltForm& o);
  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(const Scalar& s, const AltForm& f);
  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.dim == b.dim && a.degree == b.degree && a.terms == b.terms;
  }
  friend bool operator!=(const AltForm& a, const AltForm& b) { return !(a == b); }

  std::string to_string() const;
};

/// Wedge product; throws on dimension mismatch or degree sum above dim.
AltForm wedge(const AltForm& a, const AltForm& b);

/// Contraction i_v f in the first slot; throws on degree 0 or length mismatch.
AltForm interior(const std::vector<Scalar>& v, const AltForm& f);

/// Full evaluation f(v_1, ..., v_k), exact.
Scalar eval_form(const AltForm& f, const std::vector<std::vector<Scalar>>& args);

/// Pullback: (pullback(A, f))(x, ...) = f(Ax, ...). A maps a cols-dimensional
/// space to a rows-dimensional one with rows = f.dim; the result lives in
/// dimension A.cols (so restriction to a subspace is the non-square case).
AltForm pullback(const Mat& a, const AltForm& f);

/// e^{0} ^ ... ^ e^{dim-1} with unit coefficient.
AltForm top_form(int dim);

/// The unique v with interior(v, vol) = f, for vol a nonzero top form and
/// deg f = dim - 1 (the plus-sign branch of the contraction isomorphism).
std::vector<Scalar> form_to_vector(const AltForm& f, const AltForm& vol);

}  // namespace g2x
