#pragma once

#include <complex>
#include <stdexcept>

#include "g2x/curves.hpp"
#include "g2x/matrix.hpp"

namespace g2x {

/// Tangent direction to the family: first-order variations of f and q.
struct TangentVec {
  UniPoly f_dot, q_dot;
};

/// Variation of q_dual induced by t: q_dot_dual = f^2 f_dot / 18 - q_dot.
TangentVec dual_tangent(const CurveFamily& c, const TangentVec& t);

/// Genericity failure; carries the offending polynomial (a repeated-root
/// witness or a nonconstant common factor).
struct AdmissibilityError : std::domain_error {
  UniPoly witness;
  AdmissibilityError(const std::string& msg, UniPoly w)
      : std::domain_error(msg), witness(std::move(w)) {}
};

/// Requires q and q_dual squarefree and q, q_dual, f pairwise without
/// common roots. Throws AdmissibilityError naming the violated condition.
void require_admissible(const CurveFamily& c);

/// The symmetric trilinear form
///   2 sum_{q(a)=0} (qd1 qd2 qd3)/(f^2 q'^2)(a)
///   + 2 sum_{q_dual(a)=0} (qd1* qd2* qd3*)/(f^2 q_dual'^2)(a)
/// where qdi* is the dual variation of t_i. Exact: the sums over roots are
/// evaluated as companion-matrix traces, never by root extraction.
Scalar cubic_form(const CurveFamily& c, const TangentVec& t1, const TangentVec& t2,
                  const TangentVec& t3);

/// cubic_form(c, t1, t2, t3) == cubic_form(dualize(c), t1*, t2*, t3*).
bool verify_involution_invariance(const CurveFamily& c, const TangentVec& t1,
                                  const TangentVec& t2, const TangentVec& t3);

/// cos(6 theta) = 32 c^6 - 48 c^4 + 18 c^2 - 1 for c = cos(theta), checked
/// as an exact polynomial identity via the Chebyshev recurrence.
bool verify_cos6_identity();

/// The two branch-weight evaluations: with x^2 = (2f/3) cos^2(theta),
///   36 q_dual / f^2 = (2f/3)(1 - cos 6 theta) / ... combined as
///   (f/3)[(1 - cos6) u + (1 + cos6) v] = (36/f^2)[q_dual u + q v]
/// for independent weights u, v; certified on 40 random samples.
bool verify_bvw_identity(Rng& rng);

/// Floating-point oracle: numeric roots of q and q_dual, direct summation.
std::complex<double> cubic_form_numeric(const CurveFamily& c, const TangentVec& t1,
                                        const TangentVec& t2, const TangentVec& t3);

}  // namespace g2x
