#pragma once

#include <string>
#include <vector>

#include "g2x/exterior.hpp"
#include "g2x/matrix.hpp"

namespace g2x {

/// Element of gl(n) together with tags recording which structures it is
/// known to annihilate infinitesimally. Tags are set by the factories that
/// verified the property; they are trusted by downstream shape checks.
struct AlgElement {
  Mat mat;
  bool stabilizes_threeform = false;
  bool stabilizes_symplectic = false;
  bool skew_for_metric = false;

  explicit AlgElement(Mat m) : mat(std::move(m)) {}
};

/// Infinitesimal action of a on an alternating form:
///   (a . form)(v_1, ..., v_k) = -sum_p form(v_1, ..., a v_p, ..., v_k).
/// The identity matrix therefore acts on a k-form as multiplication by -k.
AltForm lie_action(const Mat& a, const AltForm& form);

struct StabilizerResult {
  int dim = 0;
  std::vector<AlgElement> basis;
};

/// Common annihilator of all the given forms inside gl(n): the nullspace of
/// the linear map a -> (lie_action(a, form_i))_i. Basis elements are tagged
/// with the degrees they kill (3 -> threeform, 2 -> symplectic).
StabilizerResult stabilizer_dim(const std::vector<AltForm>& forms);

UniPoly char_poly(const AlgElement& a);

struct G2Invariants {
  Scalar f, q;
};

/// Reads (f, q) off char_poly(a) = x^7 - f x^5 + (f^2/4) x^3 - q x.
/// Throws std::domain_error when the polynomial does not have that shape,
/// including when the x^3 coefficient fails to equal f^2/4 exactly.
G2Invariants g2_invariants(const AlgElement& a);

/// For skew a on an odd-dimensional space: alpha(u, w) = (a u, w) in the
/// standard dot product, and the canonical kernel vector v0 is defined by
/// alpha^m = m! i_{v0} vol where dim = 2m + 1. Requires a.mat skew.
std::vector<Scalar> canonical_v0(const AlgElement& a, const AltForm& vol);

/// For phi0 in sp(2m) whose characteristic polynomial x^{2m} + a_2 x^{2m-2}
/// + ... is even with vanishing constant term and one-dimensional kernel,
/// returns omega(phi0 e, e) + a_{2m-2}. A zero return value is the exact
/// degeneration condition on the kernel vector e. Throws std::domain_error
/// on any shape violation. The symplectic form is the standard one on basis
/// a_1..a_m, b_1..b_m with omega(a_i, b_j) = delta_ij.
Scalar quadratic_condition_check(const AlgElement& phi0, const std::vector<Scalar>& e);

/// The fiber model on 3+3 coordinates (x, y):
///   phi0 (x, y) = (cross(a, x) + M y, cross(a, y)),   M symmetric traceless.
/// The model's cross product is the reversed-orientation one,
/// cross(a, u) = u x a; with that convention the verified identity closes
/// with a plus sign (see verify_v0_equals_2a).
Mat fiform_element(const std::vector<Scalar>& a_param, const Mat& m_sym);

/// k0 (x, y) = (-2y, 0) as a 6x6 matrix.
Mat k0_matrix();

/// Matrix of omega((x1,y1),(x2,y2)) = (x1,y2) - (x2,y1) in the x,y basis.
Mat symplectic_matrix_xy();

/// Checks, exactly on every basis pair, that v0 = 2a satisfies
///   i_{v0} omega_norm2 (u1, u2) = omega(phi0 k0 u1, u2)
/// for phi0 = fiform_element(a, M). M must be symmetric and traceless
/// (std::invalid_argument otherwise). Returns true iff all 36 entries of
/// the two bilinear forms agree.
bool verify_v0_equals_2a(const std::vector<Scalar>& a_param, const Mat& m_sym);

}  // namespace g2x
