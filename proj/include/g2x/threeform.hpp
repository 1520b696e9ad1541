#pragma once

#include <stdexcept>
#include <vector>

#include "g2x/exterior.hpp"
#include "g2x/matrix.hpp"

namespace g2x {

/// Raised when an exact computation would leave Q(i,√3) (a cube or square
/// root that does not exist in the field). Never silently approximated.
struct UnsupportedOrbitError : std::domain_error {
  UnsupportedOrbitError() : std::domain_error("outside supported orbit sample") {}
  explicit UnsupportedOrbitError(const std::string& msg) : std::domain_error(msg) {}
};

/// A 3-form in 7 dimensions together with the reference volume trivialization.
struct SevenFormData {
  AltForm rho;      // dim 7, degree 3
  AltForm vol_ref;  // dim 7, degree 7
};

/// A 3-form in 6 dimensions with the ambient symplectic form and volume.
struct SixFormData {
  AltForm omega3;   // dim 6, degree 3
  AltForm symp;     // dim 6, degree 2
  AltForm vol_ref;  // dim 6, degree 6
};

// Reference objects. Basis order in 6 dimensions is x1,x2,x3,y1,y2,y3 (so
// dual indices 1..3 are the xi-covectors and 4..6 the eta-covectors); in 7
// dimensions the extra direction is e7.
AltForm rho0();         // e123 + e456 + (e14 + e25 + e36) ^ e7
AltForm vol7_ref();     // 6 * e1234567, chosen so kappa(rho0) = 1/4
AltForm omega_norm1();  // e123 + e456
AltForm omega_norm2();  // e045-style degenerate normal form (see source)
AltForm omega_symp();   // e14 + e25 + e36
AltForm vol6_ref();     // e123456

SevenFormData seven_data(AltForm rho);   // attaches vol7_ref
SixFormData six_data(AltForm omega3);    // attaches omega_symp and vol6_ref

/// Coefficient of a top-degree form against a reference volume.
Scalar top_coeff(const AltForm& f, const AltForm& vol);

/// The symmetric bilinear form c(u,v) = (i_u rho ^ i_v rho ^ rho) / vol_ref.
Mat bilinear_c(const SevenFormData& d);

/// kappa with kappa^3 = det(bilinear_c) exactly; 0 iff the det vanishes.
/// Throws UnsupportedOrbitError when no exact cube root exists in the field.
Scalar kappa(const SevenFormData& d);

/// kappa(rho0) under vol7_ref; fixes the cube-root branch once and for all.
Scalar kappa_reference();

/// g = c / cbrt(kappa/kappa_reference). Normalizing by the reference value
/// keeps g inside the field on the whole sampled orbit and makes
/// metric(rho0) = bilinear_c(rho0); transforms as a bilinear form under
/// pullback. Throws on kappa = 0.
Mat metric_from_rho(const SevenFormData& d);

/// K(w) = form_to_vector(i_w omega3 ^ omega3, vol_ref), as a 6x6 matrix.
Mat k_omega(const SixFormData& d);

/// The scalar lambda with K^2 = lambda * identity (exact; K^2 failing to be
/// scalar signals an internal bug and throws logic_error).
Scalar lambda_invariant(const SixFormData& d);

struct EigenspacesW {
  std::vector<std::vector<Scalar>> w_plus;   // K acts as +sqrt_lambda
  std::vector<std::vector<Scalar>> w_minus;  // K acts as -sqrt_lambda
  Scalar sqrt_lambda;
};

/// Eigenspace bases for K when lambda is a nonzero perfect square in the
/// field; throws UnsupportedOrbitError otherwise (never approximates).
EigenspacesW eigenspaces_w(const SixFormData& d);

/// rho = omega7 + phi7 ^ vflat / g(v,v) with i_v omega7 = i_v phi7 = 0;
/// omega3/symp of `six` are the same pieces written in the computed basis
/// (columns of `basis`) of the g-orthogonal complement of v.
struct RhoSplit {
  Mat basis;  // 7 x 6
  SixFormData six;
  AltForm omega7, phi7, vflat;
  Scalar gvv;
};

RhoSplit decompose_rho(const SevenFormData& d, const std::vector<Scalar>& v);

}  // namespace g2x
