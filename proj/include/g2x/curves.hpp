#pragma once

#include <string>
#include <vector>

#include "g2x/matrix.hpp"
#include "g2x/poly.hpp"
#include "g2x/rng.hpp"

namespace g2x {

/// Family datum: base genus g >= 2 and the two coefficient polynomials of
/// the sextic x^6 - f x^4 + (f^2/4) x^2 - q over the base chart.
struct CurveFamily {
  int g_base = 2;
  UniPoly f, q;
};

/// q_dual = f^3/54 - q.
UniPoly dual_q(const CurveFamily& c);

/// The dual family (f, f^3/54 - q); applying it twice gives back c.
CurveFamily dualize(const CurveFamily& c);

/// Value of the spectral sextic at eigenvalue coordinate x over base point z.
Scalar spectral_poly(const CurveFamily& c, const Scalar& x, const Scalar& z);

/// The same sextic with already-evaluated chart values f, q.
Scalar sextic_at(const Scalar& f, const Scalar& q, const Scalar& x);

/// Discriminant of w^3 - f w^2 + (f^2/4) w - q (the sextic as a cubic in
/// w = x^2), as a polynomial over the base. Verifies the two factorizations
///   disc = q (f^3/2 - 27 q) = 27 q q_dual
/// exactly and throws std::logic_error if either fails.
UniPoly discriminant(const CurveFamily& c);

/// Randomized certificate of the discriminant identity with f, q treated as
/// independent scalars: 30 sample points, more than the total degree.
bool certify_discriminant_identity(Rng& rng);

/// Point of the full cameral curve: x^2 + y^2 = 2f/3 together with the
/// spectral sextic vanishing at x, for chart values f, q.
struct CameralPoint {
  Scalar x, y, f, q;
};

/// Validates both defining equations; throws std::domain_error otherwise.
CameralPoint make_cameral_point(const Scalar& x, const Scalar& y, const Scalar& f, const Scalar& q);

/// Random cameral point: sample x, y, set f = 3(x^2+y^2)/2, solve for q.
CameralPoint sample_w_point(Rng& rng);

struct EigenTriple {
  Scalar l1, l2, l3;
};

/// The three eigenvalue functions at a cameral point:
///   l1 = x,  l2 = (-x + sqrt3 y)/2,  l3 = (-x - sqrt3 y)/2.
/// They satisfy l1 + l2 + l3 = 0.
EigenTriple cameral_eigenvalues(const CameralPoint& p);

/// Element of the order-12 dihedral group acting on the (x, y) chart,
/// stored in normal form r^rot s^refl with rot in 0..5, refl in 0..1.
struct DihedralElement {
  int rot = 0;
  int refl = 0;
  Mat mat{2, 2};
};

/// Parses a word over r, s, R, S (capital = inverse) and reduces it.
DihedralElement d6_element(const std::string& word);
DihedralElement d6_from_normal_form(int rot, int refl);

/// All 12 group elements in normal-form order.
std::vector<DihedralElement> d6_all();

enum class QuotientKind {
  ByS,    // sextic in x over the base
  ByR3S,  // y^6 - f y^4 + (f^2/4) y^2 + q - f^3/54
};

/// Value of the named quotient-curve equation at coordinate t.
Scalar quotient_equation(QuotientKind k, const Scalar& f, const Scalar& q, const Scalar& t);

/// Certificate that substituting x^2 = 2f/3 - y^2 into the sextic (read as
/// a cubic in x^2) gives exactly minus the ByR3S equation, on 30 random
/// points, more than the total degree of the identity.
bool certify_quotient_substitution(Rng& rng);

/// z = x (x^2 - f/2); on the curve z^2 = q.
Scalar project_to_c(const Scalar& x, const Scalar& f_val);

/// All the integer invariants of the family at base genus g and rank
/// parameter m, kept exact in big integers because the group orders are
/// powers of two with large exponents.
struct NumerologyReport {
  int g = 0;
  int m = 0;
  BigInt g_s_gl;             // (2m)^2 (g-1) + 1
  BigInt g_s_g2;             // 36 (g-1) + 1
  BigInt g_c;                // 8 (g-1) + 1
  BigInt g_w;                // 84 (g-1) + 1
  BigInt g_sbar;             // (2m^2 - m)(g-1) + 1
  BigInt prym_dim_sp;        // 2m(m+1)(g-1)
  BigInt prym_dim_g2;        // 14 (g-1)
  BigInt base_dim_g2;        // 14 (g-1)
  BigInt order_sections;     // 2^{4m(g-1)}
  BigInt order_components;   // 2^{4m(g-1)-1}
  BigInt order_covering;     // 2^{4m(g-1)-2}
  BigInt order_p2;           // 2^{2 * 2m(m+1)(g-1)}
  BigInt chain_value;        // (g_s_g2 - g_sbar|_{m=3}) - (g_c - g)
  bool chain_ok = false;     // chain_value == 14 (g-1)
};

/// Requires g >= 2 and m >= 1 (std::invalid_argument otherwise).
NumerologyReport numerology(int g, int m);

}  // namespace g2x
