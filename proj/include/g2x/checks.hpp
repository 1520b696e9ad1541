#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2x/cubic.hpp"
#include "g2x/curves.hpp"
#include "g2x/liealg.hpp"
#include "g2x/rng.hpp"
#include "g2x/threeform.hpp"

namespace g2x {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

// Deterministic samplers. All matrices have rational entries.
Mat random_matrix(Rng& rng, std::size_t n, long max_abs, long max_den = 1);
Mat random_gl(Rng& rng, std::size_t n, long max_abs = 3, long max_den = 1);

/// Random element of Sp(6, Q) for the standard form on x, y coordinates,
/// built as a short product of exact symplectic generators.
Mat random_symplectic6(Rng& rng);

Mat random_sym_traceless3(Rng& rng, long max_abs = 3);

/// Random skew matrix, rational entries.
Mat random_skew(Rng& rng, std::size_t n, long max_abs = 3);

/// Random polynomial of degree at most max_deg; rational coefficients, or
/// full field coefficients when field is true.
UniPoly random_poly(Rng& rng, int max_deg, long max_abs, long max_den = 1, bool field = false);

/// Random admissible curve family with deg f <= df, deg q <= dq (resamples
/// until require_admissible passes).
CurveFamily random_admissible_curve(Rng& rng, int df, int dq, bool field = false);

// Named property suites behind the check command. count scales the sampled
// portions; count = 0 short-circuits every suite to a vacuous pass.
std::vector<CheckResult> run_threeform_suite(std::uint64_t seed, int count);
std::vector<CheckResult> run_liealg_suite(std::uint64_t seed, int count);
std::vector<CheckResult> run_curves_suite(std::uint64_t seed, int count);
std::vector<CheckResult> run_cubic_suite(std::uint64_t seed, int count);

}  // namespace g2x
