#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "g2x/cubic.hpp"
#include "g2x/curves.hpp"
#include "g2x/exterior.hpp"
#include "g2x/matrix.hpp"

namespace g2x {

/// All report output uses insertion-ordered objects so serialized bytes are
/// reproducible across runs and platforms.
using Json = nlohmann::ordered_json;

/// Malformed or out-of-contract input. The message names the offending
/// field so CLI users get an actionable error object.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalars serialize as four "num/den" strings: the coordinates on
// 1, i, sqrt3, i*sqrt3.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Polynomials as coefficient arrays, ascending degree.
Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

// Alternating forms as {dim, degree, terms: [{idx: [1-based ascending], c}]}.
Json altform_to_json(const AltForm& f);
AltForm altform_from_json(const Json& j);

// Matrices as row-major nested arrays of scalars.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json curve_to_json(const CurveFamily& c);
CurveFamily curve_from_json(const Json& j);

Json tangent_to_json(const TangentVec& t);
TangentVec tangent_from_json(const Json& j);

/// FNV-1a 64-bit digest of a canonical dump, rendered as 16 hex digits.
std::string digest(const Json& j);

}  // namespace g2x
