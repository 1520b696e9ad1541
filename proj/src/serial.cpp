#include "g2x/serial.hpp"

#include <cstdint>

namespace g2x {

namespace {

Rational rational_field(const Json& j, const char* where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": expected a \"num/den\" string");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  return Json::array({rational_to_string(s.a), rational_to_string(s.b), rational_to_string(s.c),
                      rational_to_string(s.d)});
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("scalar: expected an array of four \"num/den\" strings");
  return Scalar(rational_field(j[0], "scalar[0]"), rational_field(j[1], "scalar[1]"),
                rational_field(j[2], "scalar[2]"), rational_field(j[3], "scalar[3]"));
}

Json unipoly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(scalar_to_json(p.coeff(k)));
  return arr;
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of scalars");
  std::vector<Scalar> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(scalar_from_json(c));
  return UniPoly(std::move(coeffs));
}

Json altform_to_json(const AltForm& f) {
  Json out;
  out["dim"] = f.dim;
  out["degree"] = f.degree;
  Json terms = Json::array();
  for (const auto& [mask, c] : f.terms) {
    Json idx = Json::array();
    for (int i = 0; i < f.dim; ++i)
      if (mask & (std::uint32_t{1} << i)) idx.push_back(i + 1);
    Json term;
    term["idx"] = std::move(idx);
    term["c"] = scalar_to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

AltForm altform_from_json(const Json& j) {
  const Json& jdim = field(j, "dim", "form");
  const Json& jdeg = field(j, "degree", "form");
  if (!jdim.is_number_integer() || !jdeg.is_number_integer())
    throw ParseError("form: dim and degree must be integers");
  const int dim = jdim.get<int>();
  const int degree = jdeg.get<int>();
  if (dim < 1 || dim > 8) throw ParseError("form: dim must be between 1 and 8");
  if (degree < 0 || degree > dim) throw ParseError("form: degree must be between 0 and dim");
  AltForm f(dim, degree);
  const Json& terms = field(j, "terms", "form");
  if (!terms.is_array()) throw ParseError("form: terms must be an array");
  for (const Json& term : terms) {
    const Json& idx = field(term, "idx", "form term");
    if (!idx.is_array() || static_cast<int>(idx.size()) != degree)
      throw ParseError("form term: idx must list exactly degree indices");
    std::uint32_t mask = 0;
    int prev = 0;
    for (const Json& ji : idx) {
      if (!ji.is_number_integer()) throw ParseError("form term: indices must be integers");
      const int i = ji.get<int>();
      if (i < 1 || i > dim) throw ParseError("form term: index out of range");
      if (i <= prev) throw ParseError("form term: indices must be strictly increasing");
      prev = i;
      mask |= std::uint32_t{1} << (i - 1);
    }
    f.add_term(mask, scalar_from_json(field(term, "c", "form term")));
  }
  return f;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("matrix: rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("matrix: ragged rows are not allowed");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

Json curve_to_json(const CurveFamily& c) {
  Json out;
  out["g_base"] = c.g_base;
  out["f"] = unipoly_to_json(c.f);
  out["q"] = unipoly_to_json(c.q);
  return out;
}

CurveFamily curve_from_json(const Json& j) {
  const Json& jg = field(j, "g_base", "curve");
  if (!jg.is_number_integer()) throw ParseError("curve: g_base must be an integer");
  CurveFamily c;
  c.g_base = jg.get<int>();
  if (c.g_base < 2) throw ParseError("curve: g_base must be at least 2");
  c.f = unipoly_from_json(field(j, "f", "curve"));
  c.q = unipoly_from_json(field(j, "q", "curve"));
  return c;
}

Json tangent_to_json(const TangentVec& t) {
  Json out;
  out["f_dot"] = unipoly_to_json(t.f_dot);
  out["q_dot"] = unipoly_to_json(t.q_dot);
  return out;
}

TangentVec tangent_from_json(const Json& j) {
  TangentVec t;
  t.f_dot = unipoly_from_json(field(j, "f_dot", "tangent"));
  t.q_dot = unipoly_from_json(field(j, "q_dot", "tangent"));
  return t;
}

std::string digest(const Json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace g2x
