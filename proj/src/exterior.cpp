#include "g2x/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace g2x {

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

// Sign of merging two disjoint increasing index sets: (-1)^inversions where
// inversions counts pairs (i in a, j in b) with i > j.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inv = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    const int j = std::countr_zero(m);
    inv += popcount(a >> (j + 1));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

AltForm::AltForm(int dim_, int degree_) : dim(dim_), degree(degree_) {
  if (dim < 0 || dim > 8 || degree < 0 || degree > dim)
    throw std::invalid_argument("bad form dimension/degree");
}

AltForm AltForm::basis(int dim, const std::vector<int>& idx) {
  AltForm f(dim, static_cast<int>(idx.size()));
  std::uint32_t mask = 0;
  int prev = -1;
  for (int i : idx) {
    if (i <= prev || i >= dim) throw std::invalid_argument("indices must be strictly increasing and in range");
    mask |= (1u << i);
    prev = i;
  }
  f.terms[mask] = Scalar(1);
  return f;
}

void AltForm::add_term(std::uint32_t mask, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(mask);
  if (it == terms.end()) {
    terms.emplace(mask, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Scalar AltForm::coeff(std::uint32_t mask) const {
  auto it = terms.find(mask);
  return it == terms.end() ? Scalar(0) : it->second;
}

AltForm AltForm::operator-() const {
  AltForm r(dim, degree);
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

AltForm& AltForm::operator+=(const AltForm& o) {
  if (dim != o.dim || degree != o.degree) throw std::invalid_argument("form shape mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& o) {
  if (dim != o.dim || degree != o.degree) throw std::invalid_argument("form shape mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

AltForm operator*(const Scalar& s, const AltForm& f) {
  AltForm r(f.dim, f.degree);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : f.terms) r.terms.emplace(m, s * c);
  return r;
}

std::string AltForm::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (degree > 0) {
      out += "*e";
      for (int j = 0; j < dim; ++j)
        if (m & (1u << j)) out += std::to_string(j + 1);
    }
  }
  return out;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge dimension mismatch");
  if (a.degree + b.degree > a.dim) throw std::invalid_argument("wedge degree overflow");
  AltForm r(a.dim, a.degree + b.degree);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (ma & mb) continue;
      const Scalar prod = ca * cb;
      if (merge_sign(ma, mb) > 0)
        r.add_term(ma | mb, prod);
      else
        r.add_term(ma | mb, -prod);
    }
  return r;
}

AltForm interior(const std::vector<Scalar>& v, const AltForm& f) {
  if (static_cast<int>(v.size()) != f.dim) throw std::invalid_argument("vector length mismatch");
  if (f.degree < 1) throw std::invalid_argument("interior product needs degree >= 1");
  AltForm r(f.dim, f.degree - 1);
  for (const auto& [m, c] : f.terms) {
    int pos = 0;
    for (std::uint32_t bits = m; bits; bits &= bits - 1, ++pos) {
      const int j = std::countr_zero(bits);
      if (v[j].is_zero()) continue;
      const Scalar t = v[j] * c;
      r.add_term(m & ~(1u << j), (pos % 2 == 0) ? t : -t);
    }
  }
  return r;
}

Scalar eval_form(const AltForm& f, const std::vector<std::vector<Scalar>>& args) {
  if (static_cast<int>(args.size()) != f.degree) throw std::invalid_argument("argument count mismatch");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != f.dim) throw std::invalid_argument("vector length mismatch");
  if (f.degree == 0) return f.coeff(0);
  Scalar total(0);
  const std::size_t k = static_cast<std::size_t>(f.degree);
  for (const auto& [m, c] : f.terms) {
    Mat minor(k, k);
    std::size_t row = 0;
    for (std::uint32_t bits = m; bits; bits &= bits - 1, ++row) {
      const int j = std::countr_zero(bits);
      for (std::size_t s = 0; s < k; ++s) minor.at(row, s) = args[s][j];
    }
    total += c * det(minor);
  }
  return total;
}

AltForm pullback(const Mat& a, const AltForm& f) {
  if (static_cast<int>(a.rows) != f.dim) throw std::invalid_argument("pullback dimension mismatch");
  const int out_dim = static_cast<int>(a.cols);
  if (f.degree > out_dim) return AltForm(out_dim, out_dim);  // nothing survives
  if (f.degree == 0) {
    AltForm r(out_dim, 0);
    for (const auto& [m, c] : f.terms) r.terms.emplace(m, c);
    return r;
  }
  // Row i of A is the pullback of e^i as a 1-form on the source space.
  std::vector<AltForm> rows;
  rows.reserve(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    AltForm oneform(out_dim, 1);
    for (std::size_t j = 0; j < a.cols; ++j) oneform.add_term(1u << j, a.at(i, j));
    rows.push_back(std::move(oneform));
  }
  AltForm r(out_dim, f.degree);
  for (const auto& [m, c] : f.terms) {
    AltForm acc(out_dim, 0);
    acc.terms.emplace(0u, c);
    for (std::uint32_t bits = m; bits; bits &= bits - 1)
      acc = wedge(acc, rows[static_cast<std::size_t>(std::countr_zero(bits))]);
    r += acc;
  }
  return r;
}

AltForm top_form(int dim) {
  AltForm f(dim, dim);
  f.terms[(1u << dim) - 1] = Scalar(1);
  return f;
}

std::vector<Scalar> form_to_vector(const AltForm& f, const AltForm& vol) {
  if (vol.degree != vol.dim || vol.terms.size() != 1) throw std::invalid_argument("volume must be a top form");
  const std::uint32_t full = (1u << vol.dim) - 1;
  const Scalar cv = vol.coeff(full);
  if (cv.is_zero()) throw std::invalid_argument("volume must be nonzero");
  if (f.dim != vol.dim || f.degree != f.dim - 1) throw std::invalid_argument("form must have degree dim-1");
  const Scalar cinv = cv.inverse();
  std::vector<Scalar> v(static_cast<std::size_t>(f.dim), Scalar(0));
  for (int k = 0; k < f.dim; ++k) {
    const Scalar ck = f.coeff(full & ~(1u << k)) * cinv;
    v[static_cast<std::size_t>(k)] = (k % 2 == 0) ? ck : -ck;
  }
  return v;
}

}  // namespace g2x
