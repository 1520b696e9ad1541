#include "g2x/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace g2x {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& v : r.e) v = -v;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.e[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= o.e[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r = m;
  for (auto& v : r.e) v *= s;
  return r;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> r(rows, Scalar(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Mat::trace() const {
  if (rows != cols) throw std::invalid_argument("trace of non-square matrix");
  Scalar t(0);
  for (std::size_t i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

bool Mat::is_symmetric() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<std::size_t> rref_in_place(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Scalar inv = m.at(r, col).inverse();
    for (std::size_t j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref_in_place(m).size(); }

std::vector<std::vector<Scalar>> nullspace(const Mat& m0) {
  Mat m = m0;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(m.cols, Scalar(0));
    v[fc] = Scalar(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(pr, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Scalar d(1);
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t piv = col;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    const Scalar& p = m.at(col, col);
    d *= p;
    const Scalar inv = p.inverse();
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

UniPoly charpoly(const Mat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = a.rows;
  std::vector<Scalar> coef(n + 1, Scalar(0));
  coef[n] = Scalar(1);
  Mat mk = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Mat am = a * mk;
    const Scalar ck = -(am.trace() / Scalar(static_cast<long>(k)));
    coef[n - k] = ck;
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return UniPoly(std::move(coef));
}

Mat companion(const UniPoly& r) {
  if (r.degree() < 1) throw std::domain_error("companion needs degree >= 1");
  const UniPoly m = r.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  Mat c(n, n);
  for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = Scalar(1);
  for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -m.coeff(i);
  return c;
}

Scalar root_sum(const UniPoly& r, const RatFunc& h) {
  if (r.is_zero()) throw std::domain_error("root sum over the zero polynomial");
  if (!squarefree(r)) throw std::domain_error("root sum needs a squarefree polynomial");
  if (r.degree() == 0) return Scalar(0);
  const UniPoly m = r.monic();
  auto dinv = inverse_mod(h.den, m);
  if (!dinv) throw std::domain_error("denominator shares a root with the polynomial");
  const UniPoly g = divmod(h.num * *dinv, m).second;
  // trace of g(C) for C the companion matrix, by matrix Horner
  const Mat c = companion(m);
  const std::size_t n = c.rows;
  Mat acc(n, n);
  for (int k = g.degree(); k >= 0; --k) {
    acc = c * acc;
    const Scalar& gk = g.c[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += gk;
  }
  return acc.trace();
}

}  // namespace g2x
