#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2x/poly.hpp"
#include "g2x/scalar.hpp"

namespace g2x {

/// Dense matrix over Q(i,√3), row-major.
class Mat {
 public:
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> e;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, Scalar(0)) {}
  static Mat identity(std::size_t n);

  Scalar& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * vector
  Mat transpose() const;
  Scalar trace() const;
  bool is_symmetric() const;
};

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(Mat& m);

std::size_t rank(Mat m);

/// Basis of the right nullspace; each vector has m.cols entries, and
/// rank + (number of vectors) = cols.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

Scalar det(Mat m);  // exact, Gaussian elimination; throws if not square

std::optional<Mat> inverse(const Mat& m);  // nullopt when singular

/// Monic characteristic polynomial det(x*I - A), by the trace recursion.
UniPoly charpoly(const Mat& a);

/// Companion matrix (subdiagonal ones, negated coefficients in the last
/// column) of r normalized monic; companion(z^2 - 1) = [[0,1],[1,0]].
/// Throws on degree < 1.
Mat companion(const UniPoly& r);

/// Sum of h over the roots of r (with multiplicity is excluded: r must be
/// squarefree), computed exactly as the trace of h evaluated on companion(r),
/// inverting den(h) modulo r. deg r = 0 gives 0 (empty root set).
/// Throws on non-squarefree r or gcd(r, den(h)) nonconstant.
Scalar root_sum(const UniPoly& r, const RatFunc& h);

}  // namespace g2x
