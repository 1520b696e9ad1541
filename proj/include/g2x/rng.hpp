#pragma once

#include <cstdint>

#include "g2x/scalar.hpp"

namespace g2x {

/// Deterministic splitmix64 generator. Hand-rolled on purpose: report bytes
/// must be identical across platforms and standard library versions, which
/// std::mt19937 distributions do not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  Rational rational(long max_abs, long max_den = 1) {
    const std::int64_t num = uniform(-max_abs, max_abs);
    const std::int64_t den = uniform(1, max_den);
    return Rational(num) / Rational(den);
  }

  Rational nonzero_rational(long max_abs, long max_den = 1) {
    while (true) {
      Rational r = rational(max_abs, max_den);
      if (r != 0) return r;
    }
  }

  Scalar scalar(long max_abs, long max_den = 1) {
    Rational a = rational(max_abs, max_den), b = rational(max_abs, max_den);
    Rational c = rational(max_abs, max_den), d = rational(max_abs, max_den);
    return Scalar(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  Scalar nonzero_scalar(long max_abs, long max_den = 1) {
    while (true) {
      Scalar s = scalar(max_abs, max_den);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace g2x
