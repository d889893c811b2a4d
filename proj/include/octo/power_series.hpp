#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octo/octonion.hpp"

namespace octo {

/// Truncated series  sum_{n=0}^{N} x^n a_n  with coefficients on the right.
///
/// On the unit ball this represents a slice monogenic function. There is no
/// series product: products of slice monogenic functions are not slice
/// monogenic in general.
class PowerSeries {
 public:
  PowerSeries() : coeffs_{Octonion(0.0)} {}
  explicit PowerSeries(std::vector<Octonion> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
    for (const Octonion& a : coeffs_)
      if (!a.is_finite()) throw std::invalid_argument("power series coefficient is not finite");
  }
  PowerSeries(std::initializer_list<Octonion> coeffs) : PowerSeries(std::vector<Octonion>(coeffs)) {}

  /// The monomial x^n.
  static PowerSeries monomial(std::size_t n, const Octonion& coeff = 1.0) {
    std::vector<Octonion> c(n + 1, Octonion(0.0));
    c[n] = coeff;
    return PowerSeries(std::move(c));
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Octonion>& coefficients() const { return coeffs_; }
  /// a_n, zero beyond the truncation degree.
  Octonion coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Octonion(0.0); }

  /// f * alpha, every coefficient right-multiplied.
  PowerSeries right_multiply(const Octonion& alpha) const {
    std::vector<Octonion> c(coeffs_);
    for (Octonion& a : c) a = a * alpha;
    return PowerSeries(std::move(c));
  }

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    std::vector<Octonion> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coefficient(n) + g.coefficient(n);
    return PowerSeries(std::move(c));
  }
  friend PowerSeries operator*(const PowerSeries& f, double r) {
    std::vector<Octonion> c(f.coeffs_);
    for (Octonion& a : c) a *= r;
    return PowerSeries(std::move(c));
  }

 private:
  std::vector<Octonion> coeffs_;
};

/// sum_n power(x, n) * a_n. The powers are accumulated by right
/// multiplication, which is exactly what power() computes.
inline Octonion evaluate(const PowerSeries& f, const Octonion& x) {
  Octonion sum(0.0);
  Octonion xn(1.0);
  const auto& a = f.coefficients();
  for (std::size_t n = 0; n < a.size(); ++n) {
    sum += xn * a[n];
    if (n + 1 < a.size()) xn = xn * x;
  }
  return sum;
}

/// [f, g] = sum_n conj(b_n) a_n.
inline Octonion hardy_inner_coeff(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n_max = std::max(f.degree(), g.degree());
  Octonion sum(0.0);
  for (std::size_t n = 0; n <= n_max; ++n) sum += conjugate(g.coefficient(n)) * f.coefficient(n);
  return sum;
}

inline double hardy_norm(const PowerSeries& f) {
  double s = 0.0;
  for (const Octonion& a : f.coefficients()) s += norm_sq(a);
  return std::sqrt(s);
}

/// sum_n |a_n|^2 / (n + 1).
inline double bergman_norm_sq(const PowerSeries& f) {
  double s = 0.0;
  const auto& a = f.coefficients();
  for (std::size_t n = 0; n < a.size(); ++n) s += norm_sq(a[n]) / static_cast<double>(n + 1);
  return s;
}

struct ParaLinearity {
  double residual = 0;   // |Re[f a, g] - Re([f, g] a)|, vanishes identically
  Octonion full_gap;     // [f a, g] - [f, g] a, generally nonzero
};

inline ParaLinearity para_linearity_residual(const PowerSeries& f, const PowerSeries& g, const Octonion& alpha) {
  const Octonion lhs = hardy_inner_coeff(f.right_multiply(alpha), g);
  const Octonion rhs = hardy_inner_coeff(f, g) * alpha;
  return ParaLinearity{std::abs(lhs.real() - rhs.real()), lhs - rhs};
}

/// Coefficients conj(x)^n, n <= degree: the series of the slice Szegő kernel S(., x).
inline PowerSeries szego_series(const Octonion& x, std::size_t degree) {
  std::vector<Octonion> c(degree + 1);
  const Octonion xb = conjugate(x);
  Octonion p(1.0);
  for (std::size_t n = 0; n <= degree; ++n) {
    c[n] = p;
    p = p * xb;
  }
  return PowerSeries(std::move(c));
}

}  // namespace octo
