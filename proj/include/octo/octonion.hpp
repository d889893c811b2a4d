#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "octo/errors.hpp"

namespace octo {

/// Signed basis index: e_i * e_j = sign * e_index.
struct BasisProduct {
  int sign;
  std::size_t index;

  constexpr bool operator==(const BasisProduct&) const = default;
};

namespace detail {

// Imaginary multiplication table, row e_i times column e_j (i, j = 1..7),
// with e4 = e1 e2, e5 = e1 e3, e6 = e2 e3, e7 = e4 e3.
// Entry {s, k} stands for s * e_k, k = 0 meaning the real unit.
inline constexpr BasisProduct kImaginaryTable[7][7] = {
    {{-1, 0}, {+1, 4}, {+1, 5}, {-1, 2}, {-1, 3}, {-1, 7}, {+1, 6}},
    {{-1, 4}, {-1, 0}, {+1, 6}, {+1, 1}, {+1, 7}, {-1, 3}, {-1, 5}},
    {{-1, 5}, {-1, 6}, {-1, 0}, {-1, 7}, {+1, 1}, {+1, 2}, {+1, 4}},
    {{+1, 2}, {-1, 1}, {+1, 7}, {-1, 0}, {-1, 6}, {+1, 5}, {-1, 3}},
    {{+1, 3}, {-1, 7}, {-1, 1}, {+1, 6}, {-1, 0}, {-1, 4}, {+1, 2}},
    {{+1, 7}, {+1, 3}, {-1, 2}, {-1, 5}, {+1, 4}, {-1, 0}, {-1, 1}},
    {{-1, 6}, {+1, 5}, {-1, 4}, {+1, 3}, {-1, 2}, {+1, 1}, {-1, 0}},
};

constexpr std::array<std::array<BasisProduct, 8>, 8> make_full_table() {
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (std::size_t i = 0; i < 8; ++i) {
    t[0][i] = {+1, i};
    t[i][0] = {+1, i};
  }
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j) t[i][j] = kImaginaryTable[i - 1][j - 1];
  return t;
}

}  // namespace detail

/// Full 8x8 signed product table including e0 = 1.
inline constexpr auto kProductTable = detail::make_full_table();

/// e_i * e_j as a signed basis element.
constexpr BasisProduct basis_product(std::size_t i, std::size_t j) { return kProductTable.at(i).at(j); }

/// An element x = c0 + c1 e1 + ... + c7 e7 of the octonions.
///
/// Plain value type. Every operation is pure, so instances may be shared freely
/// across threads.
class Octonion {
 public:
  static constexpr std::size_t kDim = 8;
  using Components = std::array<double, kDim>;

  constexpr Octonion() = default;
  // Reals embed as c0; implicit so that `x + 1.0` and `Octonion one = 1.0` read naturally.
  constexpr Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}  // NOLINT
  constexpr explicit Octonion(const Components& c) : c_(c) {}

  /// The basis element e_i (e_0 = 1).
  static constexpr Octonion unit(std::size_t i) {
    Components c{};
    c.at(i) = 1.0;
    return Octonion(c);
  }

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const Components& components() const { return c_; }

  constexpr double real() const { return c_[0]; }
  constexpr Octonion imag() const {
    Octonion r = *this;
    r.c_[0] = 0.0;
    return r;
  }

  bool is_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) {
    for (double& v : c_) v /= s;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator-(Octonion a) {
    for (double& v : a.c_) v = -v;
    return a;
  }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
  friend constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

  /// Octonion product (non-associative); see multiply().
  friend constexpr Octonion operator*(const Octonion& a, const Octonion& b);

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Components c_{};
};

/// Bilinear product through the signed table.
constexpr Octonion multiply(const Octonion& a, const Octonion& b) {
  Octonion::Components out{};
  for (std::size_t i = 0; i < 8; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const BasisProduct p = kProductTable[i][j];
      out[p.index] += p.sign * ai * b[j];
    }
  }
  return Octonion(out);
}

constexpr Octonion operator*(const Octonion& a, const Octonion& b) { return multiply(a, b); }

constexpr Octonion conjugate(const Octonion& a) {
  Octonion r = -a;
  r[0] = a[0];
  return r;
}

constexpr double norm_sq(const Octonion& a) {
  double s = 0.0;
  for (double v : a.components()) s += v * v;
  return s;
}

/// Euclidean length; rescales when the squared sum would under- or overflow.
inline double norm(const Octonion& a) {
  const double n2 = norm_sq(a);
  if (n2 >= std::numeric_limits<double>::min() && n2 <= std::numeric_limits<double>::max()) return std::sqrt(n2);
  double m = 0.0;
  for (double v : a.components()) m = std::max(m, std::abs(v));
  if (m == 0.0 || !std::isfinite(m)) return m;
  return m * std::sqrt(norm_sq(a / m));
}

/// Default threshold below which an element counts as zero for inversion.
inline constexpr double kDefaultSingularNorm = std::numeric_limits<double>::min();

/// conj(a)/|a|^2. Throws SingularElement when |a| <= eps.
inline Octonion inverse(const Octonion& a, double eps = kDefaultSingularNorm) {
  const double n = norm(a);
  if (!(n > eps)) throw SingularElement("inverse of a (near-)zero octonion");
  return (conjugate(a) / n) / n;
}

/// Euclidean inner product of R^8, equal to Re(a conj(b)).
constexpr double euclid_inner(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

/// (ab)c - a(bc).
constexpr Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

/// a^n by repeated right multiplication, a^0 = 1.
///
/// Powers of a single element live in an associative subalgebra, so the
/// grouping does not change the value (up to rounding).
constexpr Octonion power(const Octonion& a, std::uint32_t n) {
  Octonion r = 1.0;
  for (std::uint32_t k = 0; k < n; ++k) r = r * a;
  return r;
}

inline double distance(const Octonion& a, const Octonion& b) { return norm(a - b); }

/// Absolute residuals of the alternative-algebra identities on a triple.
struct IdentityResiduals {
  double left_alternativity = 0;   // a(ab) - (aa)b
  double right_alternativity = 0;  // (ba)a - b(aa)
  double flexibility = 0;          // (ab)a - a(ba)
  std::array<double, 4> moufang{};
  double norm_composition = 0;     // |ab| - |a||b|
  double real_associativity = 0;   // Re((ab)c) - Re(a(bc))
  double adjoint = 0;              // <ab,c> - <b, conj(a) c>
  double scale = 1;                // |a||b||c| + 1

  double max_abs() const {
    double m = std::max({left_alternativity, right_alternativity, flexibility, norm_composition,
                         real_associativity, adjoint});
    for (double v : moufang) m = std::max(m, v);
    return m;
  }
  double max_normalized() const { return max_abs() / scale; }
};

/// Residuals of alternativity, flexibility, the four Moufang identities
/// (with z = a, x = b, y = c), norm composition, Re((ab)c) = Re(a(bc)) and
/// <ab,c> = <b, conj(a)c>.
inline IdentityResiduals identity_residuals(const Octonion& a, const Octonion& b, const Octonion& c) {
  IdentityResiduals r;
  r.left_alternativity = distance(a * (a * b), (a * a) * b);
  r.right_alternativity = distance((b * a) * a, b * (a * a));
  r.flexibility = distance((a * b) * a, a * (b * a));
  const Octonion& z = a;
  const Octonion& x = b;
  const Octonion& y = c;
  r.moufang[0] = distance(z * (x * (z * y)), ((z * x) * z) * y);
  r.moufang[1] = distance(x * (z * (y * z)), ((x * z) * y) * z);
  r.moufang[2] = distance((z * x) * (y * z), (z * (x * y)) * z);
  r.moufang[3] = distance((z * x) * (y * z), z * ((x * y) * z));
  r.norm_composition = std::abs(norm(a * b) - norm(a) * norm(b));
  r.real_associativity = std::abs(((a * b) * c).real() - (a * (b * c)).real());
  r.adjoint = std::abs(euclid_inner(a * b, c) - euclid_inner(b, conjugate(a) * c));
  r.scale = norm(a) * norm(b) * norm(c) + 1.0;
  return r;
}

}  // namespace octo
