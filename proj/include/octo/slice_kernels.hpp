#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "octo/errors.hpp"
#include "octo/inner_products.hpp"
#include "octo/monogenic.hpp"
#include "octo/octonion.hpp"
#include "octo/power_series.hpp"
#include "octo/quadrature.hpp"
#include "octo/slice.hpp"

namespace octo {

namespace detail {

inline Octonion guarded_inverse(const Octonion& den, const char* set) {
  if (!(norm(den) > kKernelSingularNorm)) throw Singularity(set);
  return inverse(den);
}

}  // namespace detail

/// True when x lies in the plane R + R I within tol.
inline bool on_slice(const Octonion& x, const ImaginaryUnit& i, double tol = 1e-12) {
  const Octonion proj = Octonion(x.real()) + i.value() * euclid_inner(x, i.value());
  return distance(x, proj) <= tol;
}

/// Left slice Cauchy kernel -(x^2 - 2 Re(s) x + |s|^2)^-1 (x - conj(s)).
/// On a common slice it is (s - x)^-1.
inline Octonion slice_cauchy_kernel(const Octonion& s, const Octonion& x) {
  const Octonion den = x * x - (2.0 * s.real()) * x + norm_sq(s);
  return -(detail::guarded_inverse(den, "x in [s]") * (x - conjugate(s)));
}

/// Slice Szegő kernel of the unit ball, (1 - 2 Re(x) y + |x|^2 y^2)^-1 (1 - y x)
/// = sum_n y^n conj(x)^n.
inline Octonion slice_szego_ball(const Octonion& y, const Octonion& x) {
  const Octonion den = 1.0 - (2.0 * x.real()) * y + norm_sq(x) * (y * y);
  return detail::guarded_inverse(den, "x in [y^-1]") * (1.0 - y * x);
}

/// Half-space slice Hardy kernel (1/2pi)(conj(x) + conj(y))(|x|^2 + 2 Re(x) conj(y) + conj(y)^2)^-1.
inline Octonion slice_szego_halfspace(const Octonion& x, const Octonion& y) {
  const Octonion yb = conjugate(y);
  const Octonion den = norm_sq(x) + (2.0 * x.real()) * yb + yb * yb;
  return ((conjugate(x) + yb) * detail::guarded_inverse(den, "x in [-conj(y)]")) / (2.0 * std::numbers::pi);
}

/// The same kernel in its second printed form
/// (1/2pi)(|y|^2 + 2 Re(y) x + x^2)^-1 (x + y).
inline Octonion slice_szego_halfspace_dual(const Octonion& x, const Octonion& y) {
  const Octonion den = norm_sq(y) + (2.0 * y.real()) * x + x * x;
  return (detail::guarded_inverse(den, "x in [-conj(y)]") * (x + y)) / (2.0 * std::numbers::pi);
}

/// Strip kernel K(y, x) = sum_n (-1)^n k(y + 2dn, x), |n| <= N paired.
inline Octonion slice_szego_strip(const Octonion& y, const Octonion& x, double d, std::uint32_t terms) {
  Octonion sum = slice_szego_halfspace(y, x);
  for (std::uint32_t n = 1; n <= terms; ++n) {
    const double shift = 2.0 * d * static_cast<double>(n);
    const Octonion pair = slice_szego_halfspace(y + shift, x) + slice_szego_halfspace(y - shift, x);
    if (n % 2 == 1)
      sum -= pair;
    else
      sum += pair;
  }
  return sum;
}

/// Slice Bergman kernel of the unit ball,
/// (1/pi)(1 - 2 conj(x) conj(y) + conj(x)^2 conj(y)^2)(1 - 2 Re(x) conj(y) + |x|^2 conj(y)^2)^-2.
inline Octonion slice_bergman_ball(const Octonion& x, const Octonion& y) {
  const Octonion xb = conjugate(x), yb = conjugate(y);
  const Octonion num = 1.0 - 2.0 * (xb * yb) + (xb * xb) * (yb * yb);
  const Octonion den = 1.0 - (2.0 * x.real()) * yb + norm_sq(x) * (yb * yb);
  const Octonion inv = detail::guarded_inverse(den, "x in [conj(y)^-1]");
  return (num * (inv * inv)) / std::numbers::pi;
}

/// Half-space slice Bergman kernel (1/pi)(x^2 + 2 Re(y) x + |y|^2)^-2 (x^2 + 2 x y + y^2).
inline Octonion slice_bergman_halfspace(const Octonion& x, const Octonion& y) {
  const Octonion den = x * x + (2.0 * y.real()) * x + norm_sq(y);
  const Octonion inv = detail::guarded_inverse(den, "x in [-y]");
  return ((inv * inv) * (x * x + 2.0 * (x * y) + y * y)) / std::numbers::pi;
}

/// Strip slice Bergman kernel, sum over |n| <= N of the half-space kernel at y + 2dn.
inline Octonion slice_bergman_strip(const Octonion& x, const Octonion& y, double d, std::uint32_t terms) {
  Octonion sum = slice_bergman_halfspace(x, y);
  for (std::uint32_t n = 1; n <= terms; ++n) {
    const double shift = 2.0 * d * static_cast<double>(n);
    sum += slice_bergman_halfspace(x, y + shift) + slice_bergman_halfspace(x, y - shift);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Inner products on a slice, in the product interface of inner_products.hpp.

/// [f, g]_I = (1/2pi) int conj(t g(z)) (t f(z)) dtheta, z = e^{I theta}, t = I z.
class CircleProduct {
 public:
  using Point = double;
  CircleProduct(ImaginaryUnit axis, CircleRule rule) : axis_(axis), rule_(rule) {}

  Octonion at(double theta) const { return Octonion(std::cos(theta)) + axis_.value() * std::sin(theta); }
  Octonion pair(const Octonion& fx, const Octonion& gx, double theta) const {
    const Octonion t = axis_.value() * at(theta);
    return conjugate(t * gx) * (t * fx);
  }
  template <class F>
  McEstimate integrate(F&& per_point) const {
    return McEstimate{integrate_circle(rule_, per_point) / (2.0 * std::numbers::pi), 0.0, rule_.size()};
  }

 private:
  ImaginaryUnit axis_;
  CircleRule rule_;
};

struct PolarPoint {
  double r;
  double theta;
};

/// <f, g>_I = int conj(g) f dsigma~ over the unit disk of C_I, dsigma~ = du dv / pi.
class DiskProduct {
 public:
  using Point = PolarPoint;
  DiskProduct(ImaginaryUnit axis, DiskRule rule) : axis_(axis), rule_(std::move(rule)) {}

  Octonion at(const PolarPoint& p) const {
    return Octonion(p.r * std::cos(p.theta)) + axis_.value() * (p.r * std::sin(p.theta));
  }
  Octonion pair(const Octonion& fx, const Octonion& gx, const PolarPoint&) const { return conjugate(gx) * fx; }
  template <class F>
  McEstimate integrate(F&& per_point) const {
    const Octonion v = integrate_disk(
        rule_, [&](double r, double theta) { return per_point(PolarPoint{r, theta}); }, DiskMeasure::normalized);
    return McEstimate{v, 0.0, rule_.radii().size() * rule_.angular().size()};
  }

 private:
  ImaginaryUnit axis_;
  DiskRule rule_;
};

inline Octonion slice_hardy_inner_circle(const PowerSeries& f, const PowerSeries& g, const ImaginaryUnit& axis,
                                         const CircleRule& rule) {
  const CircleProduct ip(axis, rule);
  return inner(ip, [&](const Octonion& x) { return evaluate(f, x); }, [&](const Octonion& x) { return evaluate(g, x); })
      .value;
}

inline Octonion slice_bergman_inner_disk(const PowerSeries& f, const PowerSeries& g, const ImaginaryUnit& axis,
                                         const DiskRule& rule) {
  const DiskProduct ip(axis, rule);
  return inner(ip, [&](const Octonion& x) { return evaluate(f, x); }, [&](const Octonion& x) { return evaluate(g, x); })
      .value;
}

// ---------------------------------------------------------------------------
// Reproduction

/// [f, S(., x)] in coefficient form: sum_n conj(conj(x)^n) a_n.
inline Octonion slice_reproduce_coefficient(const PowerSeries& f, const Octonion& x) {
  return hardy_inner_coeff(f, szego_series(x, f.degree()));
}

namespace detail {

// Evaluates an on-slice rule at x, through the representation formula when
// x is not on C_I.
template <class OnSlice>
Octonion via_slice(OnSlice&& on_slice_value, const Octonion& x, const ImaginaryUnit& axis) {
  if (on_slice(x, axis)) return on_slice_value(x);
  return reconstruct_from_slice(on_slice_value, x, axis);
}

}  // namespace detail

/// (1/2pi) int S(x, y) f(y) dtheta over the unit circle of C_I.
inline Octonion slice_reproduce_circle(const PowerSeries& f, const Octonion& x, const ImaginaryUnit& axis,
                                       const CircleRule& rule) {
  auto at_slice = [&](const Octonion& z) {
    const Octonion v = integrate_circle(rule, [&](double theta) {
      const Octonion y = Octonion(std::cos(theta)) + axis.value() * std::sin(theta);
      return slice_szego_ball(z, y) * evaluate(f, y);
    });
    return v / (2.0 * std::numbers::pi);
  };
  return detail::via_slice(at_slice, x, axis);
}

/// int B(x, y) f(y) du dv over the unit disk of C_I (area measure; the
/// kernel carries the 1/pi).
inline Octonion slice_reproduce_disk(const PowerSeries& f, const Octonion& x, const ImaginaryUnit& axis,
                                     const DiskRule& rule) {
  auto at_slice = [&](const Octonion& z) {
    return integrate_disk(
        rule,
        [&](double r, double theta) {
          const Octonion y = Octonion(r * std::cos(theta)) + axis.value() * (r * std::sin(theta));
          return slice_bergman_ball(z, y) * evaluate(f, y);
        },
        DiskMeasure::area);
  };
  return detail::via_slice(at_slice, x, axis);
}

}  // namespace octo
