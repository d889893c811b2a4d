#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "octo/errors.hpp"
#include "octo/octonion.hpp"
#include "octo/quadrature.hpp"

namespace octo {

enum class DomainKind { ball, halfspace, strip };

/// Unit ball B_8, right half-space {x0 > 0} or strip {0 < x0 < d}.
/// `terms` is the symmetric truncation |n| <= N of the strip series.
struct DomainSpec {
  DomainKind kind = DomainKind::ball;
  double d = 1.0;
  std::uint32_t terms = 50;

  static DomainSpec ball() { return {}; }
  static DomainSpec halfspace() { return {DomainKind::halfspace, 1.0, 50}; }
  static DomainSpec strip(double width, std::uint32_t n = 50) {
    if (!(width > 0.0) || !std::isfinite(width)) throw std::invalid_argument("strip width d must be positive");
    if (n < 1) throw std::invalid_argument("strip truncation N must be at least 1");
    return {DomainKind::strip, width, n};
  }

  bool contains(const Octonion& x) const {
    switch (kind) {
      case DomainKind::ball: return norm_sq(x) < 1.0;
      case DomainKind::halfspace: return x.real() > 0.0;
      case DomainKind::strip: return x.real() > 0.0 && x.real() < d;
    }
    return false;
  }
};

inline std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::ball: return "ball";
    case DomainKind::halfspace: return "halfspace";
    case DomainKind::strip: return "strip";
  }
  return "?";
}

/// Which first factor the ball Bergman kernel uses:
/// 1 - |x|^2 |y|^2 (scalar) or 1 - |x|^2 y^2 (octonion).
enum class BergmanBallVariant { scalar_factor, octonion_factor };

inline constexpr double kKernelSingularNorm = 1e-12;
inline constexpr double kDefaultFdStep = 1e-4;

/// Central-difference sum_i e_i (df/dx_i), with e_i applied on the left.
template <class F>
Octonion cr_apply_fd(F&& f, const Octonion& x, double h = kDefaultFdStep) {
  Octonion sum(0.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const Octonion step = Octonion::unit(i) * h;
    const Octonion diff = (f(x + step) - f(x - step)) / (2.0 * h);
    sum += Octonion::unit(i) * diff;
  }
  return sum;
}

/// q0(x) = conj(x) / |x|^8.
inline Octonion cauchy_kernel(const Octonion& x, double eps = kKernelSingularNorm) {
  const double n2 = norm_sq(x);
  if (!(std::sqrt(n2) > eps)) throw Singularity("x = 0");
  return conjugate(x) / (n2 * n2 * n2 * n2);
}

namespace detail {

inline double pow8(double n2) {
  const double n4 = n2 * n2;
  return n4 * n4;
}

inline void guard(const Octonion& w, const char* set) {
  if (!(norm(w) > kKernelSingularNorm)) throw Singularity(set);
}

// v / |v|^8
inline Octonion szego_term(const Octonion& v) { return v / pow8(norm_sq(v)); }

// -2 d/dx0 [v / |v|^8] = -2 [|v|^8 - 8 v Re(v) |v|^6] / |v|^16
inline Octonion bergman_term(const Octonion& v) {
  const double n2 = norm_sq(v);
  const double n6 = n2 * n2 * n2;
  return -2.0 * (Octonion(n6 * n2) - v * (8.0 * v.real() * n6)) / (n6 * n6 * n2 * n2);
}

// Symmetric partial sum over |n| <= N, term(v + 2 d n) with sign (-1)^n if alternating.
template <class Term>
Octonion strip_sum(const Octonion& v, double d, std::uint32_t terms, bool alternating, Term&& term) {
  guard(v, "conj(x) + y + 2dn = 0");
  Octonion sum = term(v);
  for (std::uint32_t n = 1; n <= terms; ++n) {
    const double shift = 2.0 * d * static_cast<double>(n);
    const Octonion vp = v + shift, vm = v - shift;
    guard(vp, "conj(x) + y + 2dn = 0");
    guard(vm, "conj(x) + y + 2dn = 0");
    const Octonion pair = term(vp) + term(vm);
    if (alternating && n % 2 == 1)
      sum -= pair;
    else
      sum += pair;
  }
  return sum;
}

}  // namespace detail

/// Monogenic Szegő kernel S(x, y); left monogenic in x.
inline Octonion szego_kernel(const DomainSpec& dom, const Octonion& x, const Octonion& y) {
  switch (dom.kind) {
    case DomainKind::ball: {
      const Octonion w = 1.0 - conjugate(x) * y;
      detail::guard(w, "conj(x) y = 1");
      return detail::szego_term(w);
    }
    case DomainKind::halfspace: {
      const Octonion v = conjugate(x) + y;
      detail::guard(v, "conj(x) + y = 0");
      return detail::szego_term(v);
    }
    case DomainKind::strip:
      return detail::strip_sum(conjugate(x) + y, dom.d, dom.terms, true, detail::szego_term);
  }
  throw std::logic_error("unknown domain");
}

/// Monogenic Bergman kernel B(x, y). The variant only affects the ball.
inline Octonion bergman_kernel(const DomainSpec& dom, const Octonion& x, const Octonion& y,
                               BergmanBallVariant variant = BergmanBallVariant::scalar_factor) {
  switch (dom.kind) {
    case DomainKind::ball: {
      const Octonion w = 1.0 - conjugate(x) * y;
      detail::guard(w, "conj(x) y = 1");
      const Octonion f = variant == BergmanBallVariant::scalar_factor ? Octonion(1.0 - norm_sq(x) * norm_sq(y))
                                                                      : 1.0 - norm_sq(x) * (y * y);
      const double n2 = norm_sq(w);
      return (6.0 * (f * w) + 2.0 * (w * w)) / (detail::pow8(n2) * n2);
    }
    case DomainKind::halfspace: {
      const Octonion v = conjugate(x) + y;
      detail::guard(v, "conj(x) + y = 0");
      return detail::bergman_term(v);
    }
    case DomainKind::strip:
      return detail::strip_sum(conjugate(x) + y, dom.d, dom.terms, false, detail::bergman_term);
  }
  throw std::logic_error("unknown domain");
}

/// Unit normal-type weight omega(x): x/|x| on the ball (0 at the origin),
/// 1 on the half-space, -1 / 0 / +1 across the strip's midplane.
inline Octonion weight_factor(const DomainSpec& dom, const Octonion& x) {
  if (!dom.contains(x)) throw OutsideDomain("weight factor requested outside the domain interior");
  switch (dom.kind) {
    case DomainKind::ball: {
      const double n = norm(x);
      return n > 0.0 ? x / n : Octonion(0.0);
    }
    case DomainKind::halfspace: return 1.0;
    case DomainKind::strip: {
      const double mid = 0.5 * dom.d;
      if (x.real() < mid) return -1.0;
      if (x.real() > mid) return 1.0;
      return 0.0;
    }
  }
  throw std::logic_error("unknown domain");
}

enum class StripFamily { szego, bergman };

/// |P_{N+extra} - P_N| for the strip series at (x, y).
inline double strip_tail_estimate(StripFamily family, const DomainSpec& dom, const Octonion& x, const Octonion& y,
                                  std::uint32_t extra = 10) {
  if (dom.kind != DomainKind::strip) throw std::invalid_argument("tail estimate needs a strip domain");
  DomainSpec longer = dom;
  longer.terms += extra;
  auto eval = [&](const DomainSpec& s) {
    return family == StripFamily::szego ? szego_kernel(s, x, y) : bergman_kernel(s, x, y);
  };
  return distance(eval(longer), eval(dom));
}

/// (3/pi^4) int_{S^7} q0(y - x) (y f(y)) |dsigma(y)|, which reproduces f(x)
/// for f left monogenic on the closed ball.
template <class F>
McEstimate cauchy_integral_mc(F&& f, const Octonion& x, const SphereSampler& sampler) {
  constexpr double c = kSphereNormalization;
  McEstimate e = mc_sphere7(sampler, [&](const Octonion& y) { return cauchy_kernel(y - x) * (y * f(y)); });
  e.value *= c;
  e.std_error *= c;
  return e;
}

/// Average of f over B_8(x, r).
template <class F>
McEstimate mean_value_mc(F&& f, const Octonion& x, double r, const BallSampler& sampler) {
  McEstimate e = mc_ball8(sampler, x, r, f);
  const double vol = std::pow(r, 8) * kBall8Volume;
  e.value /= vol;
  e.std_error /= vol;
  return e;
}

}  // namespace octo
