#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "octo/monogenic.hpp"
#include "octo/octonion.hpp"
#include "octo/power_series.hpp"
#include "octo/quadrature.hpp"

namespace octo {

/// One axiom check: an absolute residual and, for Monte Carlo products, its
/// standard error (0 for deterministic rules).
struct AxiomCheck {
  double residual = 0;
  double std_error = 0;

  bool passes(double tol) const { return residual <= std::max(4.0 * std_error, tol); }
};

/// Residuals of the octonionic Hilbert space axioms:
///   additivity   (f + g, h) = (f, h) + (g, h)
///   hermitian    conj((f, g)) = (g, f)
///   positivity   (f, f) real and >= 0
///   homogeneity  (r f, g) = r (f, g), r real
///   axiom_v      (f a, f) = (f, f) a
///   para_linear  Re (f a, g) = Re ((f, g) a)
struct AxiomResiduals {
  AxiomCheck additivity, hermitian, positivity, homogeneity, axiom_v, para_linearity;

  bool all_pass(double tol) const {
    return additivity.passes(tol) && hermitian.passes(tol) && positivity.passes(tol) && homogeneity.passes(tol) &&
           axiom_v.passes(tol) && para_linearity.passes(tol);
  }
};

struct InnerProductReport {
  Octonion value;
  double std_error = 0;
  AxiomResiduals axioms;
};

/// The i-th real component <f, g>_i of an octonion-valued inner product.
inline double component_inner(const Octonion& ip_value, std::size_t i) {
  if (i > 7) throw std::out_of_range("component index must be in 0..7");
  return ip_value[i];
}

// ---------------------------------------------------------------------------
// Products as integration rules. Every product P exposes
//   P::Point                                  quadrature point
//   Octonion at(const Point&)                 where f and g are evaluated
//   Octonion pair(fx, gx, const Point&)       weighted integrand conj(w g)(w f)
//   McEstimate integrate(per_point)           the rule applied to per_point
// so that the axiom suite can integrate pointwise differences on one sample set.

/// (f, g) = (3/pi^4) int_{S^7} conj(x g(x)) (x f(x)) |dsigma(x)|.
class BoundaryMcProduct {
 public:
  using Point = Octonion;
  explicit BoundaryMcProduct(SphereSampler sampler) : sampler_(sampler) {}

  Octonion at(const Point& x) const { return x; }
  Octonion pair(const Octonion& fx, const Octonion& gx, const Point& x) const {
    return conjugate(x * gx) * (x * fx);
  }
  template <class F>
  McEstimate integrate(F&& per_point) const {
    McEstimate e = mc_sphere7(sampler_, per_point);
    e.value *= kSphereNormalization;
    e.std_error *= kSphereNormalization;
    return e;
  }

 private:
  SphereSampler sampler_;
};

/// (f, g) = (3/pi^4) int_{B_8} conj(w(x) g(x)) (w(x) f(x)) dV(x) with the
/// weight factor w of the unit ball; `flip_weight` uses -w instead.
class VolumeMcProduct {
 public:
  using Point = Octonion;
  explicit VolumeMcProduct(BallSampler sampler, bool flip_weight = false)
      : sampler_(sampler), sign_(flip_weight ? -1.0 : 1.0) {}

  Octonion at(const Point& x) const { return x; }
  Octonion pair(const Octonion& fx, const Octonion& gx, const Point& x) const {
    const Octonion w = weight_factor(DomainSpec::ball(), x) * sign_;
    return conjugate(w * gx) * (w * fx);
  }
  template <class F>
  McEstimate integrate(F&& per_point) const {
    McEstimate e = mc_ball8(sampler_, Octonion(0.0), 1.0, per_point);
    e.value *= kSphereNormalization;
    e.std_error *= kSphereNormalization;
    return e;
  }

 private:
  BallSampler sampler_;
  double sign_;
};

/// (f, g) under any product P.
template <class P, class F, class G>
McEstimate inner(const P& ip, F&& f, G&& g) {
  return ip.integrate([&](const typename P::Point& p) {
    const Octonion x = ip.at(p);
    return ip.pair(f(x), g(x), p);
  });
}

/// Hardy inner product on the unit sphere, Monte Carlo.
template <class F, class G>
InnerProductReport hardy_inner_ball_mc(F&& f, G&& g, const SphereSampler& sampler) {
  const McEstimate e = inner(BoundaryMcProduct(sampler), f, g);
  return InnerProductReport{e.value, e.std_error, {}};
}

/// Bergman inner product on the unit ball, Monte Carlo. Only the ball is
/// bounded, so other domains are rejected.
template <class F, class G>
InnerProductReport bergman_inner_mc(const DomainSpec& dom, F&& f, G&& g, const BallSampler& sampler,
                                    bool flip_weight = false) {
  if (dom.kind != DomainKind::ball) throw std::invalid_argument("volume Monte Carlo is only defined on the unit ball");
  const McEstimate e = inner(VolumeMcProduct(sampler, flip_weight), f, g);
  return InnerProductReport{e.value, e.std_error, {}};
}

/// (f, S(., y)) on the unit sphere, which reproduces f(y) for Hardy-class f.
template <class F>
McEstimate szego_projection_mc(F&& f, const Octonion& y, const SphereSampler& sampler) {
  const DomainSpec ball = DomainSpec::ball();
  return inner(BoundaryMcProduct(sampler), f, [&](const Octonion& x) { return szego_kernel(ball, x, y); });
}

/// (f, B(., y)) on the unit ball with the chosen Bergman kernel variant.
template <class F>
McEstimate bergman_projection_mc(F&& f, const Octonion& y, const BallSampler& sampler,
                                 BergmanBallVariant variant = BergmanBallVariant::scalar_factor) {
  const DomainSpec ball = DomainSpec::ball();
  return inner(VolumeMcProduct(sampler), f, [&](const Octonion& x) { return bergman_kernel(ball, x, y, variant); });
}

// ---------------------------------------------------------------------------
// Axiom suites

/// Axioms for a quadrature or Monte Carlo product. Scaling by alpha is
/// pointwise, (f alpha)(x) = f(x) alpha. Each residual is the rule applied to
/// the pointwise difference of the two sides, so MC residuals come with their
/// own standard error.
template <class P, class F, class G, class H>
AxiomResiduals axiom_suite(const P& ip, F&& f, G&& g, H&& h, const Octonion& alpha, double r) {
  using Point = typename P::Point;
  auto check = [&](auto&& per_point) {
    const McEstimate e = ip.integrate(per_point);
    return AxiomCheck{norm(e.value), e.std_error};
  };
  AxiomResiduals res;
  res.additivity = check([&](const Point& p) {
    const Octonion x = ip.at(p);
    const Octonion fx = f(x), gx = g(x), hx = h(x);
    return ip.pair(fx + gx, hx, p) - ip.pair(fx, hx, p) - ip.pair(gx, hx, p);
  });
  res.hermitian = check([&](const Point& p) {
    const Octonion x = ip.at(p);
    const Octonion fx = f(x), gx = g(x);
    return conjugate(ip.pair(fx, gx, p)) - ip.pair(gx, fx, p);
  });
  {
    // the imaginary part is integrated separately so its error bar is not
    // inflated by the variance of |f|^2
    const McEstimate re = ip.integrate([&](const Point& p) {
      const Octonion fx = f(ip.at(p));
      return Octonion(ip.pair(fx, fx, p).real());
    });
    const McEstimate im = ip.integrate([&](const Point& p) {
      const Octonion fx = f(ip.at(p));
      return ip.pair(fx, fx, p).imag();
    });
    res.positivity = AxiomCheck{norm(im.value) + std::max(0.0, -re.value.real()), im.std_error};
  }
  res.homogeneity = check([&](const Point& p) {
    const Octonion x = ip.at(p);
    const Octonion fx = f(x), gx = g(x);
    return ip.pair(fx * r, gx, p) - r * ip.pair(fx, gx, p);
  });
  res.axiom_v = check([&](const Point& p) {
    const Octonion fx = f(ip.at(p));
    return ip.pair(fx * alpha, fx, p) - ip.pair(fx, fx, p) * alpha;
  });
  {
    const McEstimate e = ip.integrate([&](const Point& p) {
      const Octonion x = ip.at(p);
      const Octonion fx = f(x), gx = g(x);
      return Octonion(ip.pair(fx * alpha, gx, p).real() - (ip.pair(fx, gx, p) * alpha).real());
    });
    res.para_linearity = AxiomCheck{std::abs(e.value.real()), e.std_error};
  }
  return res;
}

/// Axioms for the coefficient product sum conj(b_n) a_n, with f alpha the
/// coefficientwise right multiple.
inline AxiomResiduals axiom_suite(const PowerSeries& f, const PowerSeries& g, const PowerSeries& h,
                                  const Octonion& alpha, double r) {
  AxiomResiduals res;
  res.additivity.residual =
      distance(hardy_inner_coeff(f + g, h), hardy_inner_coeff(f, h) + hardy_inner_coeff(g, h));
  res.hermitian.residual = distance(conjugate(hardy_inner_coeff(f, g)), hardy_inner_coeff(g, f));
  const Octonion ff = hardy_inner_coeff(f, f);
  res.positivity.residual = norm(ff.imag()) + std::max(0.0, -ff.real());
  res.homogeneity.residual = distance(hardy_inner_coeff(f * r, g), r * hardy_inner_coeff(f, g));
  res.axiom_v.residual = distance(hardy_inner_coeff(f.right_multiply(alpha), f), ff * alpha);
  res.para_linearity.residual = para_linearity_residual(f, g, alpha).residual;
  return res;
}

}  // namespace octo
