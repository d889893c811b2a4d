#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "octo/octonion.hpp"

namespace octo {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// three-term recurrence.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// P_n(x) and P_n'(x).
inline std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0, p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace detail

inline GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre order must be positive");
  GaussLegendre gl{std::vector<double>(n), std::vector<double>(n)};
  if (n == 1) {
    gl.weights[0] = 2.0;
    return gl;
  }
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = detail::legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = detail::legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
  return gl;
}

/// Trapezoidal rule on [0, 2pi): theta_k = 2 pi k / M, weights 2 pi / M.
/// Exact for trigonometric polynomials of degree < M.
class CircleRule {
 public:
  explicit CircleRule(std::size_t nodes) : m_(nodes) {
    if (m_ == 0) throw std::invalid_argument("circle rule needs at least one node");
  }
  /// The default node count 4N + 1 for a degree-N series.
  static CircleRule for_degree(std::size_t n) { return CircleRule(4 * n + 1); }

  std::size_t size() const { return m_; }
  double node(std::size_t k) const { return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_); }
  double weight() const { return 2.0 * std::numbers::pi / static_cast<double>(m_); }

 private:
  std::size_t m_;
};

template <class F>
Octonion integrate_circle(const CircleRule& rule, F&& integrand) {
  Octonion sum(0.0);
  for (std::size_t k = 0; k < rule.size(); ++k) sum += integrand(rule.node(k));
  return sum * rule.weight();
}

enum class DiskMeasure {
  area,        // du dv, total mass pi
  normalized,  // du dv / pi, total mass 1
};

/// Tensor rule on the closed unit disk: Gauss-Legendre of order R in r on
/// [0, 1] (Jacobian r folded into the weights) times the M-point circle rule.
class DiskRule {
 public:
  DiskRule(std::size_t radial_order, std::size_t angular_nodes) : angular_(angular_nodes) {
    const GaussLegendre gl = gauss_legendre(radial_order);
    radii_.resize(radial_order);
    weights_.resize(radial_order);
    for (std::size_t i = 0; i < radial_order; ++i) {
      radii_[i] = 0.5 * (gl.nodes[i] + 1.0);
      weights_[i] = 0.5 * gl.weights[i] * radii_[i];
    }
  }
  /// R = 2N + 2, M = 4N + 1 for a degree-N series.
  static DiskRule for_degree(std::size_t n) { return DiskRule(2 * n + 2, 4 * n + 1); }

  const std::vector<double>& radii() const { return radii_; }
  /// Gauss weights times r, summing to 1/2.
  const std::vector<double>& radial_weights() const { return weights_; }
  const CircleRule& angular() const { return angular_; }

 private:
  std::vector<double> radii_;
  std::vector<double> weights_;
  CircleRule angular_;
};

/// Integral of integrand(r, theta) over the unit disk.
template <class F>
Octonion integrate_disk(const DiskRule& rule, F&& integrand, DiskMeasure measure = DiskMeasure::area) {
  Octonion sum(0.0);
  const CircleRule& ang = rule.angular();
  for (std::size_t i = 0; i < rule.radii().size(); ++i) {
    Octonion ring(0.0);
    for (std::size_t k = 0; k < ang.size(); ++k) ring += integrand(rule.radii()[i], ang.node(k));
    sum += ring * rule.radial_weights()[i];
  }
  sum *= ang.weight();
  if (measure == DiskMeasure::normalized) sum /= std::numbers::pi;
  return sum;
}

// ---------------------------------------------------------------------------
// Monte Carlo on S^7 and B_8

inline constexpr double kSphere7Area = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi / 3.0;
inline constexpr double kBall8Volume = kSphere7Area / 8.0;
/// 3/pi^4, the factor making (1, 1) = 1 on the unit sphere.
inline constexpr double kSphereNormalization = 1.0 / kSphere7Area;

struct SamplerConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 7;
  std::uint64_t stream = 0;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct McEstimate {
  Octonion value;
  double std_error = 0;  // Euclidean norm of the componentwise standard errors
  std::uint64_t samples = 0;
};

namespace detail {

inline constexpr std::uint64_t kChunkSize = 1u << 14;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ chunk);
}

// Welford accumulator over the eight components.
struct Moments {
  std::uint64_t n = 0;
  std::array<double, 8> mean{};
  std::array<double, 8> m2{};

  void add(const Octonion& x) {
    ++n;
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < 8; ++i) {
      const double delta = x[i] - mean[i];
      mean[i] += delta / nn;
      m2[i] += delta * (x[i] - mean[i]);
    }
  }

  // Chan et al. pairwise merge.
  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
    const double nt = na + nb;
    for (std::size_t i = 0; i < 8; ++i) {
      const double delta = o.mean[i] - mean[i];
      mean[i] += delta * nb / nt;
      m2[i] += o.m2[i] + delta * delta * na * nb / nt;
    }
    n += o.n;
  }
};

inline std::array<double, 8> gaussian8(std::mt19937_64& rng, std::normal_distribution<double>& g) {
  std::array<double, 8> v;
  for (double& c : v) c = g(rng);
  return v;
}

inline Octonion sphere_point(std::mt19937_64& rng, std::normal_distribution<double>& g) {
  while (true) {
    const Octonion v(gaussian8(rng, g));
    const double n = norm(v);
    if (n > 1e-150) return v / n;
  }
}

// Runs `draw` + `f` over the configured sample count in fixed-size chunks,
// each with its own generator; chunk results merge in chunk order.
template <class Draw, class F>
Moments chunked_moments(const SamplerConfig& cfg, Draw&& draw, F&& f) {
  if (cfg.samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  const std::uint64_t chunks = (cfg.samples + kChunkSize - 1) / kChunkSize;
  std::vector<Moments> parts(chunks);
  auto run_chunk = [&](std::uint64_t c) {
    std::mt19937_64 rng(chunk_seed(cfg.seed, cfg.stream, c));
    std::normal_distribution<double> gauss;
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(cfg.samples, begin + kChunkSize);
    Moments m;
    for (std::uint64_t s = begin; s < end; ++s) m.add(f(draw(rng, gauss)));
    parts[c] = m;
  };

  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
  }

  Moments total;
  for (const Moments& m : parts) total.merge(m);
  return total;
}

inline McEstimate scaled_estimate(const Moments& m, double scale) {
  McEstimate e;
  e.samples = m.n;
  double var_sum = 0.0;
  const double n = static_cast<double>(m.n);
  for (std::size_t i = 0; i < 8; ++i) {
    e.value[i] = scale * m.mean[i];
    const double se = scale * std::sqrt(m.m2[i] / (n - 1.0) / n);
    var_sum += se * se;
  }
  e.std_error = std::sqrt(var_sum);
  return e;
}

}  // namespace detail

/// Uniform points on the unit sphere S^7 (normalized Gaussian vectors).
class SphereSampler {
 public:
  explicit SphereSampler(SamplerConfig cfg = {}) : cfg_(cfg) {}
  const SamplerConfig& config() const { return cfg_; }

  Octonion operator()(std::mt19937_64& rng, std::normal_distribution<double>& g) const {
    return detail::sphere_point(rng, g);
  }

 private:
  SamplerConfig cfg_;
};

/// Uniform points in the unit ball B_8: Gaussian direction, radius u^(1/8).
class BallSampler {
 public:
  explicit BallSampler(SamplerConfig cfg = {}) : cfg_(cfg) {}
  const SamplerConfig& config() const { return cfg_; }

  Octonion operator()(std::mt19937_64& rng, std::normal_distribution<double>& g) const {
    const Octonion dir = detail::sphere_point(rng, g);
    // u in [0, 1), so samples stay strictly inside the ball
    const double u = std::min(std::generate_canonical<double, 53>(rng), std::nextafter(1.0, 0.0));
    return dir * std::pow(u, 0.125);
  }

 private:
  SamplerConfig cfg_;
};

/// Integral over S^7 with respect to surface measure: (pi^4/3) * sample mean.
template <class F>
McEstimate mc_sphere7(const SphereSampler& sampler, F&& integrand) {
  const auto m = detail::chunked_moments(sampler.config(), sampler, integrand);
  return detail::scaled_estimate(m, kSphere7Area);
}

/// Integral over the ball of given center and radius: r^8 V_8 * sample mean.
template <class F>
McEstimate mc_ball8(const BallSampler& sampler, const Octonion& center, double radius, F&& integrand) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  auto draw = [&](std::mt19937_64& rng, std::normal_distribution<double>& g) { return center + sampler(rng, g) * radius; };
  const auto m = detail::chunked_moments(sampler.config(), draw, integrand);
  return detail::scaled_estimate(m, std::pow(radius, 8) * kBall8Volume);
}

}  // namespace octo
