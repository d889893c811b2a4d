#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octo/inner_products.hpp"
#include "octo/monogenic.hpp"
#include "octo/octonion.hpp"
#include "octo/power_series.hpp"
#include "octo/quadrature.hpp"
#include "octo/slice.hpp"
#include "octo/slice_kernels.hpp"

namespace octo {

/// One verified identity. pass <=> residual <= max(4 std_error, tolerance);
/// deterministic checks carry std_error = 0.
struct VerificationReport {
  std::string suite;
  std::string check;
  std::string anchor;  // the statement being checked, in words
  double residual = 0;
  double tolerance = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  double wall_ms = 0;
  // recorded for comparison only; does not affect the exit status
  bool informational = false;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
  std::uint64_t samples = 1'000'000;  // Monte Carlo samples per estimate
  std::uint32_t trunc = 16;           // maximal series degree
  std::optional<double> tol;          // overrides every default tolerance
  double d = 1.0;                     // strip width
  std::uint32_t strip_terms = 50;
  BergmanBallVariant variant = BergmanBallVariant::scalar_factor;
  std::size_t circle_nodes = 0;  // 0: CircleRule::for_degree
  std::size_t disk_order = 0;    // radial Gauss order, 0: DiskRule::for_degree
  unsigned workers = 0;

  std::size_t triples = 10'000;
  std::size_t pairs = 1'000;
  std::size_t points = 100;
  std::size_t series = 100;
  std::size_t axiom_trials = 20;
  std::size_t mc_axiom_trials = 2;

  void validate() const {
    if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
    if (trunc > 512) throw std::invalid_argument("--trunc must be at most 512");
    if (tol && !(*tol >= 0.0 && std::isfinite(*tol))) throw std::invalid_argument("--tol must be finite and >= 0");
    if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("--d must be positive");
    if (strip_terms < 1) throw std::invalid_argument("--N must be at least 1");
  }

  CircleRule circle_rule(std::size_t degree) const {
    return circle_nodes ? CircleRule(circle_nodes) : CircleRule::for_degree(degree);
  }
  DiskRule disk_rule(std::size_t degree) const {
    return disk_order ? DiskRule(disk_order, 4 * degree + 1) : DiskRule::for_degree(degree);
  }
  SamplerConfig sampler(std::uint64_t stream) const { return SamplerConfig{samples, seed, stream, workers}; }
};

using ReportSink = std::function<void(const VerificationReport&)>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "slice-structure", "monogenic", "slice", "inner-products"};
  return names;
}

/// Collects reports for one suite, stamping seed and wall time.
class Recorder {
 public:
  struct Outcome {
    double residual = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
  };

  Recorder(std::string suite, const VerifyConfig& cfg, ReportSink sink)
      : suite_(std::move(suite)), cfg_(cfg), sink_(std::move(sink)) {}

  const VerifyConfig& config() const { return cfg_; }
  double tol(double fallback) const { return cfg_.tol.value_or(fallback); }

  template <class Fn>
  void run(std::string check, std::string anchor, double tolerance, Fn&& fn, bool informational = false) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome out = fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    record(std::move(check), std::move(anchor), tolerance, out, ms, informational);
  }

  void record(std::string check, std::string anchor, double tolerance, const Outcome& out, double wall_ms,
              bool informational = false) {
    VerificationReport r;
    r.suite = suite_;
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.residual = out.residual;
    r.tolerance = tolerance;
    r.std_error = out.std_error;
    r.samples = out.samples;
    r.seed = cfg_.seed;
    // NaN residuals fail
    r.pass = r.residual <= std::max(4.0 * r.std_error, r.tolerance);
    r.wall_ms = wall_ms;
    r.informational = informational;
    if (!r.pass && !informational) ++failures_;
    ++count_;
    if (sink_) sink_(r);
  }

  std::size_t failures() const { return failures_; }
  std::size_t count() const { return count_; }

 private:
  std::string suite_;
  const VerifyConfig& cfg_;
  ReportSink sink_;
  std::size_t failures_ = 0;
  std::size_t count_ = 0;
};

namespace detail {

// Independent generator of the test populations for each check block.
inline std::mt19937_64 block_rng(const VerifyConfig& cfg, std::uint64_t block) {
  return std::mt19937_64(chunk_seed(cfg.seed, 0x7665726966ULL + block, 0));
}

inline Octonion uniform_octonion(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = u(rng);
  return x;
}

inline Octonion in_ball(std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = g(rng);
  return x * (radius * u(rng) / norm(x));
}

// Re(x) in (lo, hi), |Im x| <= im.
inline Octonion in_slab(std::mt19937_64& rng, double lo, double hi, double im) {
  std::uniform_real_distribution<double> u(lo, hi);
  Octonion x = in_ball(rng, im).imag();
  x[0] = u(rng);
  return x;
}

inline PowerSeries random_series(std::mt19937_64& rng, std::size_t degree, double decay = 0.8) {
  std::vector<Octonion> c(degree + 1);
  double s = 1.0;
  for (auto& a : c) {
    a = uniform_octonion(rng) * s;
    s *= decay;
  }
  return PowerSeries(std::move(c));
}

// Octonions as pairs of quaternions, (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)).
// Used only as an oracle for the basis table.
using Quaternion = std::array<double, 4>;

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

struct DoubledOctonion {
  Quaternion a{}, b{};
};

inline DoubledOctonion cd_mul(const DoubledOctonion& x, const DoubledOctonion& y) {
  DoubledOctonion r;
  const Quaternion ac = qmul(x.a, y.a), db = qmul(qconj(y.b), x.b);
  const Quaternion da = qmul(y.b, x.a), bc = qmul(x.b, qconj(y.a));
  for (std::size_t i = 0; i < 4; ++i) {
    r.a[i] = ac[i] - db[i];
    r.b[i] = da[i] + bc[i];
  }
  return r;
}

inline double cd_dot(const DoubledOctonion& x, const DoubledOctonion& y) {
  double s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += x.a[i] * y.a[i] + x.b[i] * y.b[i];
  return s;
}

// Basis generated from e1 = i, e2 = j, e3 = l by e4 = e1 e2, e5 = e1 e3,
// e6 = e2 e3, e7 = e4 e3; products are read back in that basis.
inline std::array<std::array<Octonion, 8>, 8> doubled_table() {
  std::array<DoubledOctonion, 8> e{};
  e[0].a[0] = 1;
  e[1].a[1] = 1;
  e[2].a[2] = 1;
  e[3].b[0] = 1;
  e[4] = cd_mul(e[1], e[2]);
  e[5] = cd_mul(e[1], e[3]);
  e[6] = cd_mul(e[2], e[3]);
  e[7] = cd_mul(e[4], e[3]);
  std::array<std::array<Octonion, 8>, 8> t{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const DoubledOctonion p = cd_mul(e[i], e[j]);
      for (std::size_t k = 0; k < 8; ++k) t[i][j][k] = cd_dot(p, e[k]);
    }
  return t;
}

// Worst trial of a product's axiom over several draws, judged by how far it
// sits from its own pass threshold.
struct WorstCheck {
  AxiomCheck worst;
  double worst_ratio = -1;

  void add(const AxiomCheck& c, double tol) {
    const double threshold = std::max(4.0 * c.std_error, tol);
    const double ratio = threshold > 0 ? c.residual / threshold : (c.residual > 0 ? INFINITY : 0.0);
    if (std::isnan(c.residual) || ratio > worst_ratio) {
      worst = c;
      worst_ratio = std::isnan(c.residual) ? INFINITY : ratio;
    }
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Check blocks. Each block appends its reports to the recorder.

inline void check_basis_table(Recorder& rec) {
  const auto oracle = detail::doubled_table();
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j)
      rec.run("table.e" + std::to_string(i) + "e" + std::to_string(j), "basis product table", rec.tol(1e-12),
              [&]() -> Recorder::Outcome {
                return {distance(Octonion::unit(i) * Octonion::unit(j), oracle[i][j]), 0, 1};
              });
}

inline void check_algebra_identities(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  auto rng = detail::block_rng(cfg, 1);
  std::vector<IdentityResiduals> rs;
  rs.reserve(cfg.triples);
  for (std::size_t k = 0; k < cfg.triples; ++k) {
    const Octonion a = detail::uniform_octonion(rng), b = detail::uniform_octonion(rng),
                   c = detail::uniform_octonion(rng);
    rs.push_back(identity_residuals(a, b, c));
  }
  auto worst = [&](auto field) {
    return [&rs, field]() -> Recorder::Outcome {
      double m = 0;
      for (const auto& r : rs) m = std::max(m, field(r) / r.scale);
      return {m, 0, rs.size()};
    };
  };
  const double tol = rec.tol(1e-12);
  rec.run("identity.left-alternative", "a(ab) = (aa)b", tol, worst([](auto& r) { return r.left_alternativity; }));
  rec.run("identity.right-alternative", "(ba)a = b(aa)", tol, worst([](auto& r) { return r.right_alternativity; }));
  rec.run("identity.flexible", "(ab)a = a(ba)", tol, worst([](auto& r) { return r.flexibility; }));
  rec.run("identity.moufang-1", "z(x(zy)) = ((zx)z)y", tol, worst([](auto& r) { return r.moufang[0]; }));
  rec.run("identity.moufang-2", "x(z(yz)) = ((xz)y)z", tol, worst([](auto& r) { return r.moufang[1]; }));
  rec.run("identity.moufang-3", "(zx)(yz) = (z(xy))z", tol, worst([](auto& r) { return r.moufang[2]; }));
  rec.run("identity.moufang-4", "(zx)(yz) = z((xy)z)", tol, worst([](auto& r) { return r.moufang[3]; }));
  rec.run("identity.norm-composition", "|ab| = |a||b|", tol, worst([](auto& r) { return r.norm_composition; }));
  rec.run("identity.real-associative", "Re((ab)c) = Re(a(bc))", tol,
          worst([](auto& r) { return r.real_associativity; }));
  rec.run("identity.adjoint", "<ab, c> = <b, conj(a) c>", tol, worst([](auto& r) { return r.adjoint; }));
  rec.run("identity.non-associative", "(e1 e2) e3 - e1 (e2 e3) = 2 e7", tol, []() -> Recorder::Outcome {
    return {distance(associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(3)), 2.0 * Octonion::unit(7)), 0,
            1};
  });
}

inline void check_slice_structure(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  auto rng = detail::block_rng(cfg, 2);
  const double tol = rec.tol(1e-12);

  rec.run("decompose.roundtrip", "x = u + I v", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < cfg.pairs; ++k) {
      const Octonion x = detail::uniform_octonion(rng, 2.0);
      const SlicePoint p = decompose(x);
      m = std::max(m, distance(Octonion(p.u) + p.axis.value() * p.v, x) / std::max(1.0, norm(x)));
    }
    return {m, 0, cfg.pairs};
  });

  rec.run("representation-formula", "slice functions are determined by one slice", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    const std::size_t degree = std::min<std::size_t>(cfg.trunc, 24);
    for (std::size_t k = 0; k < cfg.points; ++k) {
      const PowerSeries f = detail::random_series(rng, degree);
      const Octonion x = detail::in_ball(rng, 0.9);
      const ImaginaryUnit j = random_imaginary_unit(rng);
      const Octonion want = evaluate(f, x);
      const Octonion got = reconstruct_from_slice([&](const Octonion& z) { return evaluate(f, z); }, x, j);
      m = std::max(m, distance(got, want) / std::max(1.0, norm(want)));
    }
    return {m, 0, cfg.points};
  });

  rec.run("splitting-frame.orthonormal", "adapted frame is orthonormal", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < cfg.points; ++k) {
      const auto frame = splitting_frame(random_imaginary_unit(rng), cfg.seed + k);
      for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
          m = std::max(m, std::abs(euclid_inner(frame.basis[a], frame.basis[b]) - (a == b ? 1.0 : 0.0)));
    }
    return {m, 0, cfg.points};
  });

  rec.run("splitting.recompose", "value = F1 + F2 I2 + G1 I4 + G2 I2I4", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < cfg.points; ++k) {
      const auto frame = splitting_frame(random_imaginary_unit(rng), cfg.seed + k);
      const Octonion v = detail::uniform_octonion(rng);
      m = std::max(m, distance(recompose(split_components(v, frame), frame), v));
    }
    return {m, 0, cfg.points};
  });

  rec.run("splitting.holomorphic", "restriction splits into holomorphic components", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    const std::size_t degree = std::min<std::size_t>(cfg.trunc, 24);
    for (std::size_t k = 0; k < cfg.points; ++k) {
      const auto frame = splitting_frame(random_imaginary_unit(rng), cfg.seed + k);
      const PowerSeries f = detail::random_series(rng, degree);
      std::uniform_real_distribution<double> u(-0.6, 0.6);
      const SliceComplex z(u(rng), u(rng));
      SplitComponents want{};
      SliceComplex zn = 1.0;
      for (const Octonion& a : f.coefficients()) {
        const auto p = split_components(a, frame);
        want.f1 += zn * p.f1;
        want.f2 += zn * p.f2;
        want.g1 += zn * p.g1;
        want.g2 += zn * p.g2;
        zn *= z;
      }
      const auto got = split_components(evaluate(f, embed(z, frame.i1)), frame);
      m = std::max({m, std::abs(got.f1 - want.f1), std::abs(got.f2 - want.f2), std::abs(got.g1 - want.g1),
                    std::abs(got.g2 - want.g2)});
    }
    return {m, 0, cfg.points};
  });
}

namespace detail {

template <class Kernel>
double hermitian_defect(Kernel&& kernel, const Octonion& a, const Octonion& b) {
  const Octonion kab = kernel(a, b);
  return distance(conjugate(kab), kernel(b, a)) / std::max(1.0, norm(kab));
}

}  // namespace detail

inline void check_monogenic_hermitian(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double tol = rec.tol(1e-12);
  const auto ball = DomainSpec::ball(), half = DomainSpec::halfspace();
  const auto strip = DomainSpec::strip(cfg.d, cfg.strip_terms);
  struct Case {
    const char* name;
    std::function<Octonion(const Octonion&, const Octonion&)> kernel;
    std::function<Octonion(std::mt19937_64&)> draw;
  };
  const double w = cfg.d;
  const std::vector<Case> cases{
      {"szego.ball", [&](auto& x, auto& y) { return szego_kernel(ball, x, y); },
       [](auto& r) { return detail::in_ball(r, 0.95); }},
      {"bergman.ball", [&](auto& x, auto& y) { return bergman_kernel(ball, x, y); },
       [](auto& r) { return detail::in_ball(r, 0.95); }},
      {"szego.halfspace", [&](auto& x, auto& y) { return szego_kernel(half, x, y); },
       [](auto& r) { return detail::in_slab(r, 0.05, 3.0, 2.0); }},
      {"bergman.halfspace", [&](auto& x, auto& y) { return bergman_kernel(half, x, y); },
       [](auto& r) { return detail::in_slab(r, 0.05, 3.0, 2.0); }},
      {"szego.strip", [&](auto& x, auto& y) { return szego_kernel(strip, x, y); },
       [w](auto& r) { return detail::in_slab(r, 0.05 * w, 0.95 * w, w); }},
      {"bergman.strip", [&](auto& x, auto& y) { return bergman_kernel(strip, x, y); },
       [w](auto& r) { return detail::in_slab(r, 0.05 * w, 0.95 * w, w); }},
  };
  std::uint64_t block = 10;
  for (const auto& c : cases) {
    auto rng = detail::block_rng(cfg, block++);
    rec.run(std::string("hermitian.") + c.name, "conj(K(x, y)) = K(y, x)", tol, [&]() -> Recorder::Outcome {
      double m = 0;
      for (std::size_t k = 0; k < cfg.pairs; ++k) {
        const Octonion x = c.draw(rng), y = c.draw(rng);
        m = std::max(m, detail::hermitian_defect(c.kernel, x, y));
      }
      return {m, 0, cfg.pairs};
    });
  }
}

inline void check_monogenicity(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double tol = rec.tol(1e-6);
  auto run = [&](const char* name, std::uint64_t block, auto draw, auto kernel_at) {
    auto rng = detail::block_rng(cfg, block);
    rec.run(std::string("monogenic.") + name, "D K = 0 in the first variable", tol, [&]() -> Recorder::Outcome {
      double m = 0;
      for (std::size_t k = 0; k < cfg.points; ++k) {
        const auto [x, y] = draw(rng);
        m = std::max(m, norm(cr_apply_fd([&](const Octonion& z) { return kernel_at(z, y); }, x)));
      }
      return {m, 0, cfg.points};
    });
  };
  run(
      "cauchy", 20,
      [](auto& r) {
        std::uniform_real_distribution<double> u(1.5, 3.0);
        const Octonion x = detail::in_ball(r, 1.0);
        return std::pair{x * (u(r) / norm(x)), Octonion(0.0)};
      },
      [](const Octonion& z, const Octonion&) { return cauchy_kernel(z); });
  run(
      "szego.ball", 21, [](auto& r) { return std::pair{detail::in_ball(r, 0.5), detail::in_ball(r, 0.5)}; },
      [](const Octonion& z, const Octonion& y) { return szego_kernel(DomainSpec::ball(), z, y); });
  run(
      "szego.halfspace", 22,
      [](auto& r) { return std::pair{detail::in_slab(r, 0.5, 1.5, 0.5), detail::in_slab(r, 0.5, 1.5, 0.5)}; },
      [](const Octonion& z, const Octonion& y) { return szego_kernel(DomainSpec::halfspace(), z, y); });
}

inline void check_monogenic_mc(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double rel = rec.tol(0.02);
  const Octonion p = 1.5 * Octonion::unit(1);
  auto shifted = [p](const Octonion& y) { return cauchy_kernel(y - p); };
  const Octonion c = 1.0 - 2.0 * Octonion::unit(7);
  auto constant = [c](const Octonion&) { return c; };
  const std::array<Octonion, 3> points{Octonion(0.0), 0.5 * Octonion::unit(3),
                                       0.3 - 0.2 * Octonion::unit(5) + 0.1 * Octonion::unit(2)};
  std::uint64_t stream = 100;
  auto run = [&](const std::string& name, const char* anchor, auto&& estimate, auto&& f, const Octonion& y) {
    rec.run(name, anchor, rel * norm(f(y)), [&]() -> Recorder::Outcome {
      const McEstimate e = estimate(f, y, stream++);
      return {distance(e.value, f(y)), e.std_error, e.samples};
    });
  };
  auto cauchy = [&](auto&& f, const Octonion& y, std::uint64_t s) {
    return cauchy_integral_mc(f, y, SphereSampler(cfg.sampler(s)));
  };
  auto szego = [&](auto&& f, const Octonion& y, std::uint64_t s) {
    return szego_projection_mc(f, y, SphereSampler(cfg.sampler(s)));
  };
  auto mean = [&](auto&& f, const Octonion& y, std::uint64_t s) {
    return mean_value_mc(f, y, 0.5, BallSampler(cfg.sampler(s)));
  };
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::string at = ".y" + std::to_string(k);
    run("mc.cauchy.constant" + at, "Cauchy integral reproduces f", cauchy, constant, points[k]);
    run("mc.cauchy.shifted-kernel" + at, "Cauchy integral reproduces f", cauchy, shifted, points[k]);
    run("mc.szego.constant" + at, "Szego projection reproduces Hardy functions", szego, constant, points[k]);
    run("mc.szego.shifted-kernel" + at, "Szego projection reproduces Hardy functions", szego, shifted, points[k]);
    run("mc.mean-value.constant" + at, "mean value over B(y, 1/2)", mean, constant, points[k]);
    run("mc.mean-value.shifted-kernel" + at, "mean value over B(y, 1/2)", mean, shifted, points[k]);
  }
}

/// Bergman projection of f = 1 for both ball-kernel variants. Only the
/// configured variant gates the exit status.
inline void check_bergman_variants(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double tol = rec.tol(0.02);
  const std::array<Octonion, 2> points{Octonion(0.0), 0.5 * Octonion::unit(1)};
  std::uint64_t stream = 200;
  for (auto variant : {BergmanBallVariant::scalar_factor, BergmanBallVariant::octonion_factor}) {
    const char* name = variant == BergmanBallVariant::scalar_factor ? "scalar" : "octonion";
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::uint64_t s = stream++;
      rec.run(
          std::string("bergman-variant.") + name + ".y" + std::to_string(k), "Bergman projection reproduces 1", tol,
          [&]() -> Recorder::Outcome {
            const McEstimate e = bergman_projection_mc([](const Octonion&) { return Octonion(1.0); }, points[k],
                                                       BallSampler(cfg.sampler(s)), variant);
            return {distance(e.value, Octonion(1.0)), e.std_error, e.samples};
          },
          variant != cfg.variant);
    }
  }
}

namespace detail {

// Largest increase along the tails |P_{n+10} - P_n|, n = 5, 10, 20, 40, 80;
// zero when the tails decrease.
template <class Partial>
double tail_increase(Partial&& partial) {
  double worst = 0, prev = INFINITY;
  for (std::uint32_t n : {5u, 10u, 20u, 40u, 80u}) {
    const double tail = distance(partial(n + 10), partial(n));
    if (std::isfinite(prev)) worst = std::max(worst, tail - prev);
    prev = tail;
  }
  return worst;
}

}  // namespace detail

inline void check_monogenic_strip(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double d = cfg.d;
  const Octonion x = 0.3 * d + 0.2 * Octonion::unit(1) + 0.1 * Octonion::unit(6);
  const Octonion y = 0.6 * d - 0.3 * Octonion::unit(4);
  rec.run("strip.szego.tails", "strip series tails decrease", rec.tol(0.0), [&]() -> Recorder::Outcome {
    return {detail::tail_increase([&](std::uint32_t n) { return szego_kernel(DomainSpec::strip(d, n), x, y); }), 0, 5};
  });
  rec.run("strip.bergman.tails", "strip series tails decrease", rec.tol(0.0), [&]() -> Recorder::Outcome {
    return {detail::tail_increase([&](std::uint32_t n) { return bergman_kernel(DomainSpec::strip(d, n), x, y); }), 0,
            5};
  });
  const Octonion xw = 0.3 + 0.2 * Octonion::unit(1), yw = 0.4 - 0.3 * Octonion::unit(4);
  const auto wide = DomainSpec::strip(1000.0, cfg.strip_terms);
  rec.run("strip.szego.wide-limit", "wide strip tends to the half-space", rec.tol(1e-6), [&]() -> Recorder::Outcome {
    const Octonion k = szego_kernel(DomainSpec::halfspace(), xw, yw);
    return {distance(szego_kernel(wide, xw, yw), k) / norm(k), 0, 1};
  });
  rec.run("strip.bergman.wide-limit", "wide strip tends to the half-space", rec.tol(1e-6), [&]() -> Recorder::Outcome {
    const Octonion k = bergman_kernel(DomainSpec::halfspace(), xw, yw);
    return {distance(bergman_kernel(wide, xw, yw), k) / norm(k), 0, 1};
  });
}

inline void check_slice_hermitian(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double tol = rec.tol(1e-12);
  auto rng = detail::block_rng(cfg, 30);
  rec.run("hermitian.slice-szego.ball", "conj(S(y, x)) = S(x, y)", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < cfg.pairs; ++k) {
      const Octonion x = detail::in_ball(rng, 0.95), y = detail::in_ball(rng, 0.95);
      m = std::max(m, detail::hermitian_defect([](auto& a, auto& b) { return slice_szego_ball(a, b); }, y, x));
    }
    return {m, 0, cfg.pairs};
  });
  rec.run("hermitian.slice-szego.strip", "conj(K(y, x)) = K(x, y)", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    const double d = cfg.d;
    for (std::size_t k = 0; k < cfg.pairs; ++k) {
      const Octonion x = detail::in_slab(rng, 0.05 * d, 0.95 * d, d), y = detail::in_slab(rng, 0.05 * d, 0.95 * d, d);
      m = std::max(m, detail::hermitian_defect(
                          [&](auto& a, auto& b) { return slice_szego_strip(a, b, d, cfg.strip_terms); }, y, x));
    }
    return {m, 0, cfg.pairs};
  });
}

namespace detail {

// Series population with degrees spread over 0..trunc.
inline std::vector<PowerSeries> series_population(const VerifyConfig& cfg, std::uint64_t block) {
  auto rng = block_rng(cfg, block);
  std::uniform_int_distribution<std::uint32_t> deg(0, cfg.trunc);
  std::vector<PowerSeries> out;
  out.reserve(cfg.series);
  for (std::size_t k = 0; k < cfg.series; ++k) out.push_back(random_series(rng, deg(rng), 0.9));
  return out;
}

}  // namespace detail

inline void check_slice_norms(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double tol = rec.tol(1e-10);
  const auto population = detail::series_population(cfg, 40);
  auto rng = detail::block_rng(cfg, 41);
  std::vector<std::pair<ImaginaryUnit, ImaginaryUnit>> axes;
  for (std::size_t k = 0; k < population.size(); ++k) {
    const ImaginaryUnit i = random_imaginary_unit(rng);
    axes.emplace_back(i, random_imaginary_unit(rng));
  }

  rec.run("circle-norm.coefficients", "[f, f]_I = sum |a_n|^2", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < population.size(); ++k) {
      const PowerSeries& f = population[k];
      const double h = hardy_norm(f);
      m = std::max(m, distance(slice_hardy_inner_circle(f, f, axes[k].first, cfg.circle_rule(f.degree())), h * h));
    }
    return {m, 0, population.size()};
  });
  rec.run("circle-norm.axis-independent", "[f, f]_I = [f, f]_J", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < population.size(); ++k) {
      const PowerSeries& f = population[k];
      const auto rule = cfg.circle_rule(f.degree());
      m = std::max(m, distance(slice_hardy_inner_circle(f, f, axes[k].first, rule),
                               slice_hardy_inner_circle(f, f, axes[k].second, rule)));
    }
    return {m, 0, population.size()};
  });
  rec.run("disk-norm.coefficients", "<f, f>_I = sum |a_n|^2 / (n + 1)", tol, [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < population.size(); ++k) {
      const PowerSeries& f = population[k];
      m = std::max(m, distance(slice_bergman_inner_disk(f, f, axes[k].first, cfg.disk_rule(f.degree())),
                               bergman_norm_sq(f)));
    }
    return {m, 0, population.size()};
  });
}

inline void check_slice_reproduction(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  auto rng = detail::block_rng(cfg, 50);
  const std::size_t degree = cfg.trunc;

  rec.run("reproduce.coefficient", "[f, S(., x)] = f(x)", rec.tol(1e-12), [&]() -> Recorder::Outcome {
    double m = 0;
    for (std::size_t k = 0; k < cfg.points; ++k) {
      const PowerSeries f = detail::random_series(rng, degree);
      const Octonion x = detail::in_ball(rng, 0.9);
      m = std::max(m, distance(slice_reproduce_coefficient(f, x), evaluate(f, x)));
    }
    return {m, 0, cfg.points};
  });

  // polynomial test functions; points on and off the slice of the rule
  const std::size_t circle_cases = std::max<std::size_t>(1, cfg.points / 5);
  rec.run("reproduce.circle", "(1/2pi) int S(x, y) f(y) = f(x)", rec.tol(1e-10), [&]() -> Recorder::Outcome {
    double m = 0;
    const auto rule = cfg.circle_rule(std::max<std::size_t>(degree, 8));
    for (std::size_t k = 0; k < circle_cases; ++k) {
      const PowerSeries f = detail::random_series(rng, degree);
      const ImaginaryUnit i = random_imaginary_unit(rng);
      std::uniform_real_distribution<double> u(-0.35, 0.35);
      const Octonion on = Octonion(u(rng)) + i.value() * u(rng);
      const Octonion off = detail::in_ball(rng, 0.5);
      m = std::max({m, distance(slice_reproduce_circle(f, on, i, rule), evaluate(f, on)),
                    distance(slice_reproduce_circle(f, off, i, rule), evaluate(f, off))});
    }
    return {m, 0, circle_cases};
  });

  const std::size_t disk_cases = std::max<std::size_t>(1, cfg.points / 10);
  rec.run("reproduce.disk", "int B(x, y) f(y) dA = f(x)", rec.tol(1e-8), [&]() -> Recorder::Outcome {
    double m = 0;
    const std::size_t disk_degree = std::min<std::size_t>(degree, 8);
    const auto rule = cfg.disk_rule(disk_degree);
    for (std::size_t k = 0; k < disk_cases; ++k) {
      const PowerSeries f = detail::random_series(rng, disk_degree);
      const ImaginaryUnit i = random_imaginary_unit(rng);
      std::uniform_real_distribution<double> u(-0.25, 0.25);
      const Octonion on = Octonion(u(rng)) + i.value() * u(rng);
      const Octonion off = detail::in_ball(rng, 0.35);
      m = std::max({m, distance(slice_reproduce_disk(f, on, i, rule), evaluate(f, on)),
                    distance(slice_reproduce_disk(f, off, i, rule), evaluate(f, off))});
    }
    return {m, 0, disk_cases};
  });

  rec.run("halfspace-kernel.dual-forms", "both closed forms of the half-space kernel agree", rec.tol(1e-12),
          [&]() -> Recorder::Outcome {
            double m = 0;
            for (std::size_t k = 0; k < cfg.pairs; ++k) {
              const Octonion a = detail::in_slab(rng, 0.05, 2.0, 2.0), b = detail::in_slab(rng, 0.05, 2.0, 2.0);
              const Octonion k1 = slice_szego_halfspace(a, b);
              m = std::max(m, distance(k1, slice_szego_halfspace_dual(a, b)) / std::max(1.0, norm(k1)));
            }
            return {m, 0, cfg.pairs};
          });
}

inline void check_slice_strip(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const double d = cfg.d;
  const Octonion x = 0.3 * d + 0.2 * Octonion::unit(1), y = 0.6 * d - 0.4 * Octonion::unit(3);
  rec.run("strip.slice-szego.tails", "strip series tails decrease", rec.tol(0.0), [&]() -> Recorder::Outcome {
    return {detail::tail_increase([&](std::uint32_t n) { return slice_szego_strip(y, x, d, n); }), 0, 5};
  });
  rec.run("strip.slice-bergman.tails", "strip series tails decrease", rec.tol(0.0), [&]() -> Recorder::Outcome {
    return {detail::tail_increase([&](std::uint32_t n) { return slice_bergman_strip(x, y, d, n); }), 0, 5};
  });
  const Octonion xw = 0.3 + 0.2 * Octonion::unit(1), yw = 0.4 - 0.3 * Octonion::unit(4);
  rec.run("strip.slice-szego.wide-limit", "wide strip tends to the half-space", rec.tol(1e-6),
          [&]() -> Recorder::Outcome {
            const Octonion k = slice_szego_halfspace(yw, xw);
            return {distance(slice_szego_strip(yw, xw, 1000.0, cfg.strip_terms), k) / norm(k), 0, 1};
          });
  rec.run("strip.slice-bergman.wide-limit", "wide strip tends to the half-space", rec.tol(1e-6),
          [&]() -> Recorder::Outcome {
            const Octonion k = slice_bergman_halfspace(xw, yw);
            return {distance(slice_bergman_strip(xw, yw, 1000.0, cfg.strip_terms), k) / norm(k), 0, 1};
          });
}

inline constexpr std::array<const char*, 6> kAxiomNames{"additivity",  "hermitian", "positivity",
                                                       "homogeneity", "axiom-v",   "para-linearity"};

namespace detail {

inline std::array<AxiomCheck, 6> axiom_array(const AxiomResiduals& r) {
  return {r.additivity, r.hermitian, r.positivity, r.homogeneity, r.axiom_v, r.para_linearity};
}

}  // namespace detail

inline void check_axioms(Recorder& rec) {
  const VerifyConfig& cfg = rec.config();
  const std::array<const char*, 6> anchors{"(f + g, h) = (f, h) + (g, h)", "conj((f, g)) = (g, f)",
                                           "(f, f) >= 0",                  "(r f, g) = r (f, g)",
                                           "(f a, f) = (f, f) a",          "Re (f a, g) = Re ((f, g) a)"};

  // Runs `trials` draws of one product and reports the worst trial per axiom.
  auto product = [&](const std::string& name, std::uint64_t block, std::size_t trials, double tol, auto&& one_trial) {
    auto rng = detail::block_rng(cfg, block);
    std::array<detail::WorstCheck, 6> worst{};
    double ms = 0;
    std::uint64_t samples = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto [res, n] = one_trial(rng, t);
      samples = n;
      ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const auto checks = detail::axiom_array(res);
      for (std::size_t a = 0; a < 6; ++a) worst[a].add(checks[a], tol);
    }
    // the six axioms share one set of trials, so each gets a sixth of the time
    for (std::size_t a = 0; a < 6; ++a)
      rec.record("axioms." + name + "." + kAxiomNames[a], anchors[a], tol,
                 {worst[a].worst.residual, worst[a].worst.std_error, samples}, ms / 6.0);
  };

  const std::size_t degree = std::min<std::size_t>(cfg.trunc, 12);
  const double det_tol = rec.tol(1e-10);
  std::uniform_real_distribution<double> scale(-2.0, 2.0);

  product("coefficient", 60, cfg.axiom_trials, det_tol, [&](std::mt19937_64& rng, std::size_t) {
    const auto f = detail::random_series(rng, degree), g = detail::random_series(rng, degree),
               h = detail::random_series(rng, degree);
    return std::pair{axiom_suite(f, g, h, detail::uniform_octonion(rng), scale(rng)), std::uint64_t{degree + 1}};
  });

  auto series_fn = [](const PowerSeries& s) { return [&s](const Octonion& x) { return evaluate(s, x); }; };

  product("circle", 61, cfg.axiom_trials, det_tol, [&](std::mt19937_64& rng, std::size_t) {
    const auto f = detail::random_series(rng, degree), g = detail::random_series(rng, degree),
               h = detail::random_series(rng, degree);
    const CircleProduct ip(random_imaginary_unit(rng), cfg.circle_rule(degree));
    const Octonion alpha = detail::uniform_octonion(rng);
    const double r = scale(rng);
    return std::pair{axiom_suite(ip, series_fn(f), series_fn(g), series_fn(h), alpha, r),
                     std::uint64_t{cfg.circle_rule(degree).size()}};
  });

  product("disk", 62, cfg.axiom_trials, det_tol, [&](std::mt19937_64& rng, std::size_t) {
    const auto f = detail::random_series(rng, degree), g = detail::random_series(rng, degree),
               h = detail::random_series(rng, degree);
    const auto rule = cfg.disk_rule(degree);
    const std::uint64_t n = rule.radii().size() * rule.angular().size();
    const DiskProduct ip(random_imaginary_unit(rng), rule);
    const Octonion alpha = detail::uniform_octonion(rng);
    const double r = scale(rng);
    return std::pair{axiom_suite(ip, series_fn(f), series_fn(g), series_fn(h), alpha, r), n};
  });

  const std::size_t mc_degree = std::min<std::size_t>(degree, 4);
  const double mc_tol = rec.tol(1e-12);
  product("boundary-mc", 63, cfg.mc_axiom_trials, mc_tol, [&](std::mt19937_64& rng, std::size_t t) {
    const auto f = detail::random_series(rng, mc_degree), g = detail::random_series(rng, mc_degree),
               h = detail::random_series(rng, mc_degree);
    const Octonion alpha = detail::uniform_octonion(rng);
    const double r = scale(rng);
    const BoundaryMcProduct ip{SphereSampler(cfg.sampler(300 + t))};
    return std::pair{axiom_suite(ip, series_fn(f), series_fn(g), series_fn(h), alpha, r), cfg.samples};
  });

  product("volume-mc", 64, cfg.mc_axiom_trials, mc_tol, [&](std::mt19937_64& rng, std::size_t t) {
    const auto f = detail::random_series(rng, mc_degree), g = detail::random_series(rng, mc_degree),
               h = detail::random_series(rng, mc_degree);
    const Octonion alpha = detail::uniform_octonion(rng);
    const double r = scale(rng);
    const VolumeMcProduct ip{BallSampler(cfg.sampler(400 + t))};
    return std::pair{axiom_suite(ip, series_fn(f), series_fn(g), series_fn(h), alpha, r), cfg.samples};
  });

  rec.run("para-linearity.witness", "f = e1, g = e2, a = e3 gives full gap -2 e7 with Re part 0", 0.0,
          []() -> Recorder::Outcome {
            const auto w = para_linearity_residual(PowerSeries{Octonion::unit(1)}, PowerSeries{Octonion::unit(2)},
                                                   Octonion::unit(3));
            return {distance(w.full_gap, -2.0 * Octonion::unit(7)) + w.residual, 0, 1};
          });
}

// ---------------------------------------------------------------------------
// Suites

/// Runs one named suite (or "all"); returns the number of gating failures.
inline std::size_t run_suite(std::string_view name, const VerifyConfig& cfg, const ReportSink& sink) {
  cfg.validate();
  if (name == "all") {
    std::size_t failures = 0;
    for (const auto& s : suite_names()) failures += run_suite(s, cfg, sink);
    return failures;
  }
  Recorder rec(std::string(name), cfg, sink);
  if (name == "algebra") {
    check_basis_table(rec);
    check_algebra_identities(rec);
  } else if (name == "slice-structure") {
    check_slice_structure(rec);
  } else if (name == "monogenic") {
    check_monogenic_hermitian(rec);
    check_monogenicity(rec);
    check_monogenic_mc(rec);
    check_bergman_variants(rec);
    check_monogenic_strip(rec);
  } else if (name == "slice") {
    check_slice_hermitian(rec);
    check_slice_norms(rec);
    check_slice_reproduction(rec);
    check_slice_strip(rec);
  } else if (name == "inner-products") {
    check_axioms(rec);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return rec.failures();
}

}  // namespace octo
