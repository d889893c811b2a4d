#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "octo/power_series.hpp"
#include "octo/slice.hpp"
#include "octo/slice_kernels.hpp"

using octo::Octonion;
using octo::PowerSeries;
using Catch::Approx;

namespace {

Octonion e(std::size_t i) { return Octonion::unit(i); }

Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = u(rng);
  return x;
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t degree, double decay = 0.8) {
  std::vector<Octonion> c(degree + 1);
  double s = 1.0;
  for (auto& a : c) {
    a = random_octonion(rng) * s;
    s *= decay;
  }
  return PowerSeries(c);
}

}  // namespace

TEST_CASE("construction", "[power-series]") {
  CHECK(PowerSeries().degree() == 0);
  CHECK(PowerSeries::monomial(3).coefficient(3) == Octonion(1.0));
  CHECK(PowerSeries::monomial(3).coefficient(9) == Octonion(0.0));
  CHECK_THROWS_AS(PowerSeries(std::vector<Octonion>{}), std::invalid_argument);
  Octonion bad;
  bad[2] = std::nan("");
  CHECK_THROWS_AS(PowerSeries({bad}), std::invalid_argument);
}

TEST_CASE("evaluate examples", "[power-series]") {
  const Octonion c = 1.0 + 2.0 * e(3);
  CHECK(evaluate(PowerSeries{c}, 0.3 * e(6)) == c);
  CHECK(evaluate(PowerSeries{Octonion(0.0), e(1)}, e(2)) == -e(4));
}

TEST_CASE("evaluate is sum of power(x, n) a_n", "[power-series]") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_series(rng, 10);
    const Octonion x = random_octonion(rng) * 0.5;
    Octonion direct(0.0);
    for (std::size_t n = 0; n <= f.degree(); ++n) direct += power(x, static_cast<std::uint32_t>(n)) * f.coefficient(n);
    CHECK(distance(evaluate(f, x), direct) <= 1e-14);
  }
}

TEST_CASE("evaluation on a slice splits into four holomorphic parts", "[power-series][splitting]") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const auto frame = octo::splitting_frame(octo::random_imaginary_unit(rng), static_cast<std::uint64_t>(k));
    const auto f = random_series(rng, 8);
    std::vector<octo::SplitComponents> parts;
    for (const Octonion& a : f.coefficients()) parts.push_back(octo::split_components(a, frame));

    const std::complex<double> z(0.4 * std::cos(k), 0.4 * std::sin(k) + 0.1);
    std::complex<double> f1, f2, g1, g2, zn = 1.0;
    for (const auto& p : parts) {
      f1 += zn * p.f1;
      f2 += zn * p.f2;
      g1 += zn * p.g1;
      g2 += zn * p.g2;
      zn *= z;
    }
    const auto got = octo::split_components(evaluate(f, octo::embed(z, frame.i1)), frame);
    CHECK(std::abs(got.f1 - f1) <= 1e-13);
    CHECK(std::abs(got.f2 - f2) <= 1e-13);
    CHECK(std::abs(got.g1 - g1) <= 1e-13);
    CHECK(std::abs(got.g2 - g2) <= 1e-13);
  }
}

TEST_CASE("coefficient Hardy inner product", "[power-series]") {
  CHECK(hardy_inner_coeff(PowerSeries{1.0}, PowerSeries{1.0}) == Octonion(1.0));
  CHECK(hardy_inner_coeff(PowerSeries{1.0, e(1)}, PowerSeries{0.0, e(2)}) == e(4));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_series(rng, 12), g = random_series(rng, 7);
    CHECK(distance(conjugate(hardy_inner_coeff(f, g)), hardy_inner_coeff(g, f)) <= 1e-12);
    const Octonion ff = hardy_inner_coeff(f, f);
    double s = 0.0;
    for (const auto& a : f.coefficients()) s += norm_sq(a);
    CHECK(ff.real() == Approx(s).epsilon(1e-14));
    CHECK(norm(ff.imag()) <= 1e-14);
    CHECK(hardy_norm(f) * hardy_norm(f) == Approx(ff.real()).epsilon(1e-14));
  }
  CHECK(hardy_inner_coeff(PowerSeries{0.0, 0.0}, PowerSeries{0.0}) == Octonion(0.0));
}

TEST_CASE("norms", "[power-series]") {
  CHECK(hardy_norm(PowerSeries::monomial(5)) == 1.0);
  CHECK(hardy_norm(PowerSeries{1.0, e(1)}) == Approx(std::sqrt(2.0)));
  CHECK(bergman_norm_sq(PowerSeries{1.0}) == 1.0);
  CHECK(bergman_norm_sq(PowerSeries{0.0, e(1)}) == 0.5);
}

TEST_CASE("Bergman norm matches disk quadrature", "[power-series][quadrature]") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_series(rng, 16);
    const auto axis = octo::random_imaginary_unit(rng);
    const Octonion q = octo::slice_bergman_inner_disk(f, f, axis, octo::DiskRule::for_degree(f.degree()));
    CHECK(std::abs(q.real() - bergman_norm_sq(f)) <= 1e-10);
  }
}

TEST_CASE("para-linearity", "[power-series]") {
  SECTION("real alpha") {
    const auto r = octo::para_linearity_residual(PowerSeries{e(1), e(3)}, PowerSeries{e(2)}, 2.5);
    CHECK(r.residual == 0.0);
    CHECK(r.full_gap == Octonion(0.0));
  }
  SECTION("non-linearity witness") {
    const auto r = octo::para_linearity_residual(PowerSeries{e(1)}, PowerSeries{e(2)}, e(3));
    CHECK(r.residual == 0.0);
    CHECK(r.full_gap == -2.0 * e(7));
  }
  SECTION("random") {
    std::mt19937_64 rng(5);
    double worst_gap = 0.0;
    for (int k = 0; k < 500; ++k) {
      const auto r = octo::para_linearity_residual(random_series(rng, 6), random_series(rng, 6), random_octonion(rng));
      CHECK(r.residual <= 1e-12);
      worst_gap = std::max(worst_gap, norm(r.full_gap));
    }
    CHECK(worst_gap > 0.1);
  }
}

TEST_CASE("axiom (v) for the coefficient product", "[power-series]") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_series(rng, 9);
    const Octonion alpha = random_octonion(rng);
    CHECK(distance(hardy_inner_coeff(f.right_multiply(alpha), f), hardy_inner_coeff(f, f) * alpha) <= 1e-12);
  }
}

TEST_CASE("series arithmetic", "[power-series]") {
  const PowerSeries a{1.0, e(1)}, b{e(2)};
  const auto s = a + b;
  CHECK(s.degree() == 1);
  CHECK(s.coefficient(0) == 1.0 + e(2));
  CHECK(s.coefficient(1) == e(1));
  CHECK((a * 2.0).coefficient(1) == 2.0 * e(1));
  CHECK(a.right_multiply(e(2)).coefficient(1) == e(4));
}

TEST_CASE("Szegő series coefficients", "[power-series]") {
  const Octonion x = 0.3 * e(2) + 0.1;
  const auto s = octo::szego_series(x, 4);
  CHECK(s.degree() == 4);
  CHECK(distance(s.coefficient(3), power(conjugate(x), 3)) <= 1e-16);
}
